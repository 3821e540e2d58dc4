#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "idom/errors.hpp"

namespace idom {

// Fixed-width bit set over vertex indices 0..n-1 of an implied graph.
// The capacity covers everything this toolkit touches: enumeration stops in
// the mid-teens and the generated families stay well under 100 vertices.
// All operations run word-parallel over a fixed number of 64-bit words.
class VertexSet {
public:
    static constexpr int kWords = 4;
    static constexpr int kCapacity = kWords * 64;

    constexpr VertexSet() = default;

    static VertexSet full(int n) {
        VertexSet s;
        for (int w = 0; w < kWords && n > 0; ++w, n -= 64)
            s.w_[w] = n >= 64 ? ~0ULL : ((1ULL << n) - 1);
        return s;
    }

    static VertexSet of(std::initializer_list<int> xs) {
        VertexSet s;
        for (int x : xs) s.set(x);
        return s;
    }

    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1ULL; }
    void set(int i) { w_[i >> 6] |= 1ULL << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(1ULL << (i & 63)); }

    int count() const {
        int c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (auto w : w_)
            if (w) return false;
        return true;
    }

    bool intersects(const VertexSet& o) const {
        for (int i = 0; i < kWords; ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    bool is_subset_of(const VertexSet& o) const {
        for (int i = 0; i < kWords; ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    VertexSet& operator|=(const VertexSet& o) {
        for (int i = 0; i < kWords; ++i) w_[i] |= o.w_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        for (int i = 0; i < kWords; ++i) w_[i] &= o.w_[i];
        return *this;
    }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }

    // Set difference: elements of *this not in o.
    VertexSet minus(const VertexSet& o) const {
        VertexSet s;
        for (int i = 0; i < kWords; ++i) s.w_[i] = w_[i] & ~o.w_[i];
        return s;
    }

    // Smallest element, -1 when empty.
    int first() const {
        for (int i = 0; i < kWords; ++i)
            if (w_[i]) return i * 64 + std::countr_zero(w_[i]);
        return -1;
    }

    // Smallest element strictly greater than `after`, -1 when none.
    int next(int after) const {
        int from = after + 1;
        if (from >= kCapacity) return -1;
        int w = from >> 6;
        std::uint64_t word = w_[w] & (~0ULL << (from & 63));
        while (true) {
            if (word) return w * 64 + std::countr_zero(word);
            if (++w >= kWords) return -1;
            word = w_[w];
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
        return out;
    }

    // Lexicographic order on the sorted index sequences.
    bool lex_less(const VertexSet& o) const {
        int a = first(), b = o.first();
        while (a >= 0 && b >= 0) {
            if (a != b) return a < b;
            a = next(a);
            b = o.next(b);
        }
        return a < 0 && b >= 0;
    }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::array<std::uint64_t, kWords> w_{};
};

// Immutable simple undirected graph on dense vertex indices 0..n-1.
// Keeps a sorted adjacency list and a per-vertex neighbor bit set; both views
// always describe the same edge set.
class Graph {
public:
    // Builds a graph from an edge list. Parallel edges are deduplicated;
    // self-loops and out-of-range endpoints are construction errors.
    static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    int size() const { return m_; }

    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    const VertexSet& neighbor_bits(int v) const { return bits_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const { return bits_[u].test(v); }

    // Edges as (u, v) pairs with u < v, in lexicographic order.
    std::vector<std::pair<int, int>> edges() const;

private:
    Graph() = default;

    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<VertexSet> bits_;
};

struct DegreeProfile {
    int min_degree = 0;
    int max_degree = 0;
    bool is_subcubic = true;
    bool is_cubic = false;
};

DegreeProfile degree_profile(const Graph& g);

// Connected components as vertex sets, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);

bool is_connected(const Graph& g);

struct Bipartition {
    VertexSet left;
    VertexSet right;
};

// Two-coloring per connected component, or nullopt if some component has an
// odd cycle. left/right partition V and are both independent.
std::optional<Bipartition> bipartition(const Graph& g);

// A simple odd cycle as a vertex sequence (consecutive entries adjacent,
// last adjacent to first), or nullopt iff the graph is bipartite.
std::optional<std::vector<int>> find_odd_cycle(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> old_to_new;  // -1 for dropped vertices
    std::vector<int> new_to_old;
};

// Induced subgraph on V \ drop, with the index maps between labelings.
InducedSubgraph remove_vertices(const Graph& g, const VertexSet& drop);

struct IdSetCheck {
    bool independent = false;
    bool dominating = false;
};

// independent: no edge inside s. dominating: every vertex outside s has a
// neighbor in s.
IdSetCheck is_id_set(const Graph& g, const VertexSet& s);

}  // namespace idom
