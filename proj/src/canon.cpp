#include "idom/canon.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

namespace idom {

namespace {

// Colors are invariant ranks: a vertex's color depends only on structure,
// never on input labels. Refinement re-keys each vertex by (color, sorted
// neighbor colors) and renumbers by key rank until the partition stabilizes.
struct Refiner {
    const Graph& g;
    int n;

    int refine(std::vector<int>& color) const {
        int classes = renumber(color);
        while (true) {
            std::vector<std::pair<std::vector<int>, int>> keyed(n);
            for (int v = 0; v < n; ++v) {
                std::vector<int> key;
                key.reserve(g.degree(v) + 1);
                key.push_back(color[v]);
                for (int u : g.neighbors(v)) key.push_back(color[u]);
                std::sort(key.begin() + 1, key.end());
                keyed[v] = {std::move(key), v};
            }
            std::sort(keyed.begin(), keyed.end());
            int c = -1;
            for (std::size_t i = 0; i < keyed.size(); ++i) {
                if (i == 0 || keyed[i].first != keyed[i - 1].first) ++c;
                color[keyed[i].second] = c;
            }
            if (c + 1 == classes) return classes;
            classes = c + 1;
        }
    }

    static int renumber(std::vector<int>& color) {
        std::vector<int> values(color);
        std::sort(values.begin(), values.end());
        values.erase(std::unique(values.begin(), values.end()), values.end());
        for (int& c : color)
            c = static_cast<int>(std::lower_bound(values.begin(), values.end(), c) -
                                 values.begin());
        return static_cast<int>(values.size());
    }
};

std::string encode(const Graph& g, const std::vector<int>& position) {
    const int n = g.order();
    std::vector<int> vertex_at(n);
    for (int v = 0; v < n; ++v) vertex_at[position[v]] = v;
    std::string code;
    code.push_back(static_cast<char>(n));
    code.resize(1 + (static_cast<std::size_t>(n) * (n - 1) / 2 + 7) / 8, '\0');
    long bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if (g.has_edge(vertex_at[i], vertex_at[j]))
                code[1 + bit / 8] |= static_cast<char>(0x80u >> (bit & 7));
    return code;
}

struct CanonSearch {
    const Graph& g;
    Refiner refiner;
    std::string best;
    bool have = false;

    void run(std::vector<int> color) {
        int classes = refiner.refine(color);
        const int n = g.order();
        if (classes == n) {
            std::string code = encode(g, color);
            if (!have || code < best) {
                best = std::move(code);
                have = true;
            }
            return;
        }
        // Individualize each member of the first non-singleton class; the set
        // of leaf codes is an isomorphism invariant, so its minimum is too.
        int target = -1;
        std::vector<int> cell_count(classes, 0);
        for (int c : color) ++cell_count[c];
        for (int c = 0; c < classes; ++c)
            if (cell_count[c] > 1) {
                target = c;
                break;
            }
        for (int v = 0; v < n; ++v) {
            if (color[v] != target) continue;
            std::vector<int> child(color);
            child[v] = classes;  // fresh color, identical value in every branch
            run(std::move(child));
        }
    }
};

}  // namespace

CanonicalForm canonical_form(const Graph& g, int ceiling) {
    const int n = g.order();
    if (n > ceiling)
        throw CapacityError("canonical form: order " + std::to_string(n) +
                            " above ceiling " + std::to_string(ceiling));
    if (n > 64) throw CapacityError("canonical form supports n <= 64");
    std::vector<int> color(n);
    for (int v = 0; v < n; ++v) color[v] = g.degree(v);
    CanonSearch search{g, Refiner{g, n}};
    if (n == 0) return {std::string(1, '\0')};
    search.run(std::move(color));
    return {search.best};
}

bool is_isomorphic(const Graph& g, const Graph& h, int ceiling) {
    if (g.order() != h.order() || g.size() != h.size()) return false;
    return canonical_form(g, ceiling) == canonical_form(h, ceiling);
}

Graph graph_from_canonical_code(const std::string& code) {
    if (code.empty()) throw FormatError("empty canonical code");
    const int n = static_cast<unsigned char>(code[0]);
    const std::size_t want = 1 + (static_cast<std::size_t>(n) * (n - 1) / 2 + 7) / 8;
    if (code.size() != want) throw FormatError("canonical code has wrong length");
    std::vector<std::pair<int, int>> edges;
    long bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if (static_cast<unsigned char>(code[1 + bit / 8]) & (0x80u >> (bit & 7)))
                edges.emplace_back(i, j);
    return Graph::from_edge_list(n, edges);
}

}  // namespace idom
