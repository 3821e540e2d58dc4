#include "idom/graph.hpp"

#include <algorithm>
#include <string>

namespace idom {

Graph Graph::from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw GraphError("vertex count must be non-negative");
    if (n > VertexSet::kCapacity)
        throw CapacityError("graph order " + std::to_string(n) + " exceeds capacity " +
                            std::to_string(VertexSet::kCapacity));
    Graph g;
    g.n_ = n;
    g.bits_.assign(n, VertexSet{});
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw GraphError("edge endpoint out of range: (" + std::to_string(u) + "," +
                             std::to_string(v) + ") with n=" + std::to_string(n));
        if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
        if (g.bits_[u].test(v)) continue;  // parallel edge, dedup
        g.bits_[u].set(v);
        g.bits_[v].set(u);
        ++g.m_;
    }
    g.adj_.resize(n);
    for (int v = 0; v < n; ++v) g.adj_[v] = g.bits_[v].to_vector();
    return g;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

DegreeProfile degree_profile(const Graph& g) {
    DegreeProfile p;
    const int n = g.order();
    if (n == 0) return p;
    p.min_degree = g.degree(0);
    p.max_degree = g.degree(0);
    for (int v = 1; v < n; ++v) {
        p.min_degree = std::min(p.min_degree, g.degree(v));
        p.max_degree = std::max(p.max_degree, g.degree(v));
    }
    p.is_subcubic = p.max_degree <= 3;
    p.is_cubic = p.min_degree == 3 && p.max_degree == 3;
    return p;
}

std::vector<VertexSet> components(const Graph& g) {
    const int n = g.order();
    std::vector<VertexSet> out;
    VertexSet seen;
    for (int root = 0; root < n; ++root) {
        if (seen.test(root)) continue;
        VertexSet comp;
        comp.set(root);
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet nxt;
            for (int v = frontier.first(); v >= 0; v = frontier.next(v))
                nxt |= g.neighbor_bits(v);
            frontier = nxt.minus(comp);
            comp |= frontier;
        }
        seen |= comp;
        out.push_back(comp);
    }
    return out;
}

bool is_connected(const Graph& g) {
    if (g.order() <= 1) return true;
    return components(g).size() == 1;
}

namespace {

// BFS forest with per-vertex depth and parent; roots chosen by smallest
// unvisited index, neighbors visited in sorted order.
struct BfsForest {
    std::vector<int> depth;
    std::vector<int> parent;
};

BfsForest bfs_forest(const Graph& g) {
    const int n = g.order();
    BfsForest f{std::vector<int>(n, -1), std::vector<int>(n, -1)};
    std::vector<int> queue;
    queue.reserve(n);
    for (int root = 0; root < n; ++root) {
        if (f.depth[root] >= 0) continue;
        f.depth[root] = 0;
        queue.clear();
        queue.push_back(root);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            for (int v : g.neighbors(u)) {
                if (f.depth[v] >= 0) continue;
                f.depth[v] = f.depth[u] + 1;
                f.parent[v] = u;
                queue.push_back(v);
            }
        }
    }
    return f;
}

}  // namespace

std::optional<Bipartition> bipartition(const Graph& g) {
    const int n = g.order();
    BfsForest f = bfs_forest(g);
    Bipartition parts;
    for (int v = 0; v < n; ++v)
        (f.depth[v] % 2 == 0 ? parts.left : parts.right).set(v);
    // An edge inside a side means an odd cycle.
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u))
            if (u < v && f.depth[u] % 2 == f.depth[v] % 2) return std::nullopt;
    return parts;
}

std::optional<std::vector<int>> find_odd_cycle(const Graph& g) {
    const int n = g.order();
    BfsForest f = bfs_forest(g);
    // In a BFS forest every non-tree edge joins vertices whose depths differ
    // by at most one, so an odd cycle exists iff some edge stays in a layer.
    // First such edge in (u, v) index order, for determinism.
    for (int u = 0; u < n; ++u) {
        for (int v : g.neighbors(u)) {
            if (u >= v || f.depth[u] != f.depth[v]) continue;
            // Walk both tree paths up to the lowest common ancestor.
            std::vector<int> pu{u}, pv{v};
            int a = u, b = v;
            while (a != b) {
                a = f.parent[a];
                b = f.parent[b];
                pu.push_back(a);
                pv.push_back(b);
            }
            // pu ends at the LCA; emit lca .. u, then v .. child-of-lca.
            std::vector<int> cycle(pu.rbegin(), pu.rend());
            for (std::size_t i = 0; i + 1 < pv.size(); ++i) cycle.push_back(pv[i]);
            return cycle;
        }
    }
    return std::nullopt;
}

InducedSubgraph remove_vertices(const Graph& g, const VertexSet& drop) {
    const int n = g.order();
    InducedSubgraph out;
    out.old_to_new.assign(n, -1);
    for (int v = 0; v < n; ++v) {
        if (drop.test(v)) continue;
        out.old_to_new[v] = static_cast<int>(out.new_to_old.size());
        out.new_to_old.push_back(v);
    }
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        if (drop.test(u)) continue;
        for (int v : g.neighbors(u))
            if (u < v && !drop.test(v)) edges.emplace_back(out.old_to_new[u], out.old_to_new[v]);
    }
    out.graph = Graph::from_edge_list(static_cast<int>(out.new_to_old.size()), edges);
    return out;
}

IdSetCheck is_id_set(const Graph& g, const VertexSet& s) {
    if (!s.is_subset_of(VertexSet::full(g.order())))
        throw GraphError("vertex set contains indices outside the graph");
    IdSetCheck c{true, true};
    for (int v = s.first(); v >= 0; v = s.next(v))
        if (g.neighbor_bits(v).intersects(s)) {
            c.independent = false;
            break;
        }
    VertexSet rest = VertexSet::full(g.order()).minus(s);
    for (int v = rest.first(); v >= 0; v = rest.next(v))
        if (!g.neighbor_bits(v).intersects(s)) {
            c.dominating = false;
            break;
        }
    return c;
}

}  // namespace idom
