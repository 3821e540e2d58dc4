#include "idom/generators.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace idom {

int LabeledGraph::vertex_with_label(const std::string& label) const {
    for (std::size_t v = 0; v < labels.size(); ++v)
        if (labels[v] == label) return static_cast<int>(v);
    return -1;
}

namespace {

// Collects edges, rejecting duplicates so constructions that would produce a
// parallel edge fail with a diagnostic instead of silently deduplicating.
struct Builder {
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen;
    std::vector<std::string> labels;

    int add_vertex(std::string label) {
        labels.push_back(std::move(label));
        return static_cast<int>(labels.size()) - 1;
    }

    void edge(int u, int v) {
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second)
            throw SpecError("construction yields a parallel edge between '" + labels[u] +
                            "' and '" + labels[v] + "'");
        edges.emplace_back(u, v);
    }

    LabeledGraph finish() {
        return {Graph::from_edge_list(static_cast<int>(labels.size()), edges),
                std::move(labels)};
    }
};

void require(bool cond, const std::string& msg) {
    if (!cond) throw SpecError(msg);
}

// Shared 8-vertex gadget core: K_{2,3} on {a1,a2|b1,b2,b3} with a pendant c_i
// on each b_i. The X variant joins c1c2 (pair ports, c3 the open leaf); the Y
// variant joins c1c2 and c2c3 (c1 and c3 the open degree-2 ports).
struct GadgetPorts {
    int pair1, pair2, leaf;  // X
    int y1, y2;              // Y
};

GadgetPorts add_gadget(Builder& b, bool is_x, const std::string& prefix) {
    auto name = [&](const char* role) { return prefix + role; };
    int a1 = b.add_vertex(name("a1"));
    int a2 = b.add_vertex(name("a2"));
    int bb[3];
    bb[0] = b.add_vertex(name("b1"));
    bb[1] = b.add_vertex(name("b2"));
    bb[2] = b.add_vertex(name("b3"));
    int c[3];
    if (is_x) {
        c[0] = b.add_vertex(name("pair1"));
        c[1] = b.add_vertex(name("pair2"));
        c[2] = b.add_vertex(name("c-leaf"));
    } else {
        c[0] = b.add_vertex(name("y1"));
        c[1] = b.add_vertex(name("c2"));
        c[2] = b.add_vertex(name("y2"));
    }
    for (int i = 0; i < 3; ++i) {
        b.edge(a1, bb[i]);
        b.edge(a2, bb[i]);
        b.edge(bb[i], c[i]);
    }
    b.edge(c[0], c[1]);
    if (!is_x) b.edge(c[1], c[2]);
    return {c[0], c[1], c[2], c[0], c[2]};
}

LabeledGraph make_path(int k) {
    require(k >= 1, "path requires k >= 1");
    Builder b;
    for (int i = 0; i < k; ++i) b.add_vertex("v" + std::to_string(i + 1));
    for (int i = 0; i + 1 < k; ++i) b.edge(i, i + 1);
    return b.finish();
}

LabeledGraph make_cycle(int k) {
    require(k >= 3, "cycle requires k >= 3");
    Builder b;
    for (int i = 0; i < k; ++i) b.add_vertex("v" + std::to_string(i + 1));
    for (int i = 0; i < k; ++i) b.edge(i, (i + 1) % k);
    return b.finish();
}

LabeledGraph make_complete_bipartite(int r, int s) {
    require(r >= 1 && s >= 1, "complete bipartite requires r,s >= 1");
    Builder b;
    for (int i = 0; i < r; ++i) b.add_vertex("left" + std::to_string(i + 1));
    for (int j = 0; j < s; ++j) b.add_vertex("right" + std::to_string(j + 1));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < s; ++j) b.edge(i, r + j);
    return b.finish();
}

LabeledGraph make_corona(int k, bool on_cycle) {
    require(k >= (on_cycle ? 3 : 1),
            on_cycle ? "corona of a cycle requires k >= 3" : "corona of a path requires k >= 1");
    Builder b;
    for (int i = 0; i < k; ++i) b.add_vertex("support");
    for (int i = 0; i < k; ++i) b.add_vertex("leaf");
    for (int i = 0; i + 1 < k; ++i) b.edge(i, i + 1);
    if (on_cycle) b.edge(k - 1, 0);
    for (int i = 0; i < k; ++i) b.edge(i, k + i);
    return b.finish();
}

LabeledGraph make_double_star(int r, int s) {
    require(r >= 1 && s >= 1, "double star requires r,s >= 1");
    Builder b;
    b.add_vertex("center1");
    b.add_vertex("center2");
    b.edge(0, 1);
    for (int i = 0; i < r; ++i) b.edge(0, b.add_vertex("leaf"));
    for (int i = 0; i < s; ++i) b.edge(1, b.add_vertex("leaf"));
    return b.finish();
}

LabeledGraph make_prism5() {
    Builder b;
    for (int i = 0; i < 5; ++i) b.add_vertex("outer" + std::to_string(i + 1));
    for (int i = 0; i < 5; ++i) b.add_vertex("inner" + std::to_string(i + 1));
    for (int i = 0; i < 5; ++i) {
        b.edge(i, (i + 1) % 5);
        b.edge(5 + i, 5 + (i + 1) % 5);
        b.edge(i, 5 + i);
    }
    return b.finish();
}

LabeledGraph make_k4_minus_e() {
    Builder b;
    for (int i = 0; i < 4; ++i) b.add_vertex("v" + std::to_string(i + 1));
    b.edge(0, 1);
    b.edge(0, 2);
    b.edge(0, 3);
    b.edge(1, 2);
    b.edge(1, 3);
    return b.finish();
}

LabeledGraph make_gcubic(int k) {
    require(k >= 1, "gcubic requires k >= 1");
    Builder b;
    static const char* top[4] = {"a", "b", "c", "d"};
    static const char* bot[4] = {"w", "x", "y", "z"};
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < 4; ++j) b.add_vertex(std::string(top[j]) + std::to_string(i + 1));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < 4; ++j) b.add_vertex(std::string(bot[j]) + std::to_string(i + 1));
    const int off = 4 * k;
    for (int v = 0; v < 4 * k; ++v) {
        b.edge(v, (v + 1) % (4 * k));
        b.edge(off + v, off + (v + 1) % (4 * k));
    }
    for (int i = 0; i < k; ++i) {
        const int t = 4 * i, u = off + 4 * i;
        b.edge(t + 0, u + 0);  // a_i w_i
        b.edge(t + 1, u + 1);  // b_i x_i
        b.edge(t + 2, u + 3);  // c_i z_i
        b.edge(t + 3, u + 2);  // d_i y_i
    }
    return b.finish();
}

LabeledGraph make_hcubic(int l) {
    require(l >= 1, "hcubic requires l >= 1");
    Builder b;
    static const char* ring[3] = {"a", "b", "c"};
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < 3; ++j) b.add_vertex(std::string(ring[j]) + std::to_string(i + 1));
    for (int v = 0; v < 3 * l; ++v) b.edge(v, (v + 1) % (3 * l));
    for (int i = 0; i < l; ++i) {
        const std::string idx = std::to_string(i + 1);
        int w = b.add_vertex("w" + idx);
        int x = b.add_vertex("x" + idx);
        int y = b.add_vertex("y" + idx);
        int z1 = b.add_vertex("z1_" + idx);
        int z2 = b.add_vertex("z2_" + idx);
        b.edge(3 * i + 0, w);
        b.edge(3 * i + 1, x);
        b.edge(3 * i + 2, y);
        for (int z : {z1, z2}) {
            b.edge(z, w);
            b.edge(z, x);
            b.edge(z, y);
        }
    }
    return b.finish();
}

LabeledGraph make_fcubic(const FamilySpec& spec) {
    const int k = spec.k;
    require(k >= 2, "fcubic requires k >= 2");
    require(static_cast<int>(spec.coloring.size()) == k,
            "fcubic coloring must have length k");
    std::vector<int> reds;
    for (int i = 0; i < k; ++i) {
        char c = spec.coloring[static_cast<std::size_t>(i)];
        require(c == 'R' || c == 'B', "fcubic coloring uses only R and B");
        if (c == 'R') reds.push_back(i);
    }
    require(reds.size() % 2 == 0, "fcubic needs an even number of red positions");
    if (k == 2) require(reds.empty(), "fcubic with k = 2 must be colored BB");

    std::vector<std::pair<int, int>> pairing = spec.pairing;
    std::set<int> covered;
    for (auto [p, q] : pairing) {
        require(p != q, "fcubic pairing must join two distinct positions");
        for (int pos : {p, q}) {
            require(pos >= 0 && pos < k &&
                        spec.coloring[static_cast<std::size_t>(pos)] == 'R',
                    "fcubic pairing position " + std::to_string(pos) + " is not red");
            require(covered.insert(pos).second, "fcubic pairing repeats position " +
                                                    std::to_string(pos));
        }
    }
    require(covered.size() == reds.size(),
            "fcubic pairing must cover every red position exactly once");

    Builder b;
    std::vector<GadgetPorts> ports;
    std::vector<bool> is_x(k);
    for (int i = 0; i < k; ++i) {
        is_x[i] = spec.coloring[static_cast<std::size_t>(i)] == 'R';
        ports.push_back(add_gadget(b, is_x[i], "copy" + std::to_string(i + 1) + ":"));
    }
    for (auto [p, q] : pairing) {
        b.edge(ports[p].pair1, ports[q].pair1);
        b.edge(ports[p].pair2, ports[q].pair2);
    }
    // Chain edge from copy i to copy i+1 (cyclically): X contributes its open
    // leaf on both sides, Y leaves through y2 and is entered through y1.
    for (int i = 0; i < k; ++i) {
        int j = (i + 1) % k;
        int out = is_x[i] ? ports[i].leaf : ports[i].y2;
        int in = is_x[j] ? ports[j].leaf : ports[j].y1;
        b.edge(out, in);
    }

    LabeledGraph out = b.finish();
    DegreeProfile prof = degree_profile(out.graph);
    require(prof.is_cubic, "fcubic construction failed to be cubic");
    require(is_connected(out.graph), "fcubic construction failed to be connected");
    return out;
}

}  // namespace

LabeledGraph sporadic(int id) {
    Builder b;
    switch (id) {
        case 1:  // C_4 = K_{2,2}
            for (int i = 0; i < 4; ++i) b.add_vertex("a" + std::to_string(i + 1));
            for (int i = 0; i < 4; ++i) b.edge(i, (i + 1) % 4);
            return b.finish();
        case 2:
            return make_complete_bipartite(3, 3);
        case 3:  // K_{2,3} plus a pendant on a degree-2 side vertex
            for (int i = 0; i < 6; ++i) b.add_vertex("a" + std::to_string(i + 1));
            b.edge(1, 0);
            b.edge(1, 2);
            b.edge(1, 4);
            b.edge(3, 0);
            b.edge(3, 2);
            b.edge(3, 4);
            b.edge(4, 5);
            return b.finish();
        case 4:
            return make_double_star(2, 2);
        case 5:  // P_6 plus the chord a2a5
            for (int i = 0; i < 6; ++i) b.add_vertex("a" + std::to_string(i + 1));
            for (int i = 0; i < 5; ++i) b.edge(i, i + 1);
            b.edge(1, 4);
            return b.finish();
        default:
            throw SpecError("sporadic id must be in 1..5, got " + std::to_string(id));
    }
}

LabeledGraph generate(const FamilySpec& spec) {
    switch (spec.tag) {
        case FamilyTag::Path:
            return make_path(spec.k);
        case FamilyTag::Cycle:
            return make_cycle(spec.k);
        case FamilyTag::CompleteBipartite:
            return make_complete_bipartite(spec.r, spec.s);
        case FamilyTag::CoronaPath:
            return make_corona(spec.k, false);
        case FamilyTag::CoronaCycle:
            return make_corona(spec.k, true);
        case FamilyTag::DoubleStar:
            return make_double_star(spec.r, spec.s);
        case FamilyTag::Sporadic:
            return sporadic(spec.id);
        case FamilyTag::Prism5:
            return make_prism5();
        case FamilyTag::K4MinusE:
            return make_k4_minus_e();
        case FamilyTag::GadgetX: {
            Builder b;
            add_gadget(b, true, "");
            return b.finish();
        }
        case FamilyTag::GadgetY: {
            Builder b;
            add_gadget(b, false, "");
            return b.finish();
        }
        case FamilyTag::GCubic:
            return make_gcubic(spec.k);
        case FamilyTag::HCubic:
            return make_hcubic(spec.l);
        case FamilyTag::FCubic:
            return make_fcubic(spec);
    }
    throw SpecError("unknown family tag");
}

namespace {

struct CopyView {
    bool is_x = false;
    std::map<std::string, int> role;  // role -> vertex
};

// Expected in-copy edges by role.
const std::vector<std::pair<const char*, const char*>> kXEdges = {
    {"a1", "b1"}, {"a1", "b2"}, {"a1", "b3"}, {"a2", "b1"}, {"a2", "b2"}, {"a2", "b3"},
    {"b1", "pair1"}, {"b2", "pair2"}, {"b3", "c-leaf"}, {"pair1", "pair2"},
};
const std::vector<std::pair<const char*, const char*>> kYEdges = {
    {"a1", "b1"}, {"a1", "b2"}, {"a1", "b3"}, {"a2", "b1"}, {"a2", "b2"}, {"a2", "b3"},
    {"b1", "y1"}, {"b2", "c2"}, {"b3", "y2"}, {"y1", "c2"}, {"c2", "y2"},
};

}  // namespace

WiringAudit fcubic_connection_audit(const LabeledGraph& lg) {
    WiringAudit audit;
    auto fail = [&](int copy, std::string detail) {
        audit.issues.push_back({copy, std::move(detail)});
    };
    const Graph& g = lg.graph;
    const int n = g.order();

    // Parse "copy<i>:<role>" labels.
    std::map<int, CopyView> copies;
    std::vector<int> copy_of(n, -1);
    for (int v = 0; v < n; ++v) {
        const std::string& label = lg.labels[static_cast<std::size_t>(v)];
        auto colon = label.find(':');
        if (label.rfind("copy", 0) != 0 || colon == std::string::npos) {
            fail(0, "vertex " + std::to_string(v) + " lacks a copy label: '" + label + "'");
            return audit;
        }
        int idx = 0;
        try {
            idx = std::stoi(label.substr(4, colon - 4));
        } catch (...) {
            fail(0, "unparsable copy index in label '" + label + "'");
            return audit;
        }
        std::string role = label.substr(colon + 1);
        if (!copies[idx].role.emplace(role, v).second) {
            fail(idx, "duplicate role '" + role + "'");
            return audit;
        }
        copy_of[v] = idx;
    }
    const int k = static_cast<int>(copies.size());
    if (n != 8 * k || copies.begin()->first != 1 || copies.rbegin()->first != k) {
        fail(0, "copies must be 1..k with 8 vertices each (n=" + std::to_string(n) + ")");
        return audit;
    }

    // Identify copy types and verify internal edges exactly.
    for (auto& [idx, copy] : copies) {
        copy.is_x = copy.role.count("c-leaf") > 0;
        const auto& expected = copy.is_x ? kXEdges : kYEdges;
        if (copy.role.size() != 8) {
            fail(idx, "copy does not have 8 labeled vertices");
            return audit;
        }
        for (const auto& [ra, rb] : expected) {
            auto ia = copy.role.find(ra), ib = copy.role.find(rb);
            if (ia == copy.role.end() || ib == copy.role.end()) {
                fail(idx, std::string("missing role '") + (ia == copy.role.end() ? ra : rb) + "'");
                return audit;
            }
            if (!g.has_edge(ia->second, ib->second))
                fail(idx, std::string("missing internal edge ") + ra + "-" + rb);
        }
        int internal = 0;
        for (const auto& [role, v] : copy.role)
            for (int u : g.neighbors(v))
                if (copy_of[u] == idx) ++internal;
        if (internal / 2 != static_cast<int>(expected.size()))
            fail(idx, "unexpected extra internal edge");
    }
    if (!audit.ok()) return audit;

    auto cross_neighbors = [&](int copy, const char* role) {
        std::vector<int> out;
        int v = copies[copy].role.at(role);
        for (int u : g.neighbors(v))
            if (copy_of[u] != copy) out.push_back(u);
        return out;
    };

    // Pair ports of each X-copy must match one partner X-copy's pair ports.
    std::map<int, int> partner;
    for (auto& [idx, copy] : copies) {
        if (!copy.is_x) continue;
        auto n1 = cross_neighbors(idx, "pair1");
        auto n2 = cross_neighbors(idx, "pair2");
        if (n1.size() != 1 || n2.size() != 1) {
            fail(idx, "each pair port needs exactly one external edge");
            continue;
        }
        int c1 = copy_of[n1[0]], c2 = copy_of[n2[0]];
        if (c1 != c2 || c1 == idx || !copies[c1].is_x) {
            fail(idx, "pair ports must both reach one other X-copy");
            continue;
        }
        const auto& mate = copies[c1].role;
        bool onto_pair_ports =
            (n1[0] == mate.at("pair1") || n1[0] == mate.at("pair2")) &&
            (n2[0] == mate.at("pair1") || n2[0] == mate.at("pair2")) && n1[0] != n2[0];
        if (!onto_pair_ports) {
            fail(idx, "pairing edges must land on the partner's two pair ports");
            continue;
        }
        partner[idx] = c1;
    }
    for (auto [a, p] : partner)
        if (partner.count(p) == 0 || partner[p] != a)
            fail(a, "pairing with copy " + std::to_string(p) + " is not mutual");
    if (!audit.ok()) return audit;

    // Exactly one chain edge between consecutive copies, with prescribed roles.
    for (int i = 1; i <= k; ++i) {
        int j = i % k + 1;
        int out = copies[i].role.at(copies[i].is_x ? "c-leaf" : "y2");
        int in = copies[j].role.at(copies[j].is_x ? "c-leaf" : "y2");
        in = copies[j].role.at(copies[j].is_x ? "c-leaf" : "y1");
        if (!g.has_edge(out, in)) {
            fail(i, "missing chain edge to copy " + std::to_string(j));
            continue;
        }
    }
    // No stray cross edges: every cross edge must be a pairing or chain edge.
    std::set<std::pair<int, int>> allowed;
    for (auto [a, p] : partner) {
        if (a > p) continue;
        allowed.insert(std::minmax(copies[a].role.at("pair1"), copies[p].role.at("pair1")));
        allowed.insert(std::minmax(copies[a].role.at("pair2"), copies[p].role.at("pair2")));
    }
    for (int i = 1; i <= k; ++i) {
        int j = i % k + 1;
        int out = copies[i].role.at(copies[i].is_x ? "c-leaf" : "y2");
        int in = copies[j].role.at(copies[j].is_x ? "c-leaf" : "y1");
        allowed.insert(std::minmax(out, in));
    }
    for (auto [u, v] : g.edges())
        if (copy_of[u] != copy_of[v] && !allowed.count(std::minmax(u, v)))
            fail(copy_of[u], "unexpected cross edge " + std::to_string(u) + "-" +
                                 std::to_string(v));

    DegreeProfile prof = degree_profile(g);
    if (!prof.is_cubic) fail(0, "graph is not cubic");
    if (!is_connected(g)) fail(0, "graph is not connected");
    return audit;
}

namespace {

std::vector<std::string> split_top_level(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

int parse_int(const std::string& token, const std::string& context) {
    try {
        std::size_t used = 0;
        int value = std::stoi(token, &used);
        if (used != token.size()) throw std::invalid_argument("trailing");
        return value;
    } catch (...) {
        throw SpecError("expected an integer for " + context + ", got '" + token + "'");
    }
}

std::vector<std::pair<int, int>> parse_pairing(const std::string& token) {
    std::string body = token;
    if (body.size() >= 2 && body.front() == '(' && body.back() == ')')
        body = body.substr(1, body.size() - 2);
    std::vector<std::pair<int, int>> out;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto dash = item.find('-');
        if (dash == std::string::npos)
            throw SpecError("pairing entry '" + item + "' must look like 'p-q'");
        out.emplace_back(parse_int(item.substr(0, dash), "pairing"),
                         parse_int(item.substr(dash + 1), "pairing"));
    }
    return out;
}

}  // namespace

FamilySpec parse_family_spec(const std::string& text) {
    const auto colon = text.find(':');
    const std::string tag = text.substr(0, colon);
    const std::string rest = colon == std::string::npos ? "" : text.substr(colon + 1);

    static const std::map<std::string, FamilyTag> kTags = {
        {"path", FamilyTag::Path},
        {"cycle", FamilyTag::Cycle},
        {"complete-bipartite", FamilyTag::CompleteBipartite},
        {"kbip", FamilyTag::CompleteBipartite},
        {"cor-path", FamilyTag::CoronaPath},
        {"cor-cycle", FamilyTag::CoronaCycle},
        {"double-star", FamilyTag::DoubleStar},
        {"sporadic", FamilyTag::Sporadic},
        {"prism5", FamilyTag::Prism5},
        {"k4-minus-e", FamilyTag::K4MinusE},
        {"gadget-x", FamilyTag::GadgetX},
        {"gadget-y", FamilyTag::GadgetY},
        {"gcubic", FamilyTag::GCubic},
        {"hcubic", FamilyTag::HCubic},
        {"fcubic", FamilyTag::FCubic},
    };
    auto it = kTags.find(tag);
    if (it == kTags.end()) throw SpecError("unknown family '" + tag + "'");

    FamilySpec spec;
    spec.tag = it->second;
    bool pairing_given = false;
    for (const std::string& token : split_top_level(rest)) {
        if (token.empty()) continue;
        auto eq = token.find('=');
        if (eq == std::string::npos) {
            if (spec.tag == FamilyTag::Sporadic) {
                spec.id = parse_int(token, "sporadic id");
                continue;
            }
            throw SpecError("expected key=value in family spec, got '" + token + "'");
        }
        const std::string key = token.substr(0, eq);
        const std::string value = token.substr(eq + 1);
        if (key == "k")
            spec.k = parse_int(value, "k");
        else if (key == "l")
            spec.l = parse_int(value, "l");
        else if (key == "r")
            spec.r = parse_int(value, "r");
        else if (key == "s")
            spec.s = parse_int(value, "s");
        else if (key == "id")
            spec.id = parse_int(value, "id");
        else if (key == "color")
            spec.coloring = value;
        else if (key == "pair") {
            spec.pairing = parse_pairing(value);
            pairing_given = true;
        } else
            throw SpecError("unknown family spec key '" + key + "'");
    }
    // Default fcubic pairing: R positions paired in listed order.
    if (spec.tag == FamilyTag::FCubic && !pairing_given) {
        std::vector<int> reds;
        for (std::size_t i = 0; i < spec.coloring.size(); ++i)
            if (spec.coloring[i] == 'R') reds.push_back(static_cast<int>(i));
        for (std::size_t i = 0; i + 1 < reds.size(); i += 2)
            spec.pairing.emplace_back(reds[i], reds[i + 1]);
    }
    return spec;
}

}  // namespace idom
