#pragma once

#include <string>
#include <utility>
#include <vector>

#include "idom/graph.hpp"

namespace idom {

enum class FamilyTag {
    Path,
    Cycle,
    CompleteBipartite,
    CoronaPath,
    CoronaCycle,
    DoubleStar,
    Sporadic,
    Prism5,
    K4MinusE,
    GadgetX,
    GadgetY,
    GCubic,
    HCubic,
    FCubic,
};

// Declarative description of a named construction. Only the fields relevant
// to the tag are read. FCubic takes a coloring word over {R,B} of length k
// plus a perfect matching on the R positions (0-based cycle positions).
struct FamilySpec {
    FamilyTag tag = FamilyTag::Path;
    int k = 0;
    int l = 0;
    int r = 0;
    int s = 0;
    int id = 0;
    std::string coloring;
    std::vector<std::pair<int, int>> pairing;
};

// A graph whose vertices carry role labels that follow the construction's
// naming ("copy2:b3", "support", "leaf", ...), so tests and audits can target
// the structurally named vertices.
struct LabeledGraph {
    Graph graph;
    std::vector<std::string> labels;

    // Index of the unique vertex with this label; -1 if absent.
    int vertex_with_label(const std::string& label) const;
};

LabeledGraph generate(const FamilySpec& spec);

// The five equality graphs: 1 = C_4, 2 = K_{3,3}, 3 = K_{2,3} with a pendant
// on a degree-2 side vertex, 4 = double star S(2,2), 5 = P_6 plus a chord
// joining the second and fifth vertices.
LabeledGraph sporadic(int id);

struct WiringIssue {
    int copy = 0;  // 1-based copy index, 0 when not attributable
    std::string detail;
};

struct WiringAudit {
    std::vector<WiringIssue> issues;
    bool ok() const { return issues.empty(); }
};

// Verifies the chained-gadget wiring of a graph labeled like an FCubic
// output: intact gadget copies, pair ports matched against a single partner
// copy's pair ports, exactly one chain edge between consecutive copies with
// the endpoint roles the construction dictates, and the whole graph cubic
// and connected.
WiringAudit fcubic_connection_audit(const LabeledGraph& g);

// Parses CLI family strings such as "fcubic:k=4,color=RBRB,pair=(0-2)",
// "gcubic:k=2", "cor-path:k=5", "sporadic:3". When an fcubic pairing is
// omitted, R positions are paired in listed order.
FamilySpec parse_family_spec(const std::string& text);

}  // namespace idom
