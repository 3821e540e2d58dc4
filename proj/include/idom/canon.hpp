#pragma once

#include <string>

#include "idom/graph.hpp"

namespace idom {

// Default order ceiling for canonical labeling; the enumerator never needs
// more and the search is only tuned for small graphs.
inline constexpr int kDefaultCanonCeiling = 14;

// Relabel-invariant code: one byte of order, then the row-major
// upper-triangle adjacency bits of the lexicographically minimal labeling
// reachable through the refinement search. Equal codes iff isomorphic.
struct CanonicalForm {
    std::string code;

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
    friend auto operator<=>(const CanonicalForm& a, const CanonicalForm& b) {
        return a.code <=> b.code;
    }
};

CanonicalForm canonical_form(const Graph& g, int ceiling = kDefaultCanonCeiling);

bool is_isomorphic(const Graph& g, const Graph& h, int ceiling = kDefaultCanonCeiling);

// Rebuilds the canonically labeled graph from a code.
Graph graph_from_canonical_code(const std::string& code);

}  // namespace idom
