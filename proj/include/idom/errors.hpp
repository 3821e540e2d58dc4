#pragma once

#include <stdexcept>
#include <string>

namespace idom {

// Base for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input exceeds a configured or structural size ceiling.
struct CapacityError : Error {
    using Error::Error;
};

// Graph construction rejected the input (self-loop, bad index).
struct GraphError : Error {
    using Error::Error;
};

// A family spec violates its invariants or would build an invalid graph.
struct SpecError : Error {
    using Error::Error;
};

// A serialized graph could not be parsed.
struct FormatError : Error {
    using Error::Error;
};

// The half-bound construction blew its size budget on some subgraph.
// Reachable only through a transcription bug or injected fault; carries the
// offending subgraph so campaigns can report it.
struct BudgetError : Error {
    using Error::Error;
};

}  // namespace idom
