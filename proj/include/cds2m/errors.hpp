#pragma once

#include <stdexcept>
#include <string>

namespace cds2m {

// Base type for all cds2m errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Edge endpoint outside 0..n-1.
struct InvalidEdge : Error {
    using Error::Error;
};

// Edge of the form (u,u).
struct SelfLoop : Error {
    using Error::Error;
};

// Malformed instance or solution file; carries the 1-based line number.
struct ParseError : Error {
    ParseError(const std::string& path, int line, const std::string& what)
        : Error(path + ":" + std::to_string(line) + ": " + what), line_no(line) {}
    int line_no;
};

// Ear rejected by apply_ear: endpoints not in S, interior touching S, etc.
struct EarNotOpen : Error {
    using Error::Error;
};

// Ear score requested for an ear without interior nodes.
struct EmptyInner : Error {
    using Error::Error;
};

// Selection from an empty candidate list.
struct EmptyList : Error {
    using Error::Error;
};

// Articulation points requested for a disconnected induced subgraph.
struct DisconnectedInput : Error {
    using Error::Error;
};

// Correction called on an infeasible solution.
struct InfeasibleInput : Error {
    using Error::Error;
};

// Exact solver called beyond its node limit.
struct TooLarge : Error {
    using Error::Error;
};

} // namespace cds2m
