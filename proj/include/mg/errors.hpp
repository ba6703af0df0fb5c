#pragma once

#include <stdexcept>
#include <string>

namespace mg {

/// Input fails a documented precondition (bad matrix, bad parameter).
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// A gate was requested on a pair that is not an edge of the host graph.
struct TopologyError : std::runtime_error {
    explicit TopologyError(const std::string& what) : std::runtime_error(what) {}
};

/// State relocation is impossible with the available holes.
struct RoutingError : std::runtime_error {
    explicit RoutingError(const std::string& what) : std::runtime_error(what) {}
};

/// No strategy applies, or the circuit does not fit the graph.
struct CompileError : std::runtime_error {
    explicit CompileError(const std::string& what) : std::runtime_error(what) {}
};

/// Statevector cap (or another hard resource limit) exceeded.
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed circuit/graph/schedule file.
struct ParseError : std::runtime_error {
    ParseError(const std::string& what, int line) : std::runtime_error(what), line_number(line) {}
    int line_number;
};

}  // namespace mg
