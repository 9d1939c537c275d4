#ifndef UNIREX_ERROR_HPP
#define UNIREX_ERROR_HPP

#include <stdexcept>
#include <string>

namespace unirex {

enum class ErrorKind {
    // graph file / construction
    syntax,
    unknown_vertex,
    duplicate_vertex,
    duplicate_edge,
    invalid_label,
    // structural preconditions
    empty_component,
    not_a_tree,
    edge_absent,
    disconnected,
    // counting
    overflow,
    invalid_args,
    // oracle
    not_infinite,
    would_not_terminate,
    // catalog
    invalid_family,
    invalid_rank,
    // cli
    verification_mismatch,
};

// Single exception type for all library failures; kind() identifies what went
// wrong so callers (and tests) can dispatch without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace unirex

#endif // UNIREX_ERROR_HPP
