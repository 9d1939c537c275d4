#ifndef UNIREX_COUNT_HPP
#define UNIREX_COUNT_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "unirex/graph.hpp"

namespace unirex {

// Number of elements with a unique reduced expression: an exact nonnegative
// integer, or infinite (optionally carrying the component reason).
class UCount {
public:
    static UCount finite(std::uint64_t value) {
        UCount u;
        u.value_ = value;
        return u;
    }
    static UCount infinite(std::optional<InfiniteReason> reason = std::nullopt) {
        UCount u;
        u.finite_ = false;
        u.reason_ = std::move(reason);
        return u;
    }

    bool is_finite() const { return finite_; }
    std::uint64_t value() const {
        if (!finite_) throw Error(ErrorKind::invalid_args, "count is infinite");
        return value_;
    }
    const std::optional<InfiniteReason>& infinite_reason() const { return reason_; }

private:
    UCount() = default;
    bool finite_ = true;
    std::uint64_t value_ = 0;
    std::optional<InfiniteReason> reason_;
};

// Finiteness and value agreement; infinite reasons are not compared.
inline bool operator==(const UCount& x, const UCount& y) {
    if (x.is_finite() != y.is_finite()) return false;
    return !x.is_finite() || x.value() == y.value();
}

// Chains in a tree of order n: n(n+1)/2 in total, n(n-1)/2 of length >= 2.
std::uint64_t chain_count_total(std::uint64_t n);
std::uint64_t chain_count_at_least_two(std::uint64_t n);

// Simply laced tree on n >= 1 vertices: n^2 + 1.
std::uint64_t u_simply_laced_tree(std::uint64_t n);

// The two branch formulas for a tree with one high edge. The even branch is
// m n^2 / 2 + 1 - 2ab; the odd branch (m-1) n^2 / 2 + 1 depends on a, b only
// through n and degenerates to n^2 + 1 at m = 3.
std::uint64_t u_high_edge_even(std::uint64_t n, std::uint64_t m, std::uint64_t a, std::uint64_t b);
std::uint64_t u_high_edge_odd(std::uint64_t n, std::uint64_t m);

// Tree with exactly one edge labelled m >= 4, split sizes a + b = n.
std::uint64_t u_single_high_edge(std::uint64_t n, std::uint64_t m, std::uint64_t a,
                                 std::uint64_t b);

UCount u_component(const ComponentClass& c);

// Whole-graph count: sum of component counts minus (k - 1) over k components;
// the empty graph counts 1 (the identity). Infinite as soon as any component
// is, carrying the first such component's reason.
UCount u_graph(const CoxeterGraph& g);

struct FinitenessReport {
    bool finite;
    // (1-based component id, class), in component order
    std::vector<std::pair<int, ComponentClass>> per_component;
};

FinitenessReport finiteness(const CoxeterGraph& g);

} // namespace unirex

#endif // UNIREX_COUNT_HPP
