#include "unirex/count.hpp"

#include "unirex/checked.hpp"

namespace unirex {

std::uint64_t chain_count_total(std::uint64_t n) {
    // n(n+1)/2 with the even factor halved first
    if (n % 2 == 0) return checked_mul(n / 2, n + 1);
    return checked_mul(n, (n + 1) / 2);
}

std::uint64_t chain_count_at_least_two(std::uint64_t n) {
    if (n == 0) return 0;
    if (n % 2 == 0) return checked_mul(n / 2, n - 1);
    return checked_mul(n, (n - 1) / 2);
}

std::uint64_t u_simply_laced_tree(std::uint64_t n) {
    if (n < 1) throw Error(ErrorKind::invalid_args, "tree order must be >= 1");
    return checked_add(checked_mul(n, n), 1);
}

std::uint64_t u_high_edge_even(std::uint64_t n, std::uint64_t m, std::uint64_t a,
                               std::uint64_t b) {
    if (m % 2 != 0) throw Error(ErrorKind::invalid_args, "even branch requires even m");
    std::uint64_t half_m_n2 = checked_mul(m / 2, checked_mul(n, n));
    return checked_sub(checked_add(half_m_n2, 1), checked_mul(2, checked_mul(a, b)));
}

std::uint64_t u_high_edge_odd(std::uint64_t n, std::uint64_t m) {
    if (m % 2 != 1 || m < 3) throw Error(ErrorKind::invalid_args, "odd branch requires odd m >= 3");
    return checked_add(checked_mul((m - 1) / 2, checked_mul(n, n)), 1);
}

std::uint64_t u_single_high_edge(std::uint64_t n, std::uint64_t m, std::uint64_t a,
                                 std::uint64_t b) {
    if (m < 4) throw Error(ErrorKind::invalid_args, "high edge label must be >= 4");
    if (a < 1 || b < 1 || checked_add(a, b) != n) {
        throw Error(ErrorKind::invalid_args, "split sizes must satisfy a, b >= 1 and a + b = n");
    }
    return m % 2 == 0 ? u_high_edge_even(n, m, a, b) : u_high_edge_odd(n, m);
}

UCount u_component(const ComponentClass& c) {
    if (const auto* laced = std::get_if<SimplyLacedTree>(&c)) {
        return UCount::finite(u_simply_laced_tree(laced->n));
    }
    if (const auto* high = std::get_if<SingleHighEdgeTree>(&c)) {
        return UCount::finite(u_single_high_edge(high->n, high->m, high->a, high->b));
    }
    return UCount::infinite(std::get<InfiniteType>(c).reason);
}

UCount u_graph(const CoxeterGraph& g) {
    std::vector<CoxeterGraph> components = connected_components(g);
    if (components.empty()) return UCount::finite(1);

    std::uint64_t sum = 0;
    for (const CoxeterGraph& component : components) {
        ComponentClass cls = classify_component(component);
        UCount u = u_component(cls);
        if (!u.is_finite()) return u; // first infinite reason in component order
        sum = checked_add(sum, u.value());
    }
    // Each component contributes 2 or more, so subtracting k - 1 cannot underflow.
    return UCount::finite(checked_sub(sum, components.size() - 1));
}

FinitenessReport finiteness(const CoxeterGraph& g) {
    FinitenessReport report{true, {}};
    std::vector<CoxeterGraph> components = connected_components(g);
    report.per_component.reserve(components.size());
    for (std::size_t i = 0; i < components.size(); ++i) {
        ComponentClass cls = classify_component(components[i]);
        report.finite = report.finite && finite_class(cls);
        report.per_component.emplace_back(static_cast<int>(i) + 1, std::move(cls));
    }
    return report;
}

} // namespace unirex
