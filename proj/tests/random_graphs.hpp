#ifndef UNIREX_TESTS_RANDOM_GRAPHS_HPP
#define UNIREX_TESTS_RANDOM_GRAPHS_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "unirex/graph.hpp"

namespace unirex::testing {

inline std::vector<std::string> vertex_names(int n, const std::string& prefix = "v") {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
    return names;
}

// Random labelled tree: vertex i >= 1 attaches to a uniform earlier vertex.
inline CoxeterGraph random_tree(std::mt19937& rng, int n, bool with_high_edge,
                                std::uint64_t high_label = 4) {
    CoxeterGraph g(vertex_names(n));
    for (int i = 1; i < n; ++i) {
        int parent = static_cast<int>(rng() % static_cast<unsigned>(i));
        g.add_bond(parent, i, BondLabel::finite(3));
    }
    if (with_high_edge && n >= 2) {
        // rebuild with one bond upgraded; bonds are immutable once added
        std::size_t pick = rng() % g.bonds().size();
        CoxeterGraph upgraded(vertex_names(n));
        for (std::size_t i = 0; i < g.bonds().size(); ++i) {
            const Bond& bond = g.bonds()[i];
            upgraded.add_bond(bond.u, bond.v,
                              i == pick ? BondLabel::finite(high_label) : bond.label);
        }
        return upgraded;
    }
    return g;
}

// Copy of g with one extra bond closing a cycle (label 3). Requires that some
// unbonded vertex pair exists.
inline CoxeterGraph with_extra_cycle_bond(std::mt19937& rng, const CoxeterGraph& g) {
    const int n = g.vertex_count();
    std::vector<std::pair<int, int>> candidates;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (!g.bonded(u, v)) candidates.emplace_back(u, v);
        }
    }
    CoxeterGraph out(vertex_names(n));
    for (const Bond& bond : g.bonds()) out.add_bond(bond.u, bond.v, bond.label);
    auto [u, v] = candidates[rng() % candidates.size()];
    out.add_bond(u, v, BondLabel::finite(3));
    return out;
}

// Copy of g with one existing bond's label replaced.
inline CoxeterGraph with_bond_relabelled(std::mt19937& rng, const CoxeterGraph& g,
                                         BondLabel label) {
    std::size_t pick = rng() % g.bonds().size();
    CoxeterGraph out(vertex_names(g.vertex_count()));
    for (std::size_t i = 0; i < g.bonds().size(); ++i) {
        const Bond& bond = g.bonds()[i];
        out.add_bond(bond.u, bond.v, i == pick ? label : bond.label);
    }
    return out;
}

// Copy of g with a second bond upgraded to a high label; pick must differ
// from any existing high bond, so g needs at least two bonds.
inline CoxeterGraph with_second_high_edge(std::mt19937& rng, const CoxeterGraph& g,
                                          std::uint64_t high_label) {
    std::vector<std::size_t> simple_bonds;
    for (std::size_t i = 0; i < g.bonds().size(); ++i) {
        if (g.bonds()[i].label == BondLabel::finite(3)) simple_bonds.push_back(i);
    }
    std::size_t pick = simple_bonds[rng() % simple_bonds.size()];
    CoxeterGraph out(vertex_names(g.vertex_count()));
    for (std::size_t i = 0; i < g.bonds().size(); ++i) {
        const Bond& bond = g.bonds()[i];
        out.add_bond(bond.u, bond.v, i == pick ? BondLabel::finite(high_label) : bond.label);
    }
    return out;
}

// Disjoint union with fresh vertex names.
inline CoxeterGraph disjoint_union(const CoxeterGraph& g1, const CoxeterGraph& g2) {
    std::vector<std::string> names;
    for (const Generator& v : g1.vertices()) names.push_back("a_" + v.name);
    for (const Generator& v : g2.vertices()) names.push_back("b_" + v.name);
    CoxeterGraph out(std::move(names));
    const int offset = g1.vertex_count();
    for (const Bond& bond : g1.bonds()) out.add_bond(bond.u, bond.v, bond.label);
    for (const Bond& bond : g2.bonds()) out.add_bond(bond.u + offset, bond.v + offset, bond.label);
    return out;
}

} // namespace unirex::testing

#endif // UNIREX_TESTS_RANDOM_GRAPHS_HPP
