#ifndef UNIREX_CATALOG_HPP
#define UNIREX_CATALOG_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "unirex/graph.hpp"

namespace unirex {

// The irreducible finite and affine families. For I2 the rank parameter is
// the bond label m; for affine families the graph has rank + 1 vertices.
enum class Family { A, B, D, E, F, H, I2, AffA, AffB, AffC, AffD, AffE, AffF, AffG };

struct FamilyName {
    Family family;
    std::uint64_t rank;
};

// Grammar: optional "~" prefix, family letter, decimal rank; the dihedral
// family is written "I2:<m>". Examples: "B4", "~B3", "E8", "I2:7".
FamilyName parse_family(std::string_view text);

std::string family_to_string(const FamilyName& f);

// The standard Coxeter graph of the family, vertices named s1, s2, ...
CoxeterGraph standard_graph(const FamilyName& f);

// Every family member with rank parameter <= max_rank, in table order:
// finite families first, then affine, ranks ascending.
std::vector<FamilyName> table_families(std::uint64_t max_rank);

} // namespace unirex

#endif // UNIREX_CATALOG_HPP
