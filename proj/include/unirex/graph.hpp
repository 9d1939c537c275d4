#ifndef UNIREX_GRAPH_HPP
#define UNIREX_GRAPH_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "unirex/error.hpp"

namespace unirex {

// Label of a bond in a Coxeter graph: a finite order m >= 3, or infinity.
// m = 2 (commuting generators) is encoded by the absence of a bond and is
// never stored; m = 1 exists only on the implicit diagonal.
class BondLabel {
public:
    static BondLabel finite(std::uint64_t m);
    static BondLabel infinity() { return BondLabel(0); }

    bool is_infinite() const { return value_ == 0; }
    std::uint64_t value() const; // finite labels only

    friend bool operator==(BondLabel, BondLabel) = default;

private:
    explicit BondLabel(std::uint64_t v) : value_(v) {}
    std::uint64_t value_; // 0 encodes infinity
};

struct Generator {
    std::string name;
    int index = 0; // dense ordinal within the owning graph
};

struct Bond {
    int u; // u < v
    int v;
    BondLabel label;
};

// One entry of the Coxeter matrix: 1 on the diagonal, 2 for non-bonded
// distinct generators, the bond label otherwise.
struct CoxeterEntry {
    std::uint64_t value; // meaningful only when !infinite
    bool infinite;

    bool equals(std::uint64_t v) const { return !infinite && value == v; }
};

// Immutable after construction/population; all query methods are const and
// thread-safe.
class CoxeterGraph {
public:
    CoxeterGraph() = default; // the empty graph
    explicit CoxeterGraph(std::vector<std::string> vertex_names);

    void add_bond(int u, int v, BondLabel label);
    void add_bond(std::string_view a, std::string_view b, BondLabel label);

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    const std::vector<Generator>& vertices() const { return vertices_; }
    const std::vector<Bond>& bonds() const { return bonds_; }
    const std::string& name_of(int v) const { return vertices_[v].name; }
    std::optional<int> index_of(std::string_view name) const;

    bool bonded(int u, int v) const;
    const BondLabel* bond_label(int u, int v) const; // null when not bonded
    CoxeterEntry m(int r, int s) const;

    // neighbor indices in ascending order
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

private:
    std::vector<Generator> vertices_;
    std::vector<Bond> bonds_;
    std::map<std::pair<int, int>, BondLabel> bond_map_;
    std::vector<std::vector<int>> adj_;
    std::map<std::string, int, std::less<>> name_index_;
};

// Parses the line-oriented graph file format:
//   '#' starts a comment; blank lines are ignored.
//   First content line: "vertices <name> <name> ..."
//   Then zero or more:  "edge <name> <name> <label>", label >= 3 or "inf".
CoxeterGraph parse_graph(std::string_view text);

// Maximal bond-connected subgraphs, ordered by smallest member vertex index.
// Vertex order inside each component follows the original declaration order.
std::vector<CoxeterGraph> connected_components(const CoxeterGraph& g);

// --- classification ---------------------------------------------------------

struct SimplyLacedTree {
    std::uint64_t n; // vertex count
};

struct SingleHighEdgeTree {
    std::uint64_t n;
    std::uint64_t m;    // the unique finite label > 3
    std::uint64_t a, b; // orders of the two sides after deleting high_edge, a <= b
    std::pair<int, int> high_edge;
};

struct InfiniteBond {
    std::pair<int, int> bond;
};

struct ContainsCycle {
    std::vector<int> cycle; // vertices in cycle order, consecutive ones bonded
};

struct MultipleHighEdges {
    std::vector<std::pair<int, int>> edges; // every bond with finite label >= 4
};

using InfiniteReason = std::variant<InfiniteBond, ContainsCycle, MultipleHighEdges>;

struct InfiniteType {
    InfiniteReason reason;
};

using ComponentClass = std::variant<SimplyLacedTree, SingleHighEdgeTree, InfiniteType>;

bool finite_class(const ComponentClass& c);

// Classifies a connected non-empty graph. Precedence: an infinite bond wins
// over a cycle, which wins over the high-edge census.
ComponentClass classify_component(const CoxeterGraph& g);

// Orders of the two components of the tree g after deleting bond {u,v},
// normalized so that a <= b.
std::pair<std::uint64_t, std::uint64_t> tree_split_sizes(const CoxeterGraph& g, int u, int v);

// The unique simple path from u to v in a tree, endpoints inclusive.
std::vector<int> find_chain(const CoxeterGraph& g, int u, int v);

} // namespace unirex

#endif // UNIREX_GRAPH_HPP
