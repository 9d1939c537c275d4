#include "unirex/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace unirex {

BondLabel BondLabel::finite(std::uint64_t m) {
    if (m < 3) {
        throw Error(ErrorKind::invalid_label,
                    "bond label must be >= 3 (m = 2 is encoded by bond absence), got " +
                        std::to_string(m));
    }
    return BondLabel(m);
}

std::uint64_t BondLabel::value() const {
    if (is_infinite()) {
        throw Error(ErrorKind::invalid_args, "infinite bond label has no finite value");
    }
    return value_;
}

namespace {

bool valid_name(std::string_view name) {
    if (name.empty()) return false;
    for (char c : name) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    }
    return true;
}

} // namespace

CoxeterGraph::CoxeterGraph(std::vector<std::string> vertex_names) {
    vertices_.reserve(vertex_names.size());
    adj_.resize(vertex_names.size());
    for (auto& name : vertex_names) {
        if (!valid_name(name)) {
            throw Error(ErrorKind::syntax, "invalid vertex name '" + name + "'");
        }
        int index = static_cast<int>(vertices_.size());
        auto [it, inserted] = name_index_.emplace(name, index);
        if (!inserted) {
            throw Error(ErrorKind::duplicate_vertex, "duplicate vertex '" + name + "'");
        }
        vertices_.push_back(Generator{std::move(name), index});
    }
}

void CoxeterGraph::add_bond(int u, int v, BondLabel label) {
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count()) {
        throw Error(ErrorKind::invalid_args, "bond endpoint out of range");
    }
    if (u == v) {
        throw Error(ErrorKind::syntax, "self-bond on vertex '" + name_of(u) + "'");
    }
    if (u > v) std::swap(u, v);
    auto [it, inserted] = bond_map_.emplace(std::make_pair(u, v), label);
    if (!inserted) {
        throw Error(ErrorKind::duplicate_edge,
                    "duplicate bond {" + name_of(u) + ", " + name_of(v) + "}");
    }
    bonds_.push_back(Bond{u, v, label});
    adj_[u].insert(std::upper_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::upper_bound(adj_[v].begin(), adj_[v].end(), u), u);
}

void CoxeterGraph::add_bond(std::string_view a, std::string_view b, BondLabel label) {
    auto ia = index_of(a);
    auto ib = index_of(b);
    if (!ia) throw Error(ErrorKind::unknown_vertex, "unknown vertex '" + std::string(a) + "'");
    if (!ib) throw Error(ErrorKind::unknown_vertex, "unknown vertex '" + std::string(b) + "'");
    add_bond(*ia, *ib, label);
}

std::optional<int> CoxeterGraph::index_of(std::string_view name) const {
    auto it = name_index_.find(name);
    if (it == name_index_.end()) return std::nullopt;
    return it->second;
}

bool CoxeterGraph::bonded(int u, int v) const {
    return bond_label(u, v) != nullptr;
}

const BondLabel* CoxeterGraph::bond_label(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = bond_map_.find(std::make_pair(u, v));
    return it == bond_map_.end() ? nullptr : &it->second;
}

CoxeterEntry CoxeterGraph::m(int r, int s) const {
    if (r == s) return CoxeterEntry{1, false};
    if (const BondLabel* label = bond_label(r, s)) {
        if (label->is_infinite()) return CoxeterEntry{0, true};
        return CoxeterEntry{label->value(), false};
    }
    return CoxeterEntry{2, false};
}

// --- parsing -----------------------------------------------------------------

namespace {

std::vector<std::string> tokenize(std::string_view line) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i > start) tokens.emplace_back(line.substr(start, i - start));
    }
    return tokens;
}

[[noreturn]] void fail(ErrorKind kind, int line_no, const std::string& message) {
    throw Error(kind, "line " + std::to_string(line_no) + ": " + message);
}

BondLabel parse_label(const std::string& token, int line_no) {
    if (token == "inf") return BondLabel::infinity();
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec == std::errc::result_out_of_range) {
        fail(ErrorKind::invalid_label, line_no, "label '" + token + "' out of range");
    }
    if (ec != std::errc() || ptr != token.data() + token.size()) {
        fail(ErrorKind::invalid_label, line_no,
             "label must be an integer >= 3 or \"inf\", got '" + token + "'");
    }
    if (value < 3) {
        fail(ErrorKind::invalid_label, line_no,
             "label must be >= 3 (m = 2 is encoded by omitting the edge), got '" + token + "'");
    }
    return BondLabel::finite(value);
}

} // namespace

CoxeterGraph parse_graph(std::string_view text) {
    std::optional<CoxeterGraph> graph;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        if (std::size_t hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        std::vector<std::string> tokens = tokenize(line);
        if (tokens.empty()) continue;

        if (tokens[0] == "vertices") {
            if (graph) fail(ErrorKind::syntax, line_no, "repeated \"vertices\" line");
            std::vector<std::string> names(tokens.begin() + 1, tokens.end());
            for (const auto& name : names) {
                if (!valid_name(name)) {
                    fail(ErrorKind::syntax, line_no, "invalid vertex name '" + name + "'");
                }
            }
            for (std::size_t i = 0; i < names.size(); ++i) {
                for (std::size_t j = i + 1; j < names.size(); ++j) {
                    if (names[i] == names[j]) {
                        fail(ErrorKind::duplicate_vertex, line_no,
                             "duplicate vertex '" + names[i] + "'");
                    }
                }
            }
            graph.emplace(std::move(names));
        } else if (tokens[0] == "edge") {
            if (!graph) {
                fail(ErrorKind::syntax, line_no, "\"edge\" before the \"vertices\" line");
            }
            if (tokens.size() != 4) {
                fail(ErrorKind::syntax, line_no,
                     "expected \"edge <name> <name> <label>\"");
            }
            auto u = graph->index_of(tokens[1]);
            auto v = graph->index_of(tokens[2]);
            if (!u) fail(ErrorKind::unknown_vertex, line_no, "unknown vertex '" + tokens[1] + "'");
            if (!v) fail(ErrorKind::unknown_vertex, line_no, "unknown vertex '" + tokens[2] + "'");
            if (*u == *v) fail(ErrorKind::syntax, line_no, "self-edge on '" + tokens[1] + "'");
            if (graph->bonded(*u, *v)) {
                fail(ErrorKind::duplicate_edge, line_no,
                     "duplicate edge {" + tokens[1] + ", " + tokens[2] + "}");
            }
            graph->add_bond(*u, *v, parse_label(tokens[3], line_no));
        } else {
            fail(ErrorKind::syntax, line_no, "unknown directive '" + tokens[0] + "'");
        }
    }
    if (!graph) {
        throw Error(ErrorKind::syntax, "missing \"vertices\" line");
    }
    return std::move(*graph);
}

// --- structure ---------------------------------------------------------------

std::vector<CoxeterGraph> connected_components(const CoxeterGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> component_of(n, -1);
    int component_count = 0;
    for (int start = 0; start < n; ++start) {
        if (component_of[start] != -1) continue;
        int id = component_count++;
        std::vector<int> stack{start};
        component_of[start] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v)) {
                if (component_of[w] == -1) {
                    component_of[w] = id;
                    stack.push_back(w);
                }
            }
        }
    }

    // Vertices in declaration order per component; components are ordered by
    // smallest member index because ids were assigned in a forward scan.
    std::vector<std::vector<std::string>> names(component_count);
    std::vector<int> local_of(n);
    for (int v = 0; v < n; ++v) {
        int id = component_of[v];
        local_of[v] = static_cast<int>(names[id].size());
        names[id].push_back(g.name_of(v));
    }

    std::vector<CoxeterGraph> components;
    components.reserve(component_count);
    for (auto& component_names : names) {
        components.emplace_back(std::move(component_names));
    }
    for (const Bond& bond : g.bonds()) {
        int id = component_of[bond.u];
        components[id].add_bond(local_of[bond.u], local_of[bond.v], bond.label);
    }
    return components;
}

namespace {

// First cycle found by depth-first traversal from vertex 0 with neighbors
// visited in index order. Caller guarantees a cycle exists.
std::vector<int> find_cycle(const CoxeterGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> parent(n, -1);
    std::vector<char> visited(n, 0), on_path(n, 0);
    // (vertex, position in its neighbor list)
    std::vector<std::pair<int, std::size_t>> stack;

    for (int root = 0; root < n; ++root) {
        if (visited[root]) continue;
        visited[root] = 1;
        on_path[root] = 1;
        stack.emplace_back(root, 0);
        while (!stack.empty()) {
            auto& [v, next_idx] = stack.back();
            if (next_idx == g.neighbors(v).size()) {
                on_path[v] = 0;
                stack.pop_back();
                continue;
            }
            int w = g.neighbors(v)[next_idx++];
            if (w == parent[v]) continue;
            if (!visited[w]) {
                visited[w] = 1;
                on_path[w] = 1;
                parent[w] = v;
                stack.emplace_back(w, 0);
            } else if (on_path[w]) {
                // back edge v -> w closes the cycle w .. v
                std::vector<int> cycle;
                for (int x = v; x != w; x = parent[x]) cycle.push_back(x);
                cycle.push_back(w);
                std::reverse(cycle.begin(), cycle.end());
                return cycle;
            }
        }
    }
    throw Error(ErrorKind::invalid_args, "no cycle present");
}

bool is_connected(const CoxeterGraph& g) {
    const int n = g.vertex_count();
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n;
}

} // namespace

bool finite_class(const ComponentClass& c) {
    return !std::holds_alternative<InfiniteType>(c);
}

ComponentClass classify_component(const CoxeterGraph& g) {
    const int n = g.vertex_count();
    if (n == 0) {
        throw Error(ErrorKind::empty_component, "cannot classify an empty component");
    }

    const Bond* infinite_bond = nullptr;
    for (const Bond& bond : g.bonds()) {
        if (!bond.label.is_infinite()) continue;
        if (!infinite_bond || std::make_pair(bond.u, bond.v) <
                                  std::make_pair(infinite_bond->u, infinite_bond->v)) {
            infinite_bond = &bond;
        }
    }
    if (infinite_bond) {
        return InfiniteType{InfiniteBond{{infinite_bond->u, infinite_bond->v}}};
    }

    if (g.bonds().size() >= static_cast<std::size_t>(n)) {
        return InfiniteType{ContainsCycle{find_cycle(g)}};
    }

    std::vector<std::pair<int, int>> high_edges;
    const Bond* high_bond = nullptr;
    for (const Bond& bond : g.bonds()) {
        if (bond.label.value() >= 4) {
            high_edges.emplace_back(bond.u, bond.v);
            high_bond = &bond;
        }
    }
    if (high_edges.empty()) {
        return SimplyLacedTree{static_cast<std::uint64_t>(n)};
    }
    if (high_edges.size() == 1) {
        auto [a, b] = tree_split_sizes(g, high_bond->u, high_bond->v);
        return SingleHighEdgeTree{static_cast<std::uint64_t>(n), high_bond->label.value(), a, b,
                                  high_edges.front()};
    }
    return InfiniteType{MultipleHighEdges{std::move(high_edges)}};
}

std::pair<std::uint64_t, std::uint64_t> tree_split_sizes(const CoxeterGraph& g, int u, int v) {
    const int n = g.vertex_count();
    if (u > v) std::swap(u, v);
    if (!g.bonded(u, v)) {
        throw Error(ErrorKind::edge_absent,
                    "no bond between the given vertices");
    }
    if (g.bonds().size() != static_cast<std::size_t>(n) - 1 || !is_connected(g)) {
        throw Error(ErrorKind::not_a_tree, "graph is not a tree");
    }

    // Size of u's side with the bond {u,v} removed; a tree has no other path.
    std::vector<char> seen(n, 0);
    std::vector<int> stack{u};
    seen[u] = 1;
    std::uint64_t side = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(x)) {
            if (x == u && w == v) continue;
            if (!seen[w]) {
                seen[w] = 1;
                ++side;
                stack.push_back(w);
            }
        }
    }
    std::uint64_t other = static_cast<std::uint64_t>(n) - side;
    return {std::min(side, other), std::max(side, other)};
}

std::vector<int> find_chain(const CoxeterGraph& g, int u, int v) {
    const int n = g.vertex_count();
    if (u < 0 || v < 0 || u >= n || v >= n) {
        throw Error(ErrorKind::invalid_args, "chain endpoint out of range");
    }
    std::vector<int> parent(n, -1);
    std::vector<char> seen(n, 0);
    std::vector<int> queue{u};
    seen[u] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int x = queue[head];
        if (x == v) break;
        for (int w : g.neighbors(x)) {
            if (!seen[w]) {
                seen[w] = 1;
                parent[w] = x;
                queue.push_back(w);
            }
        }
    }
    if (!seen[v]) {
        throw Error(ErrorKind::disconnected, "vertices lie in different components");
    }
    std::vector<int> path;
    for (int x = v; x != -1; x = parent[x]) path.push_back(x);
    std::reverse(path.begin(), path.end());
    return path;
}

} // namespace unirex
