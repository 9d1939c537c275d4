#include "unirex/oracle.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "unirex/checked.hpp"

namespace unirex {

std::string render_word(const CoxeterGraph& g, const Word& w) {
    if (w.empty()) return "e";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0) out += ' ';
        out += g.name_of(w[i]);
    }
    return out;
}

namespace {

// Keeps automata for absurdly large labels (think I2 with m in the billions)
// from exhausting memory; the state count grows linearly in each finite label.
constexpr std::uint64_t kMaxAutomatonStates = std::uint64_t{1} << 26;

std::optional<SuffixState> transition(const CoxeterGraph& g, const SuffixState& s, int c) {
    switch (s.kind) {
    case SuffixState::Kind::start:
        return SuffixState{SuffixState::Kind::first_letter, c, -1, 0};
    case SuffixState::Kind::first_letter: {
        if (c == s.last) return std::nullopt; // factor ss
        CoxeterEntry e = g.m(s.last, c);
        if (e.equals(2)) return std::nullopt; // commuting pair, factor of [rs]^2
        return SuffixState{SuffixState::Kind::run, c, s.last, 2};
    }
    case SuffixState::Kind::run: {
        if (c == s.last) return std::nullopt;
        if (c == s.other) {
            // the alternating run over the current pair grows by one
            CoxeterEntry e = g.m(s.last, s.other);
            if (!e.infinite && s.run_len + 1 >= e.value) return std::nullopt;
            std::uint64_t saturation = e.infinite ? 2 : e.value - 1;
            return SuffixState{SuffixState::Kind::run, c, s.last,
                               std::min(s.run_len + 1, saturation)};
        }
        CoxeterEntry e = g.m(s.last, c);
        if (e.equals(2)) return std::nullopt;
        // c is outside the pair, so the new maximal run is exactly (last, c)
        return SuffixState{SuffixState::Kind::run, c, s.last, 2};
    }
    }
    return std::nullopt; // unreachable
}

} // namespace

Automaton build_automaton(const CoxeterGraph& g) {
    const int n = g.vertex_count();

    std::uint64_t projected = checked_add(1, static_cast<std::uint64_t>(n));
    for (const Bond& bond : g.bonds()) {
        std::uint64_t per_bond =
            bond.label.is_infinite() ? 2 : checked_mul(2, bond.label.value() - 2);
        projected = checked_add(projected, per_bond);
    }
    if (projected > kMaxAutomatonStates) {
        throw Error(ErrorKind::overflow,
                    "automaton would need " + std::to_string(projected) + " states");
    }

    Automaton a;
    a.num_generators = static_cast<std::size_t>(n);

    std::map<std::tuple<int, int, int, std::uint64_t>, std::int32_t> ids;
    auto intern = [&](const SuffixState& s) -> std::int32_t {
        auto key = std::make_tuple(static_cast<int>(s.kind), s.last, s.other, s.run_len);
        auto [it, inserted] = ids.emplace(key, static_cast<std::int32_t>(a.states.size()));
        if (inserted) {
            a.states.push_back(s);
            a.next.emplace_back(static_cast<std::size_t>(n), Automaton::kReject);
        }
        return it->second;
    };

    intern(SuffixState{}); // start
    for (std::size_t frontier = 0; frontier < a.states.size(); ++frontier) {
        SuffixState state = a.states[frontier]; // copy: states may reallocate
        for (int c = 0; c < n; ++c) {
            if (auto successor = transition(g, state, c)) {
                a.next[frontier][static_cast<std::size_t>(c)] = intern(*successor);
            }
        }
    }
    return a;
}

namespace {

// Kahn's algorithm; returns the topological order of all states, or an empty
// vector when a cycle exists (every state is reachable by construction).
std::vector<std::int32_t> topological_order(const Automaton& a) {
    const std::size_t count = a.state_count();
    std::vector<std::uint32_t> indegree(count, 0);
    for (const auto& row : a.next) {
        for (std::int32_t target : row) {
            if (target != Automaton::kReject) ++indegree[static_cast<std::size_t>(target)];
        }
    }
    std::vector<std::int32_t> order;
    order.reserve(count);
    for (std::size_t s = 0; s < count; ++s) {
        if (indegree[s] == 0) order.push_back(static_cast<std::int32_t>(s));
    }
    for (std::size_t head = 0; head < order.size(); ++head) {
        for (std::int32_t target : a.next[static_cast<std::size_t>(order[head])]) {
            if (target == Automaton::kReject) continue;
            if (--indegree[static_cast<std::size_t>(target)] == 0) order.push_back(target);
        }
    }
    if (order.size() != count) order.clear();
    return order;
}

} // namespace

bool has_reachable_cycle(const Automaton& a) {
    return topological_order(a).empty() && a.state_count() > 0;
}

UCount oracle_count(const CoxeterGraph& g, std::optional<std::uint64_t> max_count) {
    Automaton a = build_automaton(g);
    std::vector<std::int32_t> order = topological_order(a);
    if (order.empty()) return UCount::infinite();

    // Exact DP over the acyclic state graph; every state is accepting, so the
    // answer is the total number of walks from the start state.
    std::vector<std::uint64_t> ways(a.state_count(), 0);
    ways[0] = 1;
    std::uint64_t total = 0;
    for (std::int32_t s : order) {
        for (std::int32_t target : a.next[static_cast<std::size_t>(s)]) {
            if (target != Automaton::kReject) {
                ways[static_cast<std::size_t>(target)] =
                    checked_add(ways[static_cast<std::size_t>(target)],
                                ways[static_cast<std::size_t>(s)]);
            }
        }
        total = checked_add(total, ways[static_cast<std::size_t>(s)]);
    }
    if (max_count && total > *max_count) {
        throw Error(ErrorKind::overflow,
                    "count " + std::to_string(total) + " exceeds the limit " +
                        std::to_string(*max_count));
    }
    return UCount::finite(total);
}

std::vector<std::uint64_t> length_census(const Automaton& a, std::size_t max_len) {
    std::vector<std::uint64_t> census;
    census.reserve(max_len + 1);
    std::vector<std::uint64_t> current(a.state_count(), 0);
    current[0] = 1;
    census.push_back(1);
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<std::uint64_t> following(a.state_count(), 0);
        std::uint64_t level_total = 0;
        for (std::size_t s = 0; s < a.state_count(); ++s) {
            if (current[s] == 0) continue;
            for (std::int32_t target : a.next[s]) {
                if (target != Automaton::kReject) {
                    auto& cell = following[static_cast<std::size_t>(target)];
                    cell = checked_add(cell, current[s]);
                }
            }
        }
        for (std::uint64_t c : following) level_total = checked_add(level_total, c);
        census.push_back(level_total);
        current = std::move(following);
    }
    return census;
}

bool is_unique_reduced_word(const Word& w, const CoxeterGraph& g) {
    for (std::size_t i = 1; i < w.size(); ++i) {
        const int c = w[i];
        const int p = w[i - 1];
        if (c == p) return false; // factor ss
        CoxeterEntry e = g.m(p, c);
        if (e.equals(2)) return false; // commuting adjacent pair
        if (e.infinite) continue;
        // maximal alternating factor over {p, c} ending at position i
        std::uint64_t len = 2;
        std::size_t j = i - 1;
        while (j > 0 && w[j - 1] == w[j + 1]) {
            ++len;
            --j;
        }
        if (len >= e.value) return false; // full block [rs]^m
    }
    return true;
}

std::vector<Word> enumerate_unique_words(const CoxeterGraph& g,
                                         std::optional<std::size_t> max_len) {
    Automaton a = build_automaton(g);
    if (!max_len && has_reachable_cycle(a)) {
        throw Error(ErrorKind::would_not_terminate,
                    "infinitely many words; a maximum length is required");
    }

    std::vector<Word> words;
    words.emplace_back(); // the empty word
    // Level-by-level extension preserves length-then-lexicographic order.
    std::vector<std::pair<Word, std::int32_t>> level{{Word{}, 0}};
    for (std::size_t len = 1; !level.empty() && (!max_len || len <= *max_len); ++len) {
        std::vector<std::pair<Word, std::int32_t>> following;
        for (const auto& [word, state] : level) {
            for (int c = 0; c < g.vertex_count(); ++c) {
                std::int32_t target = a.step(state, c);
                if (target == Automaton::kReject) continue;
                Word extended = word;
                extended.push_back(c);
                words.push_back(extended);
                following.emplace_back(std::move(extended), target);
            }
        }
        level = std::move(following);
    }
    return words;
}

namespace {

Word word_power(const Word& base, int k) {
    Word result;
    result.reserve(base.size() * static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) result.insert(result.end(), base.begin(), base.end());
    return result;
}

void validate_witness(const CoxeterGraph& g, const Word& base) {
    for (int k = 1; k <= 5; ++k) {
        if (!is_unique_reduced_word(word_power(base, k), g)) {
            throw std::logic_error("witness power " + std::to_string(k) +
                                   " is not accepted: " + render_word(g, base));
        }
    }
}

Word chain_witness(const CoxeterGraph& g, std::pair<int, int> e1, std::pair<int, int> e2) {
    // The tree chain covering both edges runs between their far endpoints; of
    // the four endpoint pairings it is the strictly longest chain.
    std::vector<int> best;
    for (int p : {e1.first, e1.second}) {
        for (int q : {e2.first, e2.second}) {
            std::vector<int> chain = find_chain(g, p, q);
            if (chain.size() > best.size()) best = std::move(chain);
        }
    }
    // r_1 .. r_n followed by r_{n-1} .. r_2
    Word base(best.begin(), best.end());
    for (std::size_t i = best.size() - 1; i-- > 1;) base.push_back(best[i]);
    return base;
}

} // namespace

WitnessPattern infinite_witness(const CoxeterGraph& g) {
    ComponentClass cls = classify_component(g);
    const auto* infinite = std::get_if<InfiniteType>(&cls);
    if (!infinite) {
        throw Error(ErrorKind::not_infinite, "component has a finite count");
    }

    Word base;
    if (const auto* bond = std::get_if<InfiniteBond>(&infinite->reason)) {
        base = {bond->bond.first, bond->bond.second};
    } else if (const auto* cycle = std::get_if<ContainsCycle>(&infinite->reason)) {
        base = Word(cycle->cycle.begin(), cycle->cycle.end());
    } else {
        const auto& edges = std::get<MultipleHighEdges>(infinite->reason).edges;
        std::pair<int, int> e1 = edges[0];
        std::pair<int, int> e2 = edges[1];
        int shared = -1;
        for (int p : {e1.first, e1.second}) {
            if (p == e2.first || p == e2.second) shared = p;
        }
        if (shared != -1) {
            int r = e1.first == shared ? e1.second : e1.first;
            int t = e2.first == shared ? e2.second : e2.first;
            base = {shared, r, shared, t};
        } else {
            base = chain_witness(g, e1, e2);
        }
    }
    validate_witness(g, base);
    return WitnessPattern{std::move(base)};
}

} // namespace unirex
