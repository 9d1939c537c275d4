#ifndef UNIREX_ORACLE_HPP
#define UNIREX_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "unirex/count.hpp"
#include "unirex/graph.hpp"

namespace unirex {

// A word over the generators of some ambient graph, as vertex indices.
using Word = std::vector<int>;

// Generator names joined by single spaces; the empty word renders as "e".
std::string render_word(const CoxeterGraph& g, const Word& w);

// Automaton state: the longest alternating suffix of the word read so far.
// For a Run over pair {last, other}, run_len is the length of the maximal
// alternating suffix over that pair; it stays below m(pair) for finite labels
// and saturates at 2 for infinite ones.
struct SuffixState {
    enum class Kind { start, first_letter, run };
    Kind kind = Kind::start;
    int last = -1;             // first_letter and run
    int other = -1;            // run: the other member of the pair
    std::uint64_t run_len = 0; // run: 2 <= run_len
};

// Deterministic automaton over the generator alphabet recognizing exactly the
// words that avoid every factor ss and every full alternating block of a pair
// with finite label (including both two-letter orders of a commuting pair).
// The language is prefix-closed, so every state accepts; a missing transition
// rejects.
struct Automaton {
    static constexpr std::int32_t kReject = -1;

    std::vector<SuffixState> states; // [0] is the start state
    std::vector<std::vector<std::int32_t>> next; // [state][letter] -> state or kReject
    std::size_t num_generators = 0;

    std::size_t state_count() const { return states.size(); }

    std::int32_t step(std::int32_t state, int letter) const {
        return next[static_cast<std::size_t>(state)][static_cast<std::size_t>(letter)];
    }

    bool accepts(const Word& w) const {
        std::int32_t state = 0;
        for (int letter : w) {
            state = step(state, letter);
            if (state == kReject) return false;
        }
        return true;
    }
};

Automaton build_automaton(const CoxeterGraph& g);

// True when some state on a directed cycle is reachable; since the language is
// prefix-closed this is equivalent to the language being infinite.
bool has_reachable_cycle(const Automaton& a);

// Exact path count of the automaton (empty path included), or infinite when a
// cycle is reachable. Exceeding max_count, or 2^64 - 1, raises overflow.
UCount oracle_count(const CoxeterGraph& g,
                    std::optional<std::uint64_t> max_count = std::nullopt);

// Accepted-word counts for lengths 0..max_len.
std::vector<std::uint64_t> length_census(const Automaton& a, std::size_t max_len);

// Naive recognizer: scans w once, checking at each position the maximal
// alternating factor that ends there. Deliberately does not share code with
// build_automaton.
bool is_unique_reduced_word(const Word& w, const CoxeterGraph& g);

// All accepted words of length <= max_len (every accepted word when the
// language is finite and max_len is absent), in length-then-lexicographic
// order by generator index.
std::vector<Word> enumerate_unique_words(const CoxeterGraph& g,
                                         std::optional<std::size_t> max_len = std::nullopt);

// base^k is accepted for every k >= 1, so the language is infinite.
struct WitnessPattern {
    Word base;
};

// The standard witness for each infinite classification reason:
//   infinite bond {r,s}        ->  r s
//   cycle r_1 .. r_n           ->  r_1 ... r_n
//   high edges sharing s       ->  s r s t
//   high edges joined by chain ->  r_1 ... r_{n-1} r_n r_{n-1} ... r_2
// Powers k = 1..5 are validated against is_unique_reduced_word before return.
WitnessPattern infinite_witness(const CoxeterGraph& g);

} // namespace unirex

#endif // UNIREX_ORACLE_HPP
