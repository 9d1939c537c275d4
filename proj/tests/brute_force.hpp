#ifndef UNIREX_TESTS_BRUTE_FORCE_HPP
#define UNIREX_TESTS_BRUTE_FORCE_HPP

// Test-only reference oracle. Enumerates every word over the generators up to
// a length bound and filters by literal substring matching against the
// explicit forbidden-factor list. Shares no code with the library recognizers.

#include <cstdint>
#include <vector>

#include "unirex/graph.hpp"
#include "unirex/oracle.hpp"

namespace unirex::testing {

inline std::vector<Word> forbidden_factors(const CoxeterGraph& g) {
    std::vector<Word> factors;
    const int n = g.vertex_count();
    for (int r = 0; r < n; ++r) factors.push_back({r, r});
    for (int r = 0; r < n; ++r) {
        for (int s = r + 1; s < n; ++s) {
            CoxeterEntry e = g.m(r, s);
            if (e.infinite) continue;
            // the full alternating block in both orders; m = 2 gives rs and sr
            Word rs, sr;
            for (std::uint64_t i = 0; i < e.value; ++i) {
                rs.push_back(i % 2 == 0 ? r : s);
                sr.push_back(i % 2 == 0 ? s : r);
            }
            factors.push_back(rs);
            factors.push_back(sr);
        }
    }
    return factors;
}

inline bool contains_factor(const Word& w, const Word& factor) {
    if (factor.size() > w.size()) return false;
    for (std::size_t start = 0; start + factor.size() <= w.size(); ++start) {
        bool match = true;
        for (std::size_t i = 0; i < factor.size(); ++i) {
            if (w[start + i] != factor[i]) {
                match = false;
                break;
            }
        }
        if (match) return true;
    }
    return false;
}

inline bool avoids_all_factors(const Word& w, const std::vector<Word>& factors) {
    for (const Word& factor : factors) {
        if (contains_factor(w, factor)) return false;
    }
    return true;
}

// All factor-avoiding words of length <= max_len, in length-then-lex order.
inline std::vector<Word> brute_force_words(const CoxeterGraph& g, std::size_t max_len) {
    std::vector<Word> factors = forbidden_factors(g);
    std::vector<Word> accepted;
    std::vector<Word> level{Word{}};
    accepted.push_back(Word{});
    for (std::size_t len = 1; len <= max_len && !level.empty(); ++len) {
        std::vector<Word> next_level;
        for (const Word& w : level) {
            for (int c = 0; c < g.vertex_count(); ++c) {
                Word extended = w;
                extended.push_back(c);
                if (avoids_all_factors(extended, factors)) {
                    accepted.push_back(extended);
                    next_level.push_back(std::move(extended));
                }
            }
        }
        level = std::move(next_level);
    }
    return accepted;
}

// Count of all factor-avoiding words, with max_len certifying completeness:
// asserts (by returning true in *complete) that no accepted word reached the
// bound, i.e. the census died out and the count is the whole language.
inline std::uint64_t brute_force_count(const CoxeterGraph& g, std::size_t max_len,
                                       bool* complete = nullptr) {
    std::vector<Word> words = brute_force_words(g, max_len);
    if (complete) {
        *complete = true;
        for (const Word& w : words) {
            if (w.size() == max_len) *complete = false;
        }
    }
    return words.size();
}

} // namespace unirex::testing

#endif // UNIREX_TESTS_BRUTE_FORCE_HPP
