#include "unirex/catalog.hpp"

#include <charconv>
#include <initializer_list>

namespace unirex {

namespace {

std::vector<std::string> numbered_names(std::size_t count) {
    std::vector<std::string> names;
    names.reserve(count);
    for (std::size_t i = 1; i <= count; ++i) names.push_back("s" + std::to_string(i));
    return names;
}

// Path s1 - s2 - ... - sk; labels[i] sits on the bond (s_{i+1}, s_{i+2}).
CoxeterGraph path_graph(std::size_t k, const std::vector<std::uint64_t>& labels) {
    CoxeterGraph g(numbered_names(k));
    for (std::size_t i = 0; i + 1 < k; ++i) {
        g.add_bond(static_cast<int>(i), static_cast<int>(i) + 1, BondLabel::finite(labels[i]));
    }
    return g;
}

CoxeterGraph simply_laced_path(std::size_t k) {
    return path_graph(k, std::vector<std::uint64_t>(k > 0 ? k - 1 : 0, 3));
}

CoxeterGraph cycle_graph(std::size_t k) {
    CoxeterGraph g(numbered_names(k));
    for (std::size_t i = 0; i < k; ++i) {
        g.add_bond(static_cast<int>(i), static_cast<int>((i + 1) % k), BondLabel::finite(3));
    }
    return g;
}

// Simply laced star: s1 is the hub; each arm is a chain of the given number
// of vertices hanging off it.
CoxeterGraph star_graph(std::initializer_list<std::size_t> arms) {
    std::size_t total = 1;
    for (std::size_t arm : arms) total += arm;
    CoxeterGraph g(numbered_names(total));
    int next = 1;
    for (std::size_t arm : arms) {
        int previous = 0;
        for (std::size_t i = 0; i < arm; ++i) {
            g.add_bond(previous, next, BondLabel::finite(3));
            previous = next++;
        }
    }
    return g;
}

[[noreturn]] void bad_rank(const FamilyName& f, const std::string& constraint) {
    throw Error(ErrorKind::invalid_rank,
                "family " + family_to_string(f) + ": rank must satisfy " + constraint);
}

void require(bool ok, const FamilyName& f, const char* constraint) {
    if (!ok) bad_rank(f, constraint);
}

} // namespace

FamilyName parse_family(std::string_view text) {
    std::string_view s = text;
    const std::string shown(text);
    bool affine = !s.empty() && s.front() == '~';
    if (affine) s.remove_prefix(1);
    if (s.empty()) {
        throw Error(ErrorKind::invalid_family, "empty family name '" + shown + "'");
    }
    char letter = s.front();
    s.remove_prefix(1);

    if (letter == 'I') {
        if (affine) {
            throw Error(ErrorKind::invalid_family, "no affine dihedral family '" + shown + "'");
        }
        if (s.substr(0, 2) != "2:") {
            throw Error(ErrorKind::invalid_family,
                        "dihedral graphs are written \"I2:<m>\", got '" + shown + "'");
        }
        s.remove_prefix(2);
    }

    std::uint64_t rank = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), rank);
    if (ec == std::errc::result_out_of_range) {
        throw Error(ErrorKind::invalid_rank, "rank out of range in '" + shown + "'");
    }
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        throw Error(ErrorKind::invalid_family, "malformed family name '" + shown + "'");
    }

    if (letter == 'I') return FamilyName{Family::I2, rank};
    switch (letter) {
    case 'A': return FamilyName{affine ? Family::AffA : Family::A, rank};
    case 'B': return FamilyName{affine ? Family::AffB : Family::B, rank};
    case 'C':
        if (!affine) {
            throw Error(ErrorKind::invalid_family,
                        "finite type C" + std::to_string(rank) + " is the same graph as B" +
                            std::to_string(rank) + "; use B" + std::to_string(rank) + " or ~C" +
                            std::to_string(rank));
        }
        return FamilyName{Family::AffC, rank};
    case 'D': return FamilyName{affine ? Family::AffD : Family::D, rank};
    case 'E': return FamilyName{affine ? Family::AffE : Family::E, rank};
    case 'F': return FamilyName{affine ? Family::AffF : Family::F, rank};
    case 'G':
        if (!affine) {
            throw Error(ErrorKind::invalid_family,
                        "finite type G2 is the dihedral graph I2:6; use I2:6 or ~G2");
        }
        return FamilyName{Family::AffG, rank};
    case 'H':
        if (affine) {
            throw Error(ErrorKind::invalid_family, "no affine family '" + shown + "'");
        }
        return FamilyName{Family::H, rank};
    default:
        throw Error(ErrorKind::invalid_family, "unknown family letter in '" + shown + "'");
    }
}

std::string family_to_string(const FamilyName& f) {
    const std::string rank = std::to_string(f.rank);
    switch (f.family) {
    case Family::A: return "A" + rank;
    case Family::B: return "B" + rank;
    case Family::D: return "D" + rank;
    case Family::E: return "E" + rank;
    case Family::F: return "F" + rank;
    case Family::H: return "H" + rank;
    case Family::I2: return "I2:" + rank;
    case Family::AffA: return "~A" + rank;
    case Family::AffB: return "~B" + rank;
    case Family::AffC: return "~C" + rank;
    case Family::AffD: return "~D" + rank;
    case Family::AffE: return "~E" + rank;
    case Family::AffF: return "~F" + rank;
    case Family::AffG: return "~G" + rank;
    }
    return "?";
}

CoxeterGraph standard_graph(const FamilyName& f) {
    const std::uint64_t n = f.rank;
    const std::size_t sz = static_cast<std::size_t>(n);
    switch (f.family) {
    case Family::A:
        require(n >= 1, f, "n >= 1");
        return simply_laced_path(sz);
    case Family::B: {
        require(n >= 2, f, "n >= 2");
        std::vector<std::uint64_t> labels(sz - 1, 3);
        labels.back() = 4;
        return path_graph(sz, labels);
    }
    case Family::D: {
        require(n >= 4, f, "n >= 4");
        CoxeterGraph g(numbered_names(sz));
        g.add_bond(0, 2, BondLabel::finite(3));
        g.add_bond(1, 2, BondLabel::finite(3));
        for (std::size_t i = 2; i + 1 < sz; ++i) {
            g.add_bond(static_cast<int>(i), static_cast<int>(i) + 1, BondLabel::finite(3));
        }
        return g;
    }
    case Family::E:
        require(n >= 6 && n <= 8, f, "n in {6, 7, 8}");
        return star_graph({sz - 4, 2, 1});
    case Family::F:
        require(n == 4, f, "n = 4");
        return path_graph(4, {3, 4, 3});
    case Family::H:
        require(n == 3 || n == 4, f, "n in {3, 4}");
        return n == 3 ? path_graph(3, {5, 3}) : path_graph(4, {5, 3, 3});
    case Family::I2: {
        require(n >= 3, f, "m >= 3");
        CoxeterGraph g(numbered_names(2));
        g.add_bond(0, 1, BondLabel::finite(n));
        return g;
    }
    case Family::AffA: {
        require(n >= 1, f, "n >= 1");
        if (n == 1) {
            CoxeterGraph g(numbered_names(2));
            g.add_bond(0, 1, BondLabel::infinity());
            return g;
        }
        return cycle_graph(sz + 1);
    }
    case Family::AffB: {
        require(n >= 3, f, "n >= 3");
        CoxeterGraph g(numbered_names(sz + 1));
        g.add_bond(0, 2, BondLabel::finite(3));
        g.add_bond(1, 2, BondLabel::finite(3));
        for (std::size_t i = 2; i + 1 < sz + 1; ++i) {
            bool terminal = (i + 2 == sz + 1);
            g.add_bond(static_cast<int>(i), static_cast<int>(i) + 1,
                       BondLabel::finite(terminal ? 4 : 3));
        }
        return g;
    }
    case Family::AffC: {
        require(n >= 2, f, "n >= 2");
        std::vector<std::uint64_t> labels(sz, 3);
        labels.front() = 4;
        labels.back() = 4;
        return path_graph(sz + 1, labels);
    }
    case Family::AffD: {
        require(n >= 4, f, "n >= 4");
        CoxeterGraph g(numbered_names(sz + 1));
        // forks at both ends of the spine s3 .. s_{n-1}
        g.add_bond(0, 2, BondLabel::finite(3));
        g.add_bond(1, 2, BondLabel::finite(3));
        for (std::size_t i = 2; i + 3 <= sz; ++i) {
            g.add_bond(static_cast<int>(i), static_cast<int>(i) + 1, BondLabel::finite(3));
        }
        g.add_bond(static_cast<int>(sz) - 2, static_cast<int>(sz) - 1, BondLabel::finite(3));
        g.add_bond(static_cast<int>(sz) - 2, static_cast<int>(sz), BondLabel::finite(3));
        return g;
    }
    case Family::AffE:
        require(n >= 6 && n <= 8, f, "n in {6, 7, 8}");
        if (n == 6) return star_graph({2, 2, 2});
        if (n == 7) return star_graph({3, 3, 1});
        return star_graph({5, 2, 1});
    case Family::AffF:
        require(n == 4, f, "n = 4");
        return path_graph(5, {3, 3, 4, 3});
    case Family::AffG:
        require(n == 2, f, "n = 2");
        return path_graph(3, {6, 3});
    }
    throw Error(ErrorKind::invalid_family, "unhandled family");
}

std::vector<FamilyName> table_families(std::uint64_t max_rank) {
    std::vector<FamilyName> rows;
    auto add_range = [&rows](Family family, std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t r = lo; r <= hi; ++r) rows.push_back(FamilyName{family, r});
    };
    add_range(Family::A, 1, max_rank);
    add_range(Family::B, 2, max_rank);
    add_range(Family::D, 4, max_rank);
    add_range(Family::E, 6, std::min<std::uint64_t>(8, max_rank));
    rows.push_back(FamilyName{Family::F, 4});
    add_range(Family::H, 3, 4);
    if (max_rank >= 6) add_range(Family::I2, 6, max_rank);
    add_range(Family::AffA, 1, max_rank);
    add_range(Family::AffB, 3, max_rank);
    add_range(Family::AffC, 2, max_rank);
    add_range(Family::AffD, 4, max_rank);
    add_range(Family::AffE, 6, std::min<std::uint64_t>(8, max_rank));
    rows.push_back(FamilyName{Family::AffF, 4});
    rows.push_back(FamilyName{Family::AffG, 2});
    return rows;
}

} // namespace unirex
