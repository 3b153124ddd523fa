#pragma once

// The perfect crystals B^{5,l} and their limit B^{5,inf}.
//
// An element is b = (b_ij) with 1 <= i <= 5, i <= j <= i+4, stored row-major:
// row i holds b_{i,i} .. b_{i,i+4}.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cartan.hpp"
#include "report.hpp"

namespace d5 {

struct Regime {
    enum class Kind { finite, limit };
    Kind kind = Kind::finite;
    std::int64_t l = 0;

    static Regime finite(std::int64_t l) {
        if (l < 1) throw std::invalid_argument("B^{5,l} needs l >= 1");
        return {Kind::finite, l};
    }
    static Regime limit() { return {Kind::limit, 0}; }

    bool is_limit() const { return kind == Kind::limit; }
    /// The l entering the epsilon/phi formulas (0 in the limit).
    std::int64_t shift() const { return is_limit() ? 0 : l; }

    friend bool operator==(Regime const&, Regime const&) = default;
    friend auto operator<=>(Regime const&, Regime const&) = default;
};

struct PCElement {
    Regime regime;
    std::array<std::int64_t, 25> b{};

    static constexpr int pos(int i, int j) { return (i - 1) * 5 + (j - i); }
    static constexpr bool valid(int i, int j) { return i >= 1 && i <= 5 && j >= i && j <= i + 4; }

    std::int64_t at(int i, int j) const {
        if (!valid(i, j)) throw std::out_of_range("b_ij index outside i <= j <= i+4");
        return b[pos(i, j)];
    }
    std::int64_t& at(int i, int j) {
        if (!valid(i, j)) throw std::out_of_range("b_ij index outside i <= j <= i+4");
        return b[pos(i, j)];
    }
    std::int64_t operator()(int i, int j) const { return b[pos(i, j)]; }

    /// sum_{j=lo}^{hi} b_ij over the entries that exist.
    std::int64_t row_sum(int i, int lo, int hi) const {
        std::int64_t s = 0;
        for (int j = std::max(lo, i); j <= std::min(hi, i + 4); ++j) s += b[pos(i, j)];
        return s;
    }

    static PCElement zero(Regime r) { return PCElement{r, {}}; }

    /// Entrywise from (i, j, value) triples, other entries 0.
    static PCElement from_entries(Regime r, std::initializer_list<std::array<std::int64_t, 3>> entries) {
        PCElement e{r, {}};
        for (auto const& [i, j, v] : entries) e.at(static_cast<int>(i), static_cast<int>(j)) = v;
        return e;
    }

    friend bool operator==(PCElement const&, PCElement const&) = default;
    friend auto operator<=>(PCElement const&, PCElement const&) = default;

    friend std::ostream& operator<<(std::ostream& os, PCElement const& e) {
        for (int i = 1; i <= 5; ++i) {
            os << (i == 1 ? "[" : " [");
            for (int j = i; j <= i + 4; ++j) os << (j > i ? " " : "") << e(i, j);
            os << ']';
        }
        return os;
    }
};

// ---------------------------------------------------------------- membership

inline bool is_member(PCElement const& e) {
    bool const lim = e.regime.is_limit();
    std::int64_t const target = lim ? 0 : e.regime.l;
    if (!lim && e.regime.l < 1) return false;
    for (int i = 1; i <= 5; ++i) {
        if (e.row_sum(i, i, i + 4) != target) return false;
        if (!lim)
            for (int j = i; j <= i + 4; ++j)
                if (e(i, j) < 0) return false;
    }
    for (int i = 1; i <= 5; ++i)
        for (int t = 1; i + t <= 5; ++t)
            if (e.row_sum(i, i, 5 - t) != e.row_sum(i + t, i + t, 4 + t)) return false;
    if (!lim)
        for (int i = 1; i <= 4; ++i)
            for (int t = i; t <= 4; ++t)
                if (e.row_sum(i, i, t) < e.row_sum(i + 1, i + 1, t + 1)) return false;
    return true;
}

// ---------------------------------------------------------------- operators

namespace detail {
using Cell = std::pair<int, int>;
using Move = std::pair<Cell, Cell>;  // e lowers the first cell and raises the second

inline std::int64_t pos_part(std::int64_t v) { return v > 0 ? v : 0; }

// (E_j) for strict = false; (F_j), where > and >= trade places, for strict = true.
inline bool zero_condition(PCElement const& b, int j, bool swapped) {
    auto gt = [swapped](std::int64_t x, std::int64_t y) { return swapped ? x >= y : x > y; };
    auto ge = [swapped](std::int64_t x, std::int64_t y) { return swapped ? x > y : x >= y; };
    std::int64_t const p = pos_part(b(1, 3) - b(2, 4));
    std::int64_t const q = pos_part(b(1, 4) - b(2, 2) - b(2, 3) + b(3, 3) + b(3, 4));
    switch (j) {
        case 1:
            return gt(b(2, 2), b(1, 3) + b(1, 4) + b(4, 4)) &&
                   gt(b(2, 2) + b(2, 3), b(1, 4) + b(3, 3) + b(3, 4)) &&
                   gt(b(2, 2), b(1, 4) + b(3, 3) + p);
        case 2:
            return gt(b(3, 3) + b(3, 4), b(1, 3) + b(2, 3) + b(4, 4)) &&
                   ge(b(1, 4) + b(3, 3) + b(3, 4), b(2, 2) + b(2, 3)) && gt(b(3, 4), b(2, 3) + p);
        case 3:
            return gt(b(3, 3), b(1, 3) + b(4, 4)) && gt(b(2, 4), b(1, 3)) &&
                   ge(b(1, 4) + b(3, 3), b(2, 2) + q);
        case 4:
            return gt(b(3, 3), b(2, 4) + b(4, 4)) && ge(b(1, 3), b(2, 4)) &&
                   ge(b(1, 3) + b(1, 4) + b(3, 3), b(2, 2) + b(2, 4) + q);
        case 5:
            return ge(b(1, 3) + b(4, 4), b(3, 3) + p) && ge(b(1, 3) + b(1, 4) + b(4, 4), b(2, 2) + q);
        default: throw std::out_of_range("zero-action case index must be 1..5");
    }
}

inline std::vector<Move> const& zero_moves(int j) {
    static const std::array<std::vector<Move>, 5> table = {{
        {{{1, 1}, {1, 5}}, {{2, 2}, {2, 6}}, {{3, 5}, {3, 7}}, {{4, 6}, {4, 8}}, {{5, 7}, {5, 9}}},
        {{{1, 1}, {1, 4}}, {{2, 2}, {2, 5}}, {{3, 4}, {3, 7}}, {{4, 5}, {4, 8}}, {{5, 7}, {5, 9}}},
        {{{1, 1}, {1, 4}},
         {{2, 2}, {2, 3}},
         {{2, 4}, {2, 5}},
         {{3, 3}, {3, 7}},
         {{4, 5}, {4, 6}},
         {{4, 7}, {4, 8}},
         {{5, 6}, {5, 9}}},
        {{{1, 1}, {1, 3}}, {{2, 2}, {2, 5}}, {{3, 3}, {3, 6}}, {{4, 5}, {4, 8}}, {{5, 6}, {5, 9}}},
        {{{1, 1}, {1, 3}}, {{2, 2}, {2, 4}}, {{3, 3}, {3, 5}}, {{4, 4}, {4, 8}}, {{5, 5}, {5, 9}}},
    }};
    return table.at(j - 1);
}

inline PCElement apply_moves(PCElement b, std::vector<Move> const& moves, int sign) {
    for (auto const& [lo, hi] : moves) {
        b.b[PCElement::pos(lo.first, lo.second)] -= sign;
        b.b[PCElement::pos(hi.first, hi.second)] += sign;
    }
    return b;
}

// Branch chosen by e_k (k = 1..5); the f_k branch uses the dual strictness.
inline std::vector<Move> const& branch_moves(int k, int branch) {
    static const std::array<std::vector<std::vector<Move>>, 6> table = {{
        {},
        {{{{1, 2}, {1, 1}}, {{5, 9}, {5, 8}}}},
        {{{{1, 3}, {1, 2}}, {{4, 8}, {4, 7}}}, {{{2, 3}, {2, 2}}, {{5, 8}, {5, 7}}}},
        {{{{1, 4}, {1, 3}}, {{3, 7}, {3, 6}}},
         {{{2, 4}, {2, 3}}, {{4, 7}, {4, 6}}},
         {{{3, 4}, {3, 3}}, {{5, 7}, {5, 6}}}},
        {{{{1, 5}, {1, 4}}, {{2, 6}, {2, 5}}}, {{{3, 5}, {3, 4}}, {{4, 6}, {4, 5}}}},
        {{{{2, 5}, {2, 4}}, {{3, 6}, {3, 5}}}, {{{4, 5}, {4, 4}}, {{5, 6}, {5, 5}}}},
    }};
    return table.at(k).at(branch);
}

inline int e_branch(int k, PCElement const& b) {
    switch (k) {
        case 1: return 0;
        case 2: return b(1, 2) >= b(2, 3) ? 0 : 1;
        case 3: {
            std::int64_t const s = b(1, 3) + b(2, 3), t = b(2, 4) + b(3, 4);
            if (b(1, 3) >= b(2, 4) && s >= t) return 0;
            if (b(1, 3) < b(2, 4) && b(2, 3) >= b(3, 4)) return 1;
            if (b(2, 3) < b(3, 4) && s < t) return 2;
            throw std::logic_error("no e_3 branch applies");
        }
        case 4: return b(1, 4) + b(3, 3) + b(3, 4) >= b(2, 2) + b(2, 3) ? 0 : 1;
        default: return b(2, 4) + b(4, 4) >= b(3, 3) ? 0 : 1;
    }
}

inline int f_branch(int k, PCElement const& b) {
    switch (k) {
        case 1: return 0;
        case 2: return b(1, 2) > b(2, 3) ? 0 : 1;
        case 3: {
            std::int64_t const s = b(1, 3) + b(2, 3), t = b(2, 4) + b(3, 4);
            if (b(1, 3) > b(2, 4) && s > t) return 0;
            if (b(1, 3) <= b(2, 4) && b(2, 3) > b(3, 4)) return 1;
            if (b(2, 3) <= b(3, 4) && s <= t) return 2;
            throw std::logic_error("no f_3 branch applies");
        }
        case 4: return b(1, 4) + b(3, 3) + b(3, 4) > b(2, 2) + b(2, 3) ? 0 : 1;
        default: return b(2, 4) + b(4, 4) > b(3, 3) ? 0 : 1;
    }
}
}  // namespace detail

/// Which case of the operator applies: 1..5 for (E_j)/(F_j) when k = 0 (0 if none),
/// otherwise the 1-based branch of the k-table.
struct CaseTag {
    int k = 0;
    int index = 0;
    friend bool operator==(CaseTag const&, CaseTag const&) = default;
};

/// Number of (E_j) (raising) or (F_j) (lowering) conditions that hold at b.
inline int zero_condition_count(PCElement const& b, bool lowering) {
    int n = 0;
    for (int j = 1; j <= 5; ++j) n += detail::zero_condition(b, j, lowering) ? 1 : 0;
    return n;
}

inline CaseTag e_case(int k, PCElement const& b) {
    check_index(k);
    if (k == 0) {
        for (int j = 1; j <= 5; ++j)
            if (detail::zero_condition(b, j, false)) return {0, j};
        return {0, 0};
    }
    return {k, detail::e_branch(k, b) + 1};
}

inline CaseTag f_case(int k, PCElement const& b) {
    check_index(k);
    if (k == 0) {
        for (int j = 1; j <= 5; ++j)
            if (detail::zero_condition(b, j, true)) return {0, j};
        return {0, 0};
    }
    return {k, detail::f_branch(k, b) + 1};
}

namespace detail {
inline std::optional<PCElement> act(int k, PCElement const& b, int sign) {
    CaseTag const tag = sign > 0 ? e_case(k, b) : f_case(k, b);
    if (tag.index == 0) return std::nullopt;
    auto const& moves = k == 0 ? zero_moves(tag.index) : branch_moves(k, tag.index - 1);
    PCElement out = apply_moves(b, moves, sign);
    if (!out.regime.is_limit() && !is_member(out)) return std::nullopt;
    return out;
}
}  // namespace detail

inline std::optional<PCElement> e_tilde(int k, PCElement const& b) { return detail::act(k, b, +1); }
inline std::optional<PCElement> f_tilde(int k, PCElement const& b) { return detail::act(k, b, -1); }

// ---------------------------------------------------------------- string functions

inline std::int64_t eps_k(int k, PCElement const& e) {
    check_index(k);
    auto const& b = e;
    std::int64_t const l = e.regime.shift();
    switch (k) {
        case 0:
            return l + std::max({-b(4, 5) - b(4, 6) - b(4, 7) - b(4, 8),
                                 -b(1, 3) - b(3, 4) - b(3, 5) - b(3, 6) - b(3, 7),
                                 -b(2, 4) - b(3, 4) - b(3, 5) - b(3, 6) - b(3, 7),
                                 -b(1, 3) - b(1, 4) - b(2, 3) - b(2, 4) - b(2, 5) - b(2, 6),
                                 -b(1, 3) - b(2, 3) - b(3, 5) - b(3, 6) - b(3, 7)});
        case 1: return b(1, 2);
        case 2: return std::max(b(1, 3), -b(1, 2) + b(1, 3) + b(2, 3));
        case 3:
            return std::max({b(1, 4), -b(1, 3) + b(1, 4) + b(2, 4),
                             -b(1, 3) + b(1, 4) - b(2, 3) + b(2, 4) + b(3, 4)});
        case 4:
            return l + std::max(-b(1, 1) - b(1, 2) - b(1, 3) - b(1, 4),
                                -b(1, 1) - b(1, 2) - b(1, 3) - 2 * b(1, 4) + b(2, 2) + b(2, 3) - b(3, 3) -
                                    b(3, 4));
        default:
            return std::max(b(1, 1) + b(1, 2) + b(1, 3) - b(2, 2) - b(2, 3) - b(2, 4),
                            b(1, 1) + b(1, 2) + b(1, 3) - b(2, 2) - b(2, 3) - 2 * b(2, 4) + b(3, 3) - b(4, 4));
    }
}

inline std::int64_t phi_k(int k, PCElement const& e) {
    check_index(k);
    auto const& b = e;
    std::int64_t const l = e.regime.shift();
    switch (k) {
        case 0:
            return l + std::max({-b(1, 1) - b(1, 2) - b(1, 3) - b(1, 4), -b(1, 1) - b(1, 2) - b(2, 2) + b(4, 4),
                                 -b(1, 1) - b(1, 2) - b(1, 3) - b(2, 2) + b(3, 3),
                                 -b(1, 1) - b(1, 2) - b(2, 2) - b(2, 4) + b(3, 3),
                                 -b(1, 1) - b(1, 2) - b(1, 3) - b(2, 2) - b(2, 3) + b(3, 3) + b(3, 4)});
        case 1: return b(1, 1) - b(2, 2);
        case 2: return std::max(b(2, 2) - b(3, 3), b(1, 2) + b(2, 2) - b(2, 3) - b(3, 3));
        case 3:
            return std::max({b(3, 3) - b(4, 4), b(2, 3) + b(3, 3) - b(3, 4) - b(4, 4),
                             b(1, 3) + b(2, 3) - b(2, 4) + b(3, 3) - b(3, 4) - b(4, 4)});
        case 4:
            return l + std::max(-b(3, 3) - b(3, 5) - b(3, 6) - b(3, 7),
                                b(1, 4) - b(2, 2) - b(2, 3) + b(3, 4) - b(3, 5) - b(3, 6) - b(3, 7));
        default: return std::max(b(4, 4), b(2, 4) - b(3, 3) + 2 * b(4, 4));
    }
}

inline std::int64_t wt_k(int k, PCElement const& b) {
    check_index(k);
    switch (k) {
        case 0: return -b(1, 1) - b(1, 2) + b(2, 3) + b(2, 4) + b(2, 5) + b(2, 6);
        case 1: return b(1, 1) - b(1, 2) - b(2, 2);
        case 2: return b(1, 2) - b(1, 3) + b(2, 2) - b(2, 3) - b(3, 3);
        case 3: return b(1, 3) - b(1, 4) + b(2, 3) - b(2, 4) + b(3, 3) - b(3, 4) - b(4, 4);
        case 4:
            return b(1, 1) + b(1, 2) + b(1, 3) + 2 * b(1, 4) - b(2, 2) - b(2, 3) + b(3, 4) - b(3, 5) - b(3, 6) -
                   b(3, 7);
        default:
            return -b(1, 1) - b(1, 2) - b(1, 3) + b(2, 2) + b(2, 3) + 2 * b(2, 4) - b(3, 3) + 2 * b(4, 4);
    }
}

inline ClWeight wt(PCElement const& b) {
    ClWeight w;
    for (int k = 0; k < kRank; ++k) w[k] = wt_k(k, b);
    return w;
}
inline ClWeight eps(PCElement const& b) {
    ClWeight w;
    for (int k = 0; k < kRank; ++k) w[k] = eps_k(k, b);
    return w;
}
inline ClWeight phi(PCElement const& b) {
    ClWeight w;
    for (int k = 0; k < kRank; ++k) w[k] = phi_k(k, b);
    return w;
}

// ---------------------------------------------------------------- enumeration

inline constexpr std::int64_t kMaxEnumerateLevel = 4;

namespace detail {
// All 5-part compositions of l, lexicographic.
inline std::vector<std::array<std::int64_t, 5>> compositions(std::int64_t l) {
    std::vector<std::array<std::int64_t, 5>> out;
    std::array<std::int64_t, 5> c{};
    auto rec = [&](auto&& self, int p, std::int64_t rest) -> void {
        if (p == 4) {
            c[4] = rest;
            out.push_back(c);
            return;
        }
        for (std::int64_t v = 0; v <= rest; ++v) {
            c[p] = v;
            self(self, p + 1, rest - v);
        }
    };
    rec(rec, 0, l);
    return out;
}

// Constraints linking row r with the rows above it.
inline bool rows_consistent(PCElement const& e, int r) {
    for (int i = 1; i < r; ++i) {
        int const t = r - i;
        if (e.row_sum(i, i, 5 - t) != e.row_sum(r, r, 4 + t)) return false;
    }
    if (r >= 2) {
        int const i = r - 1;
        for (int t = i; t <= 4; ++t)
            if (e.row_sum(i, i, t) < e.row_sum(i + 1, i + 1, t + 1)) return false;
    }
    return true;
}
}  // namespace detail

/// All of B^{5,l}, in lexicographic order of the row-major entries.
inline std::vector<PCElement> enumerate(std::int64_t l) {
    if (l < 1 || l > kMaxEnumerateLevel)
        throw std::out_of_range("enumerate supports 1 <= l <= " + std::to_string(kMaxEnumerateLevel));
    auto const comps = detail::compositions(l);
    std::vector<PCElement> out;
    PCElement e = PCElement::zero(Regime::finite(l));
    auto rec = [&](auto&& self, int r) -> void {
        if (r == 6) {
            out.push_back(e);
            return;
        }
        for (auto const& c : comps) {
            for (int d = 0; d < 5; ++d) e.b[PCElement::pos(r, r + d)] = c[d];
            if (detail::rows_consistent(e, r)) self(self, r + 1);
        }
        for (int d = 0; d < 5; ++d) e.b[PCElement::pos(r, r + d)] = 0;
    };
    rec(rec, 1);
    return out;
}

// ---------------------------------------------------------------- minimal elements

/// Weighted level a_0 + a_1 + 2a_2 + 2a_3 + a_4 + a_5.
inline std::int64_t a_level(std::array<std::int64_t, 6> const& a) {
    std::int64_t s = 0;
    for (int k = 0; k < kRank; ++k) s += kCentralCoeffs[k] * a[k];
    return s;
}

/// b^0(a) = sum_k a_k b^0_k.
inline PCElement minimal_element(std::array<std::int64_t, 6> const& a) {
    for (auto v : a)
        if (v < 0) throw std::invalid_argument("a-vector entries must be nonnegative");
    std::int64_t const l = a_level(a);
    auto const [a0, a1, a2, a3, a4, a5] = a;
    PCElement e = PCElement::zero(l >= 1 ? Regime::finite(l) : Regime::limit());
    auto set = [&](int i, int j, std::int64_t v) { e.b[PCElement::pos(i, j)] = v; };
    set(1, 1, a1 + a2 + a3 + a5), set(1, 2, a4), set(1, 3, a3), set(1, 4, a2), set(1, 5, a0);
    set(2, 2, a2 + a3 + a5), set(2, 3, a4), set(2, 4, a3), set(2, 5, a1 + a2), set(2, 6, a0);
    set(3, 3, a3 + a5), set(3, 4, a4), set(3, 5, a2 + a3), set(3, 6, a1), set(3, 7, a0 + a2);
    set(4, 4, a5), set(4, 5, a3 + a4), set(4, 6, a2), set(4, 7, a1), set(4, 8, a0 + a2 + a3);
    set(5, 5, a5), set(5, 6, a3), set(5, 7, a2), set(5, 8, a1), set(5, 9, a0 + a2 + a3 + a4);
    return e;
}

inline std::array<std::int64_t, 6> a_vector_of(ClWeight const& w) {
    std::array<std::int64_t, 6> a{};
    for (int k = 0; k < kRank; ++k) a[k] = w[k];
    return a;
}

/// (B^{5,l})_min, in lexicographic order.
inline std::vector<PCElement> minimal_elements(std::int64_t l) {
    if (l < 1) throw std::invalid_argument("minimal_elements needs l >= 1");
    std::vector<PCElement> out;
    for (auto const& w : dominant_weights_of_level(l)) out.push_back(minimal_element(a_vector_of(w)));
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------- crystal graph

struct CrystalEdge {
    std::size_t from;
    int k;
    std::size_t to;
    friend bool operator==(CrystalEdge const&, CrystalEdge const&) = default;
};

struct CrystalGraph {
    std::vector<PCElement> vertices;
    std::vector<CrystalEdge> edges;  // f_k arrows, ordered by (from, k)
};

inline constexpr std::int64_t kMaxGraphLevel = 3;

inline CrystalGraph crystal_graph(std::int64_t l) {
    if (l < 1 || l > kMaxGraphLevel)
        throw std::out_of_range("crystal_graph supports 1 <= l <= " + std::to_string(kMaxGraphLevel));
    CrystalGraph g;
    g.vertices = enumerate(l);
    std::map<PCElement, std::size_t> index;
    for (std::size_t i = 0; i < g.vertices.size(); ++i) index.emplace(g.vertices[i], i);
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
        for (int k = 0; k < kRank; ++k)
            if (auto f = f_tilde(k, g.vertices[i])) g.edges.push_back({i, k, index.at(*f)});
    return g;
}

// ---------------------------------------------------------------- serialization

inline Json to_json(PCElement const& e) {
    Json j;
    j["regime"] = e.regime.is_limit() ? "limit" : "finite";
    if (!e.regime.is_limit()) j["l"] = e.regime.l;
    j["rows"] = Json::array();
    for (int i = 1; i <= 5; ++i) {
        Json row = Json::array();
        for (int d = 0; d < 5; ++d) row.push_back(e(i, i + d));
        j["rows"].push_back(std::move(row));
    }
    return j;
}

inline PCElement element_from_json(Json const& j) {
    auto const regime = j.at("regime").get<std::string>();
    PCElement e;
    if (regime == "limit")
        e.regime = Regime::limit();
    else if (regime == "finite")
        e.regime = Regime::finite(j.at("l").get<std::int64_t>());
    else
        throw std::invalid_argument("regime must be \"finite\" or \"limit\"");
    auto const& rows = j.at("rows");
    if (!rows.is_array() || rows.size() != 5) throw std::invalid_argument("an element has 5 rows");
    for (int i = 1; i <= 5; ++i) {
        auto const& row = rows.at(i - 1);
        if (!row.is_array() || row.size() != 5) throw std::invalid_argument("each row has 5 entries");
        for (int d = 0; d < 5; ++d) e.b[PCElement::pos(i, i + d)] = row.at(d).get<std::int64_t>();
    }
    return e;
}

/// Compact one-line label, rows separated by '|'.
inline std::string label(PCElement const& e) {
    std::string s;
    for (int i = 1; i <= 5; ++i) {
        if (i > 1) s += '|';
        for (int d = 0; d < 5; ++d) s += (d ? "," : "") + std::to_string(e(i, i + d));
    }
    return s;
}

inline std::string to_dot(CrystalGraph const& g, std::int64_t l) {
    static constexpr std::array<char const*, 6> colors = {"black", "red", "blue", "darkgreen", "orange", "purple"};
    std::ostringstream os;
    os << "digraph B5_" << l << " {\n";
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
        os << "  n" << i << " [label=\"" << label(g.vertices[i]) << "\"];\n";
    for (auto const& e : g.edges)
        os << "  n" << e.from << " -> n" << e.to << " [label=\"k=" << e.k << "\", color=" << colors[e.k]
           << "];\n";
    os << "}\n";
    return os.str();
}

}  // namespace d5
