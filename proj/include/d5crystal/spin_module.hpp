#pragma once

// The 16-dimensional level-zero fundamental module W(varpi_5) of D_5^(1),
// over exact rationals.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cartan.hpp"
#include "geom_point.hpp"
#include "rational.hpp"

namespace d5 {

inline constexpr int kSpinDim = 16;

/// Sign tuple (i_1..i_5) with an even number of minus signs.
/// Bit p of `minus` is set when i_{p+1} = '-'.
class SpinBasis {
public:
    constexpr SpinBasis() = default;

    static constexpr std::optional<SpinBasis> from_mask(std::uint8_t minus) {
        if (minus >= 32 || std::popcount(minus) % 2 != 0) return std::nullopt;
        SpinBasis b;
        b.minus_ = minus;
        return b;
    }

    /// Parses "+-+-+" style strings (ASCII '+'/'-').
    static SpinBasis parse(std::string_view s) {
        if (s.size() != 5) throw std::invalid_argument("spin basis string must have 5 signs");
        std::uint8_t m = 0;
        for (int p = 0; p < 5; ++p) {
            if (s[p] == '-')
                m |= static_cast<std::uint8_t>(1u << p);
            else if (s[p] != '+')
                throw std::invalid_argument("spin basis string must use '+' and '-'");
        }
        auto b = from_mask(m);
        if (!b) throw std::invalid_argument("spin basis needs an even number of minus signs");
        return *b;
    }

    /// Sign at position p in 1..5: +1 or -1.
    constexpr int sign(int p) const { return (minus_ >> (p - 1)) & 1u ? -1 : 1; }
    constexpr std::uint8_t mask() const { return minus_; }

    constexpr SpinBasis flipped(int p, int q) const {
        SpinBasis b;
        b.minus_ = static_cast<std::uint8_t>(minus_ ^ (1u << (p - 1)) ^ (1u << (q - 1)));
        return b;
    }

    std::string str() const {
        std::string s(5, '+');
        for (int p = 1; p <= 5; ++p)
            if (sign(p) < 0) s[p - 1] = '-';
        return s;
    }

    /// Canonical position 0..15: lexicographic on the sign tuple with + < -.
    int index() const;

    friend constexpr bool operator==(SpinBasis, SpinBasis) = default;

    friend std::ostream& operator<<(std::ostream& os, SpinBasis b) { return os << b.str(); }

private:
    std::uint8_t minus_ = 0;
};

namespace detail {
// Lexicographic key: position 1 is the most significant sign.
constexpr unsigned lex_key(std::uint8_t minus) {
    unsigned key = 0;
    for (int p = 0; p < 5; ++p) key = (key << 1) | ((minus >> p) & 1u);
    return key;
}

inline std::array<SpinBasis, kSpinDim> const& basis_table() {
    static const auto table = [] {
        std::array<std::uint8_t, kSpinDim> masks{};
        int n = 0;
        for (unsigned m = 0; m < 32; ++m)
            if (std::popcount(m) % 2 == 0) masks[n++] = static_cast<std::uint8_t>(m);
        std::sort(masks.begin(), masks.end(),
                  [](auto a, auto b) { return lex_key(a) < lex_key(b); });
        std::array<SpinBasis, kSpinDim> out{};
        for (int i = 0; i < kSpinDim; ++i) out[i] = *SpinBasis::from_mask(masks[i]);
        return out;
    }();
    return table;
}
}  // namespace detail

/// The 16 basis vectors in canonical order.
inline std::span<const SpinBasis, kSpinDim> spin_basis() { return detail::basis_table(); }

inline int SpinBasis::index() const {
    auto const& t = detail::basis_table();
    for (int i = 0; i < kSpinDim; ++i)
        if (t[i] == *this) return i;
    throw std::logic_error("spin basis vector outside the admissible set");
}

/// Element of W(varpi_5): coefficient per basis vector (canonical order).
struct SpinVector {
    std::array<Rational, kSpinDim> coeffs{};

    static SpinVector basis(SpinBasis b) {
        SpinVector v;
        v.coeffs[b.index()] = 1;
        return v;
    }

    Rational const& operator[](SpinBasis b) const { return coeffs[b.index()]; }
    Rational& operator[](SpinBasis b) { return coeffs[b.index()]; }

    bool is_zero() const {
        return std::all_of(coeffs.begin(), coeffs.end(), [](auto const& q) { return q == 0; });
    }

    SpinVector& operator+=(SpinVector const& o) {
        for (int i = 0; i < kSpinDim; ++i) coeffs[i] += o.coeffs[i];
        return *this;
    }
    friend SpinVector operator+(SpinVector a, SpinVector const& b) { return a += b; }
    friend SpinVector operator*(Rational const& s, SpinVector v) {
        for (auto& q : v.coeffs) q *= s;
        return v;
    }
    friend bool operator==(SpinVector const&, SpinVector const&) = default;

    friend std::ostream& operator<<(std::ostream& os, SpinVector const& v) {
        bool first = true;
        auto const& basis = detail::basis_table();
        for (int i = 0; i < kSpinDim; ++i) {
            if (v.coeffs[i] == 0) continue;
            os << (first ? "" : " + ") << v.coeffs[i] << basis[i];
            first = false;
        }
        return os << (first ? "0" : "");
    }
};

enum class Gen { e, f };

/// Generator action on a single basis vector; nullopt means the image is 0.
inline std::optional<SpinBasis> apply_gen(Gen g, int k, SpinBasis b) {
    check_index(k);
    // Positions involved and the pair pattern f_k needs (e_k needs the reverse).
    int p = 0, q = 0, sp = 0, sq = 0;
    if (k == 0) {
        p = 1, q = 2, sp = -1, sq = -1;
    } else if (k == 5) {
        p = 4, q = 5, sp = 1, sq = 1;
    } else {
        p = k, q = k + 1, sp = 1, sq = -1;
    }
    if (g == Gen::e) sp = -sp, sq = -sq;
    if (b.sign(p) == sp && b.sign(q) == sq) return b.flipped(p, q);
    return std::nullopt;
}

inline SpinVector apply_gen(Gen g, int k, SpinVector const& v) {
    SpinVector out;
    auto basis = spin_basis();
    for (int i = 0; i < kSpinDim; ++i) {
        if (v.coeffs[i] == 0) continue;
        if (auto img = apply_gen(g, k, basis[i])) out[*img] += v.coeffs[i];
    }
    return out;
}

/// <alpha_k^vee, wt(b)>
inline int coroot_pairing(int k, SpinBasis b) {
    check_index(k);
    int s1 = 0, s2 = 0;
    if (k == 0) {
        // f_0 acts on (-,-); weight +1 there, -1 on (+,+).
        s1 = b.sign(1), s2 = b.sign(2);
        if (s1 < 0 && s2 < 0) return 1;
        if (s1 > 0 && s2 > 0) return -1;
        return 0;
    }
    if (k == 5) {
        s1 = b.sign(4), s2 = b.sign(5);
        if (s1 > 0 && s2 > 0) return 1;
        if (s1 < 0 && s2 < 0) return -1;
        return 0;
    }
    s1 = b.sign(k), s2 = b.sign(k + 1);
    if (s1 > 0 && s2 < 0) return 1;
    if (s1 < 0 && s2 > 0) return -1;
    return 0;
}

inline ClWeight spin_weight(SpinBasis b) {
    ClWeight w;
    for (int k = 0; k < kRank; ++k) w.coeffs[k] = coroot_pairing(k, b);
    return w;
}

/// Y_k(c) = (1 + f_k / c) c^{alpha_k^vee}, valid because f_k^2 = 0 on W(varpi_5).
inline SpinVector apply_Y(int k, Rational const& c, SpinVector const& v) {
    check_index(k);
    if (sgn(c) <= 0) throw std::domain_error("Y_k(c) needs c > 0");
    SpinVector out;
    auto basis = spin_basis();
    for (int i = 0; i < kSpinDim; ++i) {
        if (v.coeffs[i] == 0) continue;
        Rational scaled = v.coeffs[i] * rpow(c, coroot_pairing(k, basis[i]));
        out.coeffs[i] += scaled;
        if (auto img = apply_gen(Gen::f, k, basis[i])) out[*img] += scaled / c;
    }
    return out;
}

/// Y_{i_1}(c_1) ... Y_{i_n}(c_n) v, rightmost factor first.
inline SpinVector apply_Y_word(std::span<const int> word, std::span<const Rational> cs,
                               SpinVector v) {
    if (word.size() != cs.size()) throw std::invalid_argument("word and parameters differ in length");
    for (std::size_t m = word.size(); m-- > 0;) v = apply_Y(word[m], cs[m], v);
    return v;
}

inline SpinVector build_V1(GeomPoint const& x) {
    return apply_Y_word(kWordV1, x.v, SpinVector::basis(SpinBasis::parse("+++++")));
}

inline SpinVector build_V2(GeomPointV2 const& y) {
    return apply_Y_word(kWordV2, y.v, SpinVector::basis(SpinBasis::parse("-+++-")));
}

namespace detail {
/// sigma(v) = v' where sigma(wt v) = wt v'; weights of the 16 basis vectors are distinct.
inline std::array<int, kSpinDim> compute_sigma_table() {
    std::array<int, kSpinDim> table{};
    auto basis = spin_basis();
    for (int i = 0; i < kSpinDim; ++i) {
        ClWeight target = apply_sigma(spin_weight(basis[i]));
        int found = -1;
        for (int j = 0; j < kSpinDim; ++j) {
            if (spin_weight(basis[j]) == target) {
                if (found >= 0) throw std::logic_error("sigma twist: weight matched twice");
                found = j;
            }
        }
        if (found < 0) throw std::logic_error("sigma twist: no basis vector with the twisted weight");
        table[i] = found;
    }
    return table;
}
}  // namespace detail

/// Basis permutation induced by sigma (cached).
inline std::array<int, kSpinDim> const& sigma_table() {
    static const auto table = detail::compute_sigma_table();
    return table;
}

inline SpinBasis sigma_twist(SpinBasis b) { return spin_basis()[sigma_table()[b.index()]]; }

inline SpinVector sigma_twist(SpinVector const& v) {
    SpinVector out;
    auto const& t = sigma_table();
    for (int i = 0; i < kSpinDim; ++i) out.coeffs[t[i]] = v.coeffs[i];
    return out;
}

}  // namespace d5
