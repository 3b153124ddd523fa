#pragma once

/* Static Cartan data of the affine algebra D_5^(1).

   Node labels 0..5 are used verbatim everywhere:

       0           4
        \         /
         2 ----- 3
        /         \
       1           5

   Weights live in P_cl, stored as coefficients of Lambda_0..Lambda_5. */

#include <array>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace d5 {

inline constexpr int kRank = 6;

using CartanMatrix = std::array<std::array<int, kRank>, kRank>;

namespace detail {
constexpr CartanMatrix make_cartan() {
    CartanMatrix a{};
    for (int i = 0; i < kRank; ++i)
        for (int j = 0; j < kRank; ++j) a[i][j] = (i == j) ? 2 : 0;
    constexpr int edges[5][2] = {{1, 2}, {2, 3}, {3, 4}, {0, 2}, {3, 5}};
    for (auto const& e : edges) {
        a[e[0]][e[1]] = -1;
        a[e[1]][e[0]] = -1;
    }
    return a;
}
}  // namespace detail

/// a_{ij}; symmetric since D_5^(1) is simply laced.
inline constexpr CartanMatrix kCartan = detail::make_cartan();

/// Coefficients of the canonical central element c in the coroot basis.
inline constexpr std::array<int, kRank> kCentralCoeffs = {1, 1, 2, 2, 1, 1};

/// Diagram automorphism 0->5, 1->4, 2->3, 3->2, 4->0, 5->1.
inline constexpr std::array<int, kRank> kSigma = {5, 4, 3, 2, 0, 1};

constexpr int cartan(int i, int j) { return kCartan.at(i).at(j); }

constexpr int sigma(int k) { return kSigma.at(k); }

inline void check_index(int k) {
    if (k < 0 || k >= kRank) throw std::out_of_range("Dynkin index must lie in 0..5");
}

/// Classical weight sum_k coeffs[k] * Lambda_k.
struct ClWeight {
    std::array<std::int64_t, kRank> coeffs{};

    constexpr std::int64_t operator[](int k) const { return coeffs[k]; }
    constexpr std::int64_t& operator[](int k) { return coeffs[k]; }

    static constexpr ClWeight fundamental(int k) {
        ClWeight w;
        w.coeffs[k] = 1;
        return w;
    }

    constexpr ClWeight& operator+=(ClWeight const& o) {
        for (int k = 0; k < kRank; ++k) coeffs[k] += o.coeffs[k];
        return *this;
    }
    constexpr ClWeight& operator-=(ClWeight const& o) {
        for (int k = 0; k < kRank; ++k) coeffs[k] -= o.coeffs[k];
        return *this;
    }
    friend constexpr ClWeight operator+(ClWeight a, ClWeight const& b) { return a += b; }
    friend constexpr ClWeight operator-(ClWeight a, ClWeight const& b) { return a -= b; }
    friend constexpr ClWeight operator-(ClWeight a) {
        for (auto& v : a.coeffs) v = -v;
        return a;
    }
    friend constexpr bool operator==(ClWeight const&, ClWeight const&) = default;
    friend constexpr auto operator<=>(ClWeight const&, ClWeight const&) = default;

    /// <alpha_k^vee, lambda>
    constexpr std::int64_t pairing(int k) const { return coeffs[k]; }

    constexpr bool dominant() const {
        for (auto v : coeffs)
            if (v < 0) return false;
        return true;
    }

    friend std::ostream& operator<<(std::ostream& os, ClWeight const& w) {
        os << '(';
        for (int k = 0; k < kRank; ++k) os << (k ? "," : "") << w.coeffs[k];
        return os << ')';
    }
};

/// lambda(c)
constexpr std::int64_t level(ClWeight const& w) {
    std::int64_t s = 0;
    for (int k = 0; k < kRank; ++k) s += kCentralCoeffs[k] * w.coeffs[k];
    return s;
}

/// Classical image of alpha_k; alpha_k(alpha_j^vee) = a_{jk}, so this is column k of A.
constexpr ClWeight simple_root_cl(int k) {
    ClWeight w;
    for (int j = 0; j < kRank; ++j) w.coeffs[j] = kCartan[j][k];
    return w;
}

/// sigma(Lambda_j) = Lambda_sigma(j).
constexpr ClWeight apply_sigma(ClWeight const& w) {
    ClWeight out;
    for (int j = 0; j < kRank; ++j) out.coeffs[kSigma[j]] = w.coeffs[j];
    return out;
}

/// All dominant classical weights of level l, in lexicographic order of coefficients.
inline std::vector<ClWeight> dominant_weights_of_level(std::int64_t l) {
    if (l < 0) throw std::invalid_argument("level must be nonnegative");
    std::vector<ClWeight> out;
    ClWeight w;
    // Depth-first over coefficients, bounded by the remaining level budget.
    auto rec = [&](auto&& self, int k, std::int64_t remaining) -> void {
        if (k == kRank) {
            if (remaining == 0) out.push_back(w);
            return;
        }
        for (std::int64_t v = 0; v * kCentralCoeffs[k] <= remaining; ++v) {
            w.coeffs[k] = v;
            self(self, k + 1, remaining - v * kCentralCoeffs[k]);
        }
        w.coeffs[k] = 0;
    };
    rec(rec, 0, l);
    return out;
}

}  // namespace d5
