#pragma once

// The ultra-discretization X = Z^10 of V, and the isomorphism
// Omega : B^{5,inf} -> X.

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>

#include "cartan.hpp"
#include "geom_point.hpp"
#include "perfect_crystal.hpp"

namespace d5 {

using std::int64_t;

inline int64_t ud_wt_k(int k, UDPoint const& x) {
    using namespace slot;
    check_index(k);
    switch (k) {
        case 0: return -x[x22] - x[x21];
        case 1: return 2 * x[x11] - x[x22] - x[x21];
        case 2: return -x[x11] + 2 * x[x22] - x[x33] + 2 * x[x21] - x[x32] - x[x31];
        case 3:
            return -x[x22] + 2 * x[x33] - x[x42] - x[x21] + 2 * x[x32] - x[x52] + 2 * x[x31] - x[x41] - x[x51];
        case 4: return -x[x33] + 2 * x[x42] - x[x32] - x[x31] + 2 * x[x41];
        default: return -x[x33] - x[x32] + 2 * x[x52] - x[x31] + 2 * x[x51];
    }
}

inline int64_t ud_eps_k(int k, UDPoint const& x) {
    using namespace slot;
    check_index(k);
    switch (k) {
        case 0:
            return std::max({x[x51], x[x22] - x[x33] + x[x31], x[x32] - x[x52] + x[x31], x[x22] - x[x42] + x[x21],
                             x[x22] - x[x33] + x[x21] - x[x32] + x[x41]});
        case 1: return -x[x11] + x[x22];
        case 2: return std::max(-x[x22] + x[x33], x[x11] - 2 * x[x22] + x[x33] - x[x21] + x[x32]);
        case 3:
            return std::max({-x[x33] + x[x42], x[x22] - 2 * x[x33] + x[x42] - x[x32] + x[x52],
                             x[x22] - 2 * x[x33] + x[x42] + x[x21] - 2 * x[x32] + x[x52] - x[x31] + x[x41]});
        case 4: return std::max(-x[x42], x[x33] + x[x32] - 2 * x[x42] - x[x41]);
        default: return std::max(x[x33] - x[x52], x[x33] + x[x32] - 2 * x[x52] + x[x31] - x[x51]);
    }
}

inline int64_t ud_phi_k(int k, UDPoint const& x) { return ud_wt_k(k, x) + ud_eps_k(k, x); }

inline ClWeight ud_wt(UDPoint const& x) {
    ClWeight w;
    for (int k = 0; k < kRank; ++k) w[k] = ud_wt_k(k, x);
    return w;
}

/// Literal readings of two printed auxiliaries, kept for comparison only.
/// The tropical image of A = B + C is max(B, C), and c_2 involves x1_1, not x3_1.
struct UdLiteral {
    bool a_breve_sum = false;   // A-breve = B-breve + C-breve
    bool c2_with_x31 = false;   // c2-breve built from x3_2 + x3_1
};

inline UDPoint ud_e(int k, int64_t c, UDPoint const& x, UdLiteral lit = {}) {
    using namespace slot;
    check_index(k);
    UDPoint y = x;
    switch (k) {
        case 1: y[x11] += c; return y;
        case 2: {
            int64_t const p = x[x22] + x[x21], q = x[x32] + (lit.c2_with_x31 ? x[x31] : x[x11]);
            int64_t const c2 = std::max(c + p, q) - std::max(p, q);
            y[x22] += c2;
            y[x21] += c - c2;
            return y;
        }
        case 3: {
            int64_t const P = x[x33] + 2 * x[x32] + x[x31];
            int64_t const Q = x[x22] + x[x52] + x[x32] + x[x31];
            int64_t const R = x[x22] + x[x52] + x[x41] + x[x21];
            int64_t const c31 = std::max({c + P, Q, R}) - std::max({P, Q, R});
            int64_t const c32 = std::max({c + P, c + Q, R}) - std::max({c + P, Q, R});
            y[x33] += c31;
            y[x32] += c32;
            y[x31] += c - c31 - c32;
            return y;
        }
        case 4: {
            int64_t const p = x[x42] + x[x41], q = x[x33] + x[x32];
            int64_t const c4 = std::max(c + p, q) - std::max(p, q);
            y[x42] += c4;
            y[x41] += c - c4;
            return y;
        }
        case 5: {
            int64_t const p = x[x52] + x[x51], q = x[x32] + x[x31];
            int64_t const c5 = std::max(c + p, q) - std::max(p, q);
            y[x52] += c5;
            y[x51] += c - c5;
            return y;
        }
        default: break;
    }
    int64_t const B = x[x31] + std::max(x[x22] - x[x33], x[x32] - x[x52]);
    int64_t const C = x[x22] + x[x21] + std::max(-x[x42], x[x41] - x[x33] - x[x32]);
    int64_t const A = lit.a_breve_sum ? B + C : std::max(B, C);
    int64_t const s = std::max(x[x51], A);
    int64_t const M = std::max({c + x[x51], c + B, C});
    int64_t const T = std::max(x[x22] + x[x52] - x[x33], x[x32]);
    int64_t const N = std::max(M, x[x22] + x[x52] - x[x33] - x[x32] + std::max(c + x[x51], A));
    int64_t const G = std::max(x[x42] + x[x41], -c + x[x33] + x[x32] - s + M);
    int64_t const H = std::max(x[x33] + x[x32], x[x42] + x[x41]);
    y[x31] = x[x31] + s - M;
    y[x32] = -c + T + M - N;
    y[x33] = -c + x[x33] + x[x32] - s - T + N;
    y[x41] = -c + x[x41] + H - G;
    y[x42] = x[x42] - H + G;
    y[x51] = x[x51] + s - std::max(c + x[x51], A);
    y[x52] = -c + x[x52] - s + std::max(c + x[x51], A);
    y[x22] = x[x22] - c;
    y[x11] = x[x11] - c;
    y[x21] = x[x21] - c;
    return y;
}

inline UDPoint ud_e_tilde(int k, UDPoint const& x) { return ud_e(k, 1, x); }
inline UDPoint ud_f_tilde(int k, UDPoint const& x) { return ud_e(k, -1, x); }

/// The explicit branch tables for f_k, k = 1..5.
inline UDPoint ud_f_table(int k, UDPoint const& x) {
    using namespace slot;
    check_index(k);
    if (k == 0) throw std::invalid_argument("use ud_f0_table for k = 0");
    UDPoint y = x;
    switch (k) {
        case 1: --y[x11]; break;
        case 2: --y[x[x22] + x[x21] > x[x11] + x[x32] ? x22 : x21]; break;
        case 3:
            if (x[x33] + x[x32] > x[x22] + x[x52] &&
                x[x33] + 2 * x[x32] + x[x31] > x[x22] + x[x21] + x[x52] + x[x41])
                --y[x33];
            else if (x[x33] + x[x32] <= x[x22] + x[x52] && x[x32] + x[x31] > x[x21] + x[x41])
                --y[x32];
            else if (x[x32] + x[x31] <= x[x21] + x[x41] &&
                     x[x33] + 2 * x[x32] + x[x31] <= x[x22] + x[x21] + x[x52] + x[x41])
                --y[x31];
            else
                throw std::logic_error("no f_3 branch applies");
            break;
        case 4: --y[x[x42] + x[x41] > x[x33] + x[x32] ? x42 : x41]; break;
        default: --y[x[x52] + x[x51] > x[x32] + x[x31] ? x52 : x51]; break;
    }
    return y;
}

/// Readings of the third inequality of (F4-breve) and the strictness of its second.
struct F4Reading {
    bool b24_as_difference = false;  // b_24 read as x5_2 - x3_2 instead of x5_2
    bool strict_second = true;       // x3_3 + x3_2 > x2_2 + x5_2 instead of >=

    static constexpr F4Reading transported() { return {false, true}; }
};

/// Index 1..5 of each (F_j-breve) that holds, as a bit set (bit j-1).
inline unsigned ud_f0_conditions(UDPoint const& x, F4Reading r = F4Reading::transported()) {
    using namespace slot;
    auto pp = [](int64_t v) { return std::max<int64_t>(v, 0); };
    int64_t const u = pp(-x[x22] + x[x33] + x[x32] - x[x52]);
    int64_t const v = pp(-x[x33] + x[x42] - x[x32] + x[x41]);
    int64_t const b24 = r.b24_as_difference ? x[x52] - x[x32] : x[x52];
    bool const f4_second =
        r.strict_second ? x[x33] + x[x32] > x[x22] + x[x52] : x[x33] + x[x32] >= x[x22] + x[x52];
    bool const f[5] = {
        x[x22] + x[x21] >= x[x42] + x[x51] && x[x33] + x[x32] >= x[x42] + x[x41] &&
            x[x33] + x[x21] >= x[x42] + x[x31] + u,
        x[x22] + x[x21] + x[x41] >= x[x33] + x[x32] + x[x51] && x[x42] + x[x41] > x[x33] + x[x32] &&
            x[x21] + x[x41] >= x[x32] + x[x31] + u,
        x[x22] + x[x31] >= x[x33] + x[x51] && x[x22] + x[x52] >= x[x33] + x[x32] &&
            x[x42] + x[x31] > x[x33] + x[x21] + v,
        x[x32] + x[x31] >= x[x52] + x[x51] && f4_second &&
            x[x42] + x[x32] + x[x31] > x[x22] + x[x21] + b24 + v,
        x[x33] + x[x51] > x[x22] + x[x31] + u && x[x42] + x[x51] > x[x22] + x[x21] + v,
    };
    unsigned bits = 0;
    for (int j = 0; j < 5; ++j)
        if (f[j]) bits |= 1u << j;
    return bits;
}

/// f_0 from the (F-breve) table, first matching case; throws if none holds.
inline UDPoint ud_f0_table(UDPoint const& x, F4Reading r = F4Reading::transported()) {
    static constexpr std::array<std::array<int64_t, kDim>, 5> delta = {{
        {1, 1, 1, 1, 1, 0, 1, 1, 0, 0},
        {0, 1, 1, 1, 1, 1, 1, 1, 0, 0},
        {0, 1, 1, 1, 0, 1, 1, 1, 1, 0},
        {0, 0, 1, 1, 1, 1, 1, 1, 1, 0},
        {0, 0, 1, 0, 1, 1, 1, 1, 1, 1},
    }};
    unsigned const bits = ud_f0_conditions(x, r);
    for (int j = 0; j < 5; ++j) {
        if (!(bits & (1u << j))) continue;
        UDPoint y = x;
        for (std::size_t i = 0; i < kDim; ++i) y[i] += delta[j][i];
        return y;
    }
    throw std::domain_error("no (F-breve) case holds");
}

// ---------------------------------------------------------------- Omega

inline UDPoint omega(PCElement const& b) {
    using namespace slot;
    if (!b.regime.is_limit()) throw std::invalid_argument("omega expects a B^{5,inf} element");
    UDPoint x;
    x[x11] = b(1, 1);
    x[x22] = b(1, 1) + b(1, 2);
    x[x21] = b(2, 2);
    x[x33] = x[x22] + b(1, 3);
    x[x32] = b(2, 2) + b(2, 3);
    x[x31] = b(3, 3);
    x[x42] = x[x33] + b(1, 4);
    x[x41] = b(3, 3) + b(3, 4);
    x[x52] = x[x32] + b(2, 4);
    x[x51] = b(4, 4);
    return x;
}

inline PCElement omega_inv(UDPoint const& x) {
    using namespace slot;
    PCElement b = PCElement::zero(Regime::limit());
    auto row = [&](int i, std::array<int64_t, 5> const& r) {
        for (int d = 0; d < 5; ++d) b.b[PCElement::pos(i, i + d)] = r[d];
    };
    row(1, {x[x11], x[x22] - x[x11], x[x33] - x[x22], x[x42] - x[x33], -x[x42]});
    row(2, {x[x21], x[x32] - x[x21], x[x52] - x[x32], x[x42] - x[x52], -x[x42]});
    row(3, {x[x31], x[x41] - x[x31], x[x52] - x[x41], x[x33] - x[x52], -x[x33]});
    row(4, {x[x51], x[x41] - x[x51], x[x32] - x[x41], x[x22] - x[x32], -x[x22]});
    row(5, {x[x51], x[x31] - x[x51], x[x21] - x[x31], x[x11] - x[x21], -x[x11]});
    return b;
}

inline Json to_json(UDPoint const& x) {
    Json j = Json::array();
    for (auto v : x.v) j.push_back(v);
    return j;
}

}  // namespace d5
