#pragma once

// The positive geometric crystal V = V_1 for D_5^(1).
//
// V_1 carries a g_0-geometric crystal structure (indices 1..5) from its
// Schubert-cell parametrization; V_2 carries a g_1-structure (indices
// 0,2,3,4,5). The twist sigma_bar : V_1 -> V_2 transports the 5-action of V_2
// into the 0-action on V_1.

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cartan.hpp"
#include "geom_point.hpp"
#include "rational.hpp"
#include "report.hpp"
#include "schubert.hpp"
#include "spin_module.hpp"

namespace d5 {

struct ABC {
    Rational B, C, A;
};

inline ABC abc(GeomPoint const& x) {
    using namespace slot;
    ABC r;
    r.B = x[x22] * x[x31] / x[x33] + x[x32] * x[x31] / x[x52];
    r.C = x[x22] * x[x21] / x[x42] + x[x22] * x[x41] * x[x21] / (x[x33] * x[x32]);
    r.A = r.B + r.C;
    return r;
}

// ---- V_1, indices 1..5 and the closed 0-structure ----

inline Rational gamma(int k, GeomPoint const& x) {
    using namespace slot;
    check_index(k);
    switch (k) {
        case 0: return 1 / (x[x22] * x[x21]);
        case 1: return x[x11] * x[x11] / (x[x22] * x[x21]);
        case 2:
            return x[x22] * x[x22] * x[x21] * x[x21] / (x[x33] * x[x32] * x[x11] * x[x31]);
        case 3:
            return x[x33] * x[x33] * x[x32] * x[x32] * x[x31] * x[x31] /
                   (x[x42] * x[x22] * x[x52] * x[x41] * x[x21] * x[x51]);
        case 4: return x[x42] * x[x42] * x[x41] * x[x41] / (x[x33] * x[x32] * x[x31]);
        default: return x[x52] * x[x52] * x[x51] * x[x51] / (x[x33] * x[x32] * x[x31]);
    }
}

inline Rational eps(int k, GeomPoint const& x) {
    using namespace slot;
    check_index(k);
    switch (k) {
        case 0: return x[x51] + abc(x).A;
        case 1: return x[x22] / x[x11];
        case 2: return x[x33] / x[x22] * (1 + x[x32] * x[x11] / (x[x22] * x[x21]));
        case 3:
            return x[x42] / x[x33] *
                   (1 + x[x22] * x[x52] / (x[x33] * x[x32]) +
                    x[x22] * x[x52] * x[x41] * x[x21] / (x[x33] * x[x32] * x[x32] * x[x31]));
        case 4: return 1 / x[x42] * (1 + x[x33] * x[x32] / (x[x42] * x[x41]));
        default: return x[x33] / x[x52] * (1 + x[x32] * x[x31] / (x[x52] * x[x51]));
    }
}

namespace detail {
inline GeomPoint e0_closed(Rational const& c, GeomPoint const& x) {
    using namespace slot;
    auto [B, C, A] = abc(x);
    Rational const D = x[x22] * x[x41] * x[x21] / (x[x33] * x[x32]);
    Rational const s = x[x51] + A;
    Rational const t = c * (x[x51] + x[x32] * x[x31] / x[x52]) + x[x22] * x[x31] / x[x33] + C;
    Rational const u = c * (x[x51] + B + D) + x[x22] * x[x21] / x[x42];
    Rational const v = c * (x[x51] + B) + C;
    GeomPoint y = x;
    y[x42] = x[x42] * u / (c * s);
    y[x33] = x[x33] * t / (c * s);
    y[x22] = x[x22] / c;
    y[x52] = x[x52] * (c * x[x51] + A) / (c * s);
    y[x32] = x[x32] * v / (c * t);
    y[x41] = x[x41] * s / u;
    y[x11] = x[x11] / c;
    y[x21] = x[x21] / c;
    y[x31] = x[x31] * s / v;
    y[x51] = x[x51] * s / (c * x[x51] + A);
    return y;
}
}  // namespace detail

inline GeomPoint e_action(int k, Rational const& c, GeomPoint const& x) {
    using namespace slot;
    check_index(k);
    if (sgn(c) <= 0) throw std::domain_error("e_k^c needs c > 0");
    if (k == 0) return detail::e0_closed(c, x);
    GeomPoint y = x;
    switch (k) {
        case 1: y[x11] *= c; break;
        case 2: {
            Rational const p = x[x22] * x[x21], q = x[x32] * x[x11];
            Rational const c2 = (c * p + q) / (p + q);
            y[x22] *= c2;
            y[x21] *= c / c2;
            break;
        }
        case 3: {
            Rational const P = x[x33] * x[x32] * x[x32] * x[x31];
            Rational const Q = x[x22] * x[x52] * x[x32] * x[x31];
            Rational const R = x[x22] * x[x52] * x[x41] * x[x21];
            Rational const c31 = (c * P + Q + R) / (P + Q + R);
            Rational const c32 = (c * P + c * Q + R) / (c * P + Q + R);
            y[x33] *= c31;
            y[x32] *= c32;
            y[x31] *= c / (c31 * c32);
            break;
        }
        case 4: {
            Rational const p = x[x42] * x[x41], q = x[x33] * x[x32];
            Rational const c4 = (c * p + q) / (p + q);
            y[x42] *= c4;
            y[x41] *= c / c4;
            break;
        }
        default: {
            Rational const p = x[x52] * x[x51], q = x[x32] * x[x31];
            Rational const c5 = (c * p + q) / (p + q);
            y[x52] *= c5;
            y[x51] *= c / c5;
            break;
        }
    }
    return y;
}

inline Rational phi(int k, GeomPoint const& x) { return gamma(k, x) * eps(k, x); }

// ---- V_2, the g_1-structure (k in {0,2,3,4,5}) ----

inline void check_v2_index(int k) {
    check_index(k);
    if (k == 1) throw std::invalid_argument("V_2 carries no 1-action");
}

inline GeomPointV2 ebar(int k, Rational const& c, GeomPointV2 const& y) {
    using namespace yslot;
    check_v2_index(k);
    if (sgn(c) <= 0) throw std::domain_error("e_k^c needs c > 0");
    GeomPointV2 z = y;
    switch (k) {
        case 0: z[y01] *= c; break;
        case 2: {
            Rational const p = y[y22] * y[y21], q = y[y32] * y[y01];
            Rational const c2 = (c * p + q) / (p + q);
            z[y22] *= c2;
            z[y21] *= c / c2;
            break;
        }
        case 3: {
            Rational const P = y[y33] * y[y32] * y[y32] * y[y31];
            Rational const Q = y[y22] * y[y42] * y[y32] * y[y31];
            Rational const R = y[y22] * y[y42] * y[y51] * y[y21];
            Rational const c31 = (c * P + Q + R) / (P + Q + R);
            Rational const c32 = (c * P + c * Q + R) / (c * P + Q + R);
            z[y33] *= c31;
            z[y32] *= c32;
            z[y31] *= c / (c31 * c32);
            break;
        }
        case 4: {
            Rational const p = y[y42] * y[y41], q = y[y32] * y[y31];
            Rational const c4 = (c * p + q) / (p + q);
            z[y42] *= c4;
            z[y41] *= c / c4;
            break;
        }
        default: {
            Rational const p = y[y52] * y[y51], q = y[y33] * y[y32];
            Rational const c5 = (c * p + q) / (p + q);
            z[y52] *= c5;
            z[y51] *= c / c5;
            break;
        }
    }
    return z;
}

inline Rational eps_bar(int k, GeomPointV2 const& y) {
    using namespace yslot;
    check_v2_index(k);
    switch (k) {
        case 0: return y[y22] / y[y01];
        case 2: return y[y33] / y[y22] * (1 + y[y32] * y[y01] / (y[y22] * y[y21]));
        case 3:
            return y[y52] / y[y33] *
                   (1 + y[y22] * y[y42] / (y[y33] * y[y32]) +
                    y[y22] * y[y42] * y[y51] * y[y21] / (y[y33] * y[y32] * y[y32] * y[y31]));
        case 4: return y[y33] / y[y42] * (1 + y[y32] * y[y31] / (y[y42] * y[y41]));
        default: return 1 / y[y52] * (1 + y[y33] * y[y32] / (y[y52] * y[y51]));
    }
}

inline Rational gamma_bar(int k, GeomPointV2 const& y) {
    using namespace yslot;
    check_v2_index(k);
    switch (k) {
        case 0: return y[y01] * y[y01] / (y[y22] * y[y21]);
        case 2:
            return y[y22] * y[y22] * y[y21] * y[y21] / (y[y33] * y[y32] * y[y01] * y[y31]);
        case 3:
            return y[y33] * y[y33] * y[y32] * y[y32] * y[y31] * y[y31] /
                   (y[y52] * y[y22] * y[y42] * y[y51] * y[y21] * y[y41]);
        case 4: return y[y42] * y[y42] * y[y41] * y[y41] / (y[y33] * y[y32] * y[y31]);
        default: return y[y52] * y[y52] * y[y51] * y[y51] / (y[y33] * y[y32] * y[y31]);
    }
}

// ---- the twist ----

/// a(x) in V_2(sigma_bar(x)) = a(x) sigma(V_1(x)).
inline Rational sigma_scale(GeomPoint const& x) { return 1 / (x[slot::x52] * x[slot::x51]); }

inline GeomPointV2 sigma_bar(GeomPoint const& x) {
    using namespace slot;
    using namespace yslot;
    GeomPointV2 y;
    Rational const S = x[x52] / x[x33] + x[x32] / x[x22] + x[x21] / x[x11];
    Rational const T = x[x22] / x[x33] + x[x32] / x[x52];
    Rational const U = x[x22] * x[x21] / x[x42] + x[x22] * x[x31] / x[x33] +
                       x[x32] * x[x31] / x[x52] + x[x22] * x[x41] * x[x21] / (x[x33] * x[x32]);
    Rational const R = x[x33] * x[x32] / (x[x42] * x[x52]) + x[x41] / x[x52];
    y[y52] = 1 / x[x51];
    y[y01] = x[x42] * x[x41] / (x[x52] * x[x51]);
    y[y51] = 1 / x[x52];
    y[y42] = x[x11] / (x[x52] * x[x51]) * S;
    y[y41] = 1 / S;
    y[y33] = T / x[x51];
    y[y32] = U / (x[x52] * x[x51] * T);
    y[y31] = x[x22] * x[x21] / x[x52] / U;
    y[y22] = R / x[x51];
    y[y21] = x[x33] * x[x32] * x[x31] / (x[x52] * x[x52] * x[x51]) / R;
    return y;
}

inline GeomPoint sigma_bar_inv(GeomPointV2 const& y) {
    using namespace slot;
    using namespace yslot;
    GeomPoint x;
    Rational const S = y[y01] / y[y22] + y[y21] / y[y32] + y[y31] / y[y51];
    Rational const T = y[y22] * y[y21] / (y[y33] * y[y32]) + y[y22] * y[y31] / (y[y33] * y[y51]) +
                       y[y32] * y[y31] / (y[y42] * y[y51]) + y[y41] / y[y51];
    Rational const U = y[y21] / y[y32] + y[y31] / y[y51];
    Rational const R = y[y32] * y[y31] / (y[y42] * y[y51]) + y[y41] / y[y51];
    x[x52] = 1 / y[y51];
    x[x51] = 1 / y[y52];
    x[x42] = S;
    x[x41] = y[y01] / (y[y52] * y[y51]) / S;
    x[x33] = T;
    x[x32] = y[y22] / (y[y52] * y[y51]) / T * U;
    x[x31] = y[y21] / (y[y52] * y[y51]) / U;
    x[x11] = y[y42] * y[y41] / (y[y52] * y[y51]);
    x[x22] = y[y33] / y[y52] * R;
    x[x21] = y[y32] * y[y31] / (y[y52] * y[y51] * y[y51]) / R;
    return x;
}

/// V_2(sigma_bar(x)) == a(x) sigma(V_1(x)), exactly.
inline bool verify_sigma_equation(GeomPoint const& x) {
    return build_V2(sigma_bar(x)) == sigma_scale(x) * sigma_twist(build_V1(x));
}

// ---- the 0-structure through the twist (its definition) ----

inline GeomPoint e0_via_sigma(Rational const& c, GeomPoint const& x) {
    return sigma_bar_inv(ebar(sigma(0), c, sigma_bar(x)));
}
inline Rational gamma0_via_sigma(GeomPoint const& x) { return gamma_bar(sigma(0), sigma_bar(x)); }
inline Rational eps0_via_sigma(GeomPoint const& x) { return eps_bar(sigma(0), sigma_bar(x)); }

// ---- relation checking ----

namespace detail {
inline Json point_json(GeomPoint const& x) {
    Json j = Json::object();
    for (std::size_t i = 0; i < kDim; ++i) j[std::string(GeomPoint::name(i))] = x[i].get_str();
    return j;
}

inline Json witness(GeomPoint const& x, std::vector<std::pair<std::string, Rational>> const& params) {
    Json j;
    j["x"] = point_json(x);
    for (auto const& [k, v] : params) j[k] = v.get_str();
    return j;
}
}  // namespace detail

/// Exact identity tests at seeded random positive points.
inline Report verify_axioms(SampleConfig const& cfg) {
    cfg.validate();
    Report rep("geometric", cfg.seed);
    rep.set_param("samples", cfg.count);
    rep.set_param("bound", static_cast<std::int64_t>(cfg.bound));
    RationalSampler rs(cfg.seed, cfg.bound);

    auto const word1 = std::span<const int>(kWordV1);
    auto const word2 = std::span<const int>(kWordV2);
    std::array<int, 5> const v2_indices = {0, 2, 3, 4, 5};

    for (int n = 0; n < cfg.count; ++n) {
        GeomPoint const x = rs.point<GeomPoint>();
        Rational const c = rs.next(), c1 = rs.next(), c2 = rs.next();
        auto wit = [&] { return detail::witness(x, {{"c", c}, {"c1", c1}, {"c2", c2}}); };
        auto name = [](std::string base, int i, int j = -1) {
            base += "[" + std::to_string(i);
            if (j >= 0) base += "," + std::to_string(j);
            return base + "]";
        };

        std::array<GeomPoint, kRank> ex;
        for (int k = 0; k < kRank; ++k) ex[k] = e_action(k, c, x);

        for (int k = 0; k < kRank; ++k) {
            rep.record(name("positivity e", k), all_positive(ex[k]), wit);
            rep.record(name("unit e^1", k), e_action(k, 1, x) == x, wit);
            rep.record(name("group law e^c1 e^c2 = e^(c1 c2)", k),
                       e_action(k, c1, e_action(k, c2, x)) == e_action(k, c1 * c2, x), wit);
            // gamma is multiplicative along e_k
            for (int j = 0; j < kRank; ++j)
                rep.record(name("gamma_j(e_k^c x) = c^a_kj gamma_j(x)", k, j),
                           gamma(j, ex[k]) == rpow(c, cartan(k, j)) * gamma(j, x), wit);
            // eps transforms as 1/c along its own string
            rep.record(name("eps_k(e_k^c x) = eps_k(x)/c", k), eps(k, ex[k]) == eps(k, x) / c, wit);
            for (int j = 0; j < kRank; ++j) {
                if (j == k || cartan(k, j) != 0) continue;
                rep.record(name("eps_j(e_k^c x) = eps_j(x), a_jk = 0", k, j), eps(j, ex[k]) == eps(j, x),
                           wit);
            }
            // braid (Verma) relations
            for (int j = k + 1; j < kRank; ++j) {
                if (cartan(k, j) == 0) {
                    rep.record(name("commute e_i^c1 e_j^c2", k, j),
                               e_action(k, c1, e_action(j, c2, x)) == e_action(j, c2, e_action(k, c1, x)),
                               wit);
                } else {
                    auto lhs = e_action(k, c1, e_action(j, c1 * c2, e_action(k, c2, x)));
                    auto rhs = e_action(j, c2, e_action(k, c1 * c2, e_action(j, c1, x)));
                    rep.record(name("Verma e_i^c1 e_j^c1c2 e_i^c2", k, j), lhs == rhs, wit);
                }
            }
        }

        // Twist and the 0-structure
        GeomPointV2 const y = sigma_bar(x);
        rep.record("sigma_bar positive", all_positive(y), wit);
        rep.record("sigma_bar_inv o sigma_bar = id", sigma_bar_inv(y) == x, wit);
        rep.record("sigma_bar o sigma_bar_inv = id", sigma_bar(sigma_bar_inv(y)) == y, wit);
        rep.record("V2(sigma_bar x) = a(x) sigma(V1 x)", verify_sigma_equation(x), wit);
        rep.record("sigma_bar e_2^c = ebar_3^c sigma_bar", sigma_bar(ex[2]) == ebar(3, c, y), wit);
        rep.record("sigma_bar e_3^c = ebar_2^c sigma_bar", sigma_bar(ex[3]) == ebar(2, c, y), wit);
        rep.record("e_0 closed = sigma_bar^-1 ebar_5 sigma_bar", ex[0] == e0_via_sigma(c, x), wit);
        rep.record("gamma_0 closed = gamma_bar_5 o sigma_bar", gamma(0, x) == gamma0_via_sigma(x), wit);
        rep.record("eps_0 closed = eps_bar_5 o sigma_bar", eps(0, x) == eps0_via_sigma(x), wit);

        // The structures on V_1 and V_2 agree with the Schubert-cell oracle.
        GeomPointV2 const yrand = rs.point<GeomPointV2>();
        for (int k = 1; k < kRank; ++k) {
            auto oracle = schubert_e(word1, k, c, x.v);
            rep.record(name("V1 e_k = Schubert oracle", k),
                       std::equal(oracle.begin(), oracle.end(), ex[k].v.begin()), wit);
            rep.record(name("V1 eps_k = Schubert oracle", k), eps(k, x) == schubert_eps(word1, k, x.v), wit);
            rep.record(name("V1 gamma_k = Schubert oracle", k),
                       gamma(k, x) == schubert_gamma(word1, k, x.v), wit);
        }
        for (int k : v2_indices) {
            auto oracle = schubert_e(word2, k, c, yrand.v);
            auto mine = ebar(k, c, yrand);
            rep.record(name("V2 ebar_k = Schubert oracle", k),
                       std::equal(oracle.begin(), oracle.end(), mine.v.begin()), wit);
            rep.record(name("V2 eps_bar_k = Schubert oracle", k),
                       eps_bar(k, yrand) == schubert_eps(word2, k, yrand.v), wit);
            rep.record(name("V2 gamma_bar_k = Schubert oracle", k),
                       gamma_bar(k, yrand) == schubert_gamma(word2, k, yrand.v), wit);
        }
    }
    return rep;
}

}  // namespace d5
