#pragma once

// Verification suites behind `d5crystal verify <suite>`.

#include <bit>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "coherent_family.hpp"
#include "formula_corpus.hpp"
#include "geometric_crystal.hpp"
#include "perfect_crystal.hpp"
#include "report.hpp"
#include "tropical.hpp"
#include "ud_crystal.hpp"

namespace d5 {

struct VerifyConfig {
    std::uint64_t seed = 1;
    std::int64_t samples = 100;
    std::int64_t box = 5;
    std::vector<std::int64_t> levels = {1, 2, 3};

    void validate() const {
        if (samples < 1) throw std::invalid_argument("--samples must be >= 1");
        if (box < 1) throw std::invalid_argument("--box must be >= 1");
        for (auto l : levels)
            if (l < 1 || l > kMaxGraphLevel)
                throw std::invalid_argument("levels must lie in 1.." + std::to_string(kMaxGraphLevel));
    }
};

inline std::vector<std::string> const& suite_names() {
    static const std::vector<std::string> names = {"geometric", "perfect", "coherent", "ud-match", "iso"};
    return names;
}

namespace detail {
inline UDPoint random_ud(std::mt19937_64& g, std::int64_t box) {
    std::uniform_int_distribution<std::int64_t> d(-box, box);
    UDPoint x;
    for (auto& v : x.v) v = d(g);
    return x;
}

inline std::string indexed(std::string base, int k) { return base + "[" + std::to_string(k) + "]"; }

inline Json pc_witness(PCElement const& b, int k) { return Json{{"b", to_json(b)}, {"k", k}}; }

// String lengths by iteration, capped well above any level in range.
inline std::int64_t string_length(int k, PCElement b, bool raising) {
    std::int64_t n = 0;
    while (auto next = raising ? e_tilde(k, b) : f_tilde(k, b)) {
        b = *next;
        if (++n > 64) throw std::logic_error("string does not terminate");
    }
    return n;
}
}  // namespace detail

inline Report verify_geometric(VerifyConfig const& cfg) {
    cfg.validate();
    SampleConfig sc;
    sc.seed = cfg.seed;
    sc.count = static_cast<int>(cfg.samples);
    return verify_axioms(sc);
}

/// Crystal axioms and perfectness of B^{5,l}, exhaustively per level.
inline Report verify_perfect(VerifyConfig const& cfg) {
    cfg.validate();
    Report rep("perfect", cfg.seed);
    Json levels = Json::array();
    for (auto l : cfg.levels) levels.push_back(l);
    rep.set_param("levels", levels);

    Json sizes = Json::object(), overlaps = Json::object();
    for (auto l : cfg.levels) {
        auto const all = enumerate(l);
        std::set<PCElement> const members(all.begin(), all.end());
        sizes[std::to_string(l)] = all.size();
        std::string const L = "l=" + std::to_string(l) + " ";
        std::int64_t e_overlap = 0, f_overlap = 0;

        for (auto const& b : all) {
            rep.record(L + "member", is_member(b), [&] { return detail::pc_witness(b, -1); });
            e_overlap += zero_condition_count(b, false) > 1;
            f_overlap += zero_condition_count(b, true) > 1;
            for (int k = 0; k < kRank; ++k) {
                auto w = [&] { return detail::pc_witness(b, k); };
                auto const e = e_tilde(k, b), f = f_tilde(k, b);
                if (e) {
                    rep.record(L + detail::indexed("e closed", k), members.count(*e) == 1, w);
                    rep.record(L + detail::indexed("f e = id", k), f_tilde(k, *e) == b, w);
                    rep.record(L + detail::indexed("wt(e b) = wt(b) + alpha", k), wt(*e) == wt(b) + simple_root_cl(k),
                               w);
                    rep.record(L + detail::indexed("eps(e b) = eps(b) - 1", k), eps_k(k, *e) == eps_k(k, b) - 1, w);
                }
                if (f) {
                    rep.record(L + detail::indexed("f closed", k), members.count(*f) == 1, w);
                    rep.record(L + detail::indexed("e f = id", k), e_tilde(k, *f) == b, w);
                    rep.record(L + detail::indexed("wt(f b) = wt(b) - alpha", k), wt(*f) == wt(b) - simple_root_cl(k),
                               w);
                    rep.record(L + detail::indexed("phi(f b) = phi(b) - 1", k), phi_k(k, *f) == phi_k(k, b) - 1, w);
                }
                rep.record(L + detail::indexed("eps = e-string length", k),
                           eps_k(k, b) == detail::string_length(k, b, true), w);
                rep.record(L + detail::indexed("phi = f-string length", k),
                           phi_k(k, b) == detail::string_length(k, b, false), w);
                rep.record(L + detail::indexed("wt = phi - eps", k), wt_k(k, b) == phi_k(k, b) - eps_k(k, b), w);
            }
            rep.record(L + "level(eps) >= l", level(eps(b)) >= l, [&] { return detail::pc_witness(b, -1); });
        }
        overlaps[std::to_string(l)] = Json{{"e", e_overlap}, {"f", f_overlap}};

        // perfectness: eps and phi restrict to bijections (B^{5,l})_min -> (P_cl^+)_l
        std::vector<PCElement> mins;
        for (auto const& b : all)
            if (level(eps(b)) == l) mins.push_back(b);
        auto const table = minimal_elements(l);
        auto const weights = dominant_weights_of_level(l);
        rep.record(L + "minimal set = b0 table", mins == table);
        std::set<ClWeight> const dom(weights.begin(), weights.end());
        std::set<ClWeight> eps_img, phi_img;
        for (auto const& b : mins) {
            eps_img.insert(eps(b));
            phi_img.insert(phi(b));
        }
        rep.record(L + "eps: min -> P+_l bijective", mins.size() == dom.size() && eps_img == dom);
        rep.record(L + "phi: min -> P+_l bijective", mins.size() == dom.size() && phi_img == dom);
    }
    rep.note("sizes", sizes);
    rep.note("zero-action case overlaps", overlaps);
    return rep;
}

/// Embeddings of T_eps(b0) (x) B^{5,l} (x) T_-phi(b0) into B^{5,inf} and their inverse.
inline Report verify_coherent(VerifyConfig const& cfg) {
    cfg.validate();
    Report rep("coherent", cfg.seed);
    rep.set_param("samples", cfg.samples);
    rep.set_param("box", cfg.box);
    std::mt19937_64 g(cfg.seed);

    auto check_instance = [&](PCElement const& b0, PCElement const& b) {
        TensorElement const t = tensor_for(b0, b);
        PCElement const p = embed(b0, t);
        auto w = [&] { return Json{{"b0", to_json(b0)}, {"b", to_json(b)}}; };
        rep.record("image in B^{5,inf}", is_member(p), w);
        rep.record("wt preserved", wt(t) == wt(p), w);
        for (int k = 0; k < kRank; ++k) {
            rep.record(detail::indexed("eps preserved", k), eps_k(k, t) == eps_k(k, p), w);
            rep.record(detail::indexed("phi preserved", k), phi_k(k, t) == phi_k(k, p), w);
            if (auto e = e_tilde(k, t))
                rep.record(detail::indexed("embed e = e embed", k), e_tilde(k, p) == embed(b0, *e), w);
            else
                rep.record(detail::indexed("e undefined => eps <= 0", k), eps_k(k, t) <= 0, w);
            if (auto f = f_tilde(k, t))
                rep.record(detail::indexed("embed f = f embed", k), f_tilde(k, p) == embed(b0, *f), w);
            else
                rep.record(detail::indexed("f undefined => phi <= 0", k), phi_k(k, t) <= 0, w);
        }
        auto const q = preimage(p);
        rep.record("embed(preimage(embed t)) = embed t", embed(q.b0, tensor_for(q.b0, q.b)) == p, w);
        if (b == b0) rep.record("embed(b0 at b0) = b_inf", p == PCElement::zero(Regime::limit()), w);
    };

    for (std::int64_t l = 1; l <= 2; ++l) {
        auto const all = enumerate(l);
        for (auto const& b0 : minimal_elements(l))
            for (auto const& b : all) check_instance(b0, b);
    }
    {
        auto const all = enumerate(3);
        auto const mins = minimal_elements(3);
        std::uniform_int_distribution<std::size_t> pick_b(0, all.size() - 1), pick_m(0, mins.size() - 1);
        for (int n = 0; n < 1000; ++n) {
            auto const& b0 = mins[pick_m(g)];
            check_instance(b0, all[pick_b(g)]);
        }
    }

    for (std::int64_t n = 0; n < cfg.samples; ++n) {
        PCElement const bp = omega_inv(detail::random_ud(g, cfg.box));
        auto const p = preimage(bp);
        auto w = [&] { return Json{{"bp", to_json(bp)}}; };
        rep.record("preimage level = weighted a-sum", p.l == a_level(p.a), w);
        rep.record("preimage b in B^{5,l}", is_member(p.b), w);
        rep.record("preimage b0 minimal", level(eps(p.b0)) == p.l, w);
        rep.record("embed(preimage(bp)) = bp", is_member(p.b) && embed(p.b0, tensor_for(p.b0, p.b)) == bp, w);
    }
    return rep;
}

/// Tropicalized positive formulas of V_1 against the hand-coded operators on Z^10.
inline Report verify_ud_match(VerifyConfig const& cfg) {
    cfg.validate();
    Report rep("ud-match", cfg.seed);
    rep.set_param("samples", cfg.samples);
    rep.set_param("box", cfg.box);
    rep.set_param("c_range", Json::array({-3, 3}));

    auto const vars = corpus_variables();
    struct Entry {
        Formula const* f;
        ExprPtr expr;
        CompiledTrop trop;
    };
    std::vector<Entry> entries;
    for (auto const& f : formula_corpus()) {
        ExprPtr e = parse(f.text);
        rep.record("parse(print(e)) = e", structurally_equal(*parse(to_string(*e)), *e),
                   [&] { return Json{{"formula", f.name}}; });
        entries.push_back({&f, e, CompiledTrop(*tropicalize(*e), vars)});
    }

    // The text corpus transcribes the rational maps.
    RationalSampler rs(cfg.seed, 50);
    for (std::int64_t n = 0; n < std::min<std::int64_t>(cfg.samples, 100); ++n) {
        GeomPoint const x = rs.point<GeomPoint>();
        Rational const c = rs.next();
        RationalEnv env;
        for (std::size_t i = 0; i < kDim; ++i) env[vars[i]] = x[i];
        env["c"] = c;
        for (auto const& en : entries) {
            Formula const& f = *en.f;
            Rational const want = f.kind == Formula::Kind::e_slot ? e_action(f.k, c, x)[f.slot]
                                  : f.kind == Formula::Kind::gamma ? gamma(f.k, x)
                                                                   : eps(f.k, x);
            rep.record("corpus = rational maps", eval_rational(*en.expr, env) == want,
                       [&] { return Json{{"formula", f.name}, {"c", c.get_str()}}; });
        }
    }

    std::mt19937_64 g(cfg.seed);
    std::uniform_int_distribution<std::int64_t> dc(-3, 3);
    std::int64_t a_sum = 0, c2_x31 = 0, f4_diff = 0, f4_weak = 0, f0_multi = 0, f0_multi_weak = 0;
    std::vector<std::int64_t> vals(kDim + 1);
    for (std::int64_t n = 0; n < cfg.samples; ++n) {
        UDPoint const x = detail::random_ud(g, cfg.box);
        std::int64_t const c = dc(g);
        std::copy(x.v.begin(), x.v.end(), vals.begin());
        vals[kDim] = c;
        auto w = [&] { return Json{{"x", to_json(x)}, {"c", c}}; };

        std::array<UDPoint, kRank> hand;
        for (int k = 0; k < kRank; ++k) hand[k] = ud_e(k, c, x);
        std::array<bool, kRank> e_ok;
        e_ok.fill(true);
        for (auto const& en : entries) {
            Formula const& f = *en.f;
            std::int64_t const got = en.trop(vals);
            switch (f.kind) {
                case Formula::Kind::e_slot: e_ok[f.k] = e_ok[f.k] && got == hand[f.k][f.slot]; break;
                case Formula::Kind::gamma:
                    rep.record(detail::indexed("trop(gamma) = wt", f.k), got == ud_wt_k(f.k, x), w);
                    break;
                case Formula::Kind::eps:
                    rep.record(detail::indexed("trop(eps) = eps", f.k), got == ud_eps_k(f.k, x), w);
                    break;
            }
        }
        for (int k = 0; k < kRank; ++k) rep.record(detail::indexed("trop(e^c) = e^c", k), e_ok[k], w);

        for (int k = 1; k < kRank; ++k)
            rep.record(detail::indexed("f table = e^-1", k), ud_f_table(k, x) == ud_e(k, -1, x), w);
        UDPoint const f0 = ud_e(0, -1, x);
        rep.record("f0 table = e0^-1", ud_f0_table(x) == f0, w);
        f0_multi += std::popcount(ud_f0_conditions(x)) > 1;
        f0_multi_weak += std::popcount(ud_f0_conditions(x, {.b24_as_difference = false, .strict_second = false})) > 1;

        a_sum += ud_e(0, c, x, {.a_breve_sum = true}) != hand[0];
        c2_x31 += ud_e(2, c, x, {.c2_with_x31 = true}) != hand[2];
        auto table_or_none = [&](F4Reading r) -> std::optional<UDPoint> {
            if (ud_f0_conditions(x, r) == 0) return std::nullopt;
            return ud_f0_table(x, r);
        };
        f4_diff += table_or_none({.b24_as_difference = true, .strict_second = true}) != f0;
        f4_weak += table_or_none({.b24_as_difference = false, .strict_second = false}) != f0;
    }
    rep.note("literal readings: disagreements over samples",
             Json{{"A-breve = B-breve + C-breve", a_sum},
                  {"c2-breve with x3_1", c2_x31},
                  {"F4-breve b24 = x5_2 - x3_2", f4_diff},
                  {"F4-breve second inequality non-strict", f4_weak},
                  {"samples", cfg.samples}});
    rep.note("f0 samples with several F-breve cases",
             Json{{"transported", f0_multi}, {"F4-breve second inequality non-strict", f0_multi_weak}});
    return rep;
}

/// Omega : B^{5,inf} -> Z^10 on omega_inv samples from [-box, box]^10.
inline Report verify_iso(VerifyConfig const& cfg) {
    cfg.validate();
    Report rep("iso", cfg.seed);
    rep.set_param("samples", cfg.samples);
    rep.set_param("box", cfg.box);
    std::mt19937_64 g(cfg.seed);
    for (std::int64_t n = 0; n < cfg.samples; ++n) {
        UDPoint const x = detail::random_ud(g, cfg.box);
        PCElement const b = omega_inv(x);
        auto w = [&] { return Json{{"x", to_json(x)}}; };
        rep.record("omega_inv(x) in B^{5,inf}", is_member(b), w);
        rep.record("omega(omega_inv(x)) = x", omega(b) == x, w);
        rep.record("omega_inv(omega(b)) = b", omega_inv(omega(b)) == b, w);
        for (int k = 0; k < kRank; ++k) {
            auto const e = e_tilde(k, b), f = f_tilde(k, b);
            rep.record(detail::indexed("omega e = e omega", k), e && omega(*e) == ud_e_tilde(k, x), w);
            rep.record(detail::indexed("omega f = f omega", k), f && omega(*f) == ud_f_tilde(k, x), w);
            rep.record(detail::indexed("e f = id", k), f && e_tilde(k, *f) == b, w);
            rep.record(detail::indexed("wt preserved", k), wt_k(k, b) == ud_wt_k(k, x), w);
            rep.record(detail::indexed("eps preserved", k), eps_k(k, b) == ud_eps_k(k, x), w);
            rep.record(detail::indexed("phi preserved", k), phi_k(k, b) == ud_phi_k(k, x), w);
        }
    }
    return rep;
}

inline Report run_suite(std::string const& suite, VerifyConfig const& cfg) {
    if (suite == "geometric") return verify_geometric(cfg);
    if (suite == "perfect") return verify_perfect(cfg);
    if (suite == "coherent") return verify_coherent(cfg);
    if (suite == "ud-match") return verify_ud_match(cfg);
    if (suite == "iso") return verify_iso(cfg);
    throw std::invalid_argument("unknown suite '" + suite + "'");
}

}  // namespace d5
