#include <gtest/gtest.h>

#include "d5crystal/geometric_crystal.hpp"

using namespace d5;

namespace {
GeomPoint sample(std::uint64_t seed) {
    RationalSampler rs(seed, 40);
    return rs.point<GeomPoint>();
}
}  // namespace

TEST(Geometric, GammaExamples) {
    GeomPoint x = ones<V1Tag>();
    x[slot::x22] = 2;
    x[slot::x21] = 3;
    EXPECT_EQ(gamma(0, x), Rational(1, 6));
    EXPECT_EQ(gamma(1, ones<V1Tag>()), 1);
    EXPECT_EQ(gamma(5, ones<V1Tag>()), 1);
}

TEST(Geometric, EpsExamples) {
    auto const x = ones<V1Tag>();
    EXPECT_EQ(eps(0, x), 5);
    EXPECT_EQ(eps(1, x), 1);
    EXPECT_EQ(eps(4, x), 2);
}

TEST(Geometric, ActionExamples) {
    auto const x = sample(3);
    for (int k = 0; k < kRank; ++k) EXPECT_EQ(e_action(k, 1, x), x);
    Rational const c(5, 3);
    auto y = e_action(1, c, x);
    for (std::size_t i = 0; i < kDim; ++i) EXPECT_EQ(y[i], i == slot::x11 ? c * x[i] : x[i]);
    auto const z = e_action(0, 2, ones<V1Tag>());
    EXPECT_EQ(z[slot::x22], Rational(1, 2));
    EXPECT_EQ(z[slot::x11], Rational(1, 2));
    EXPECT_EQ(z[slot::x21], Rational(1, 2));
    EXPECT_TRUE(all_positive(z));
    EXPECT_THROW(e_action(2, Rational(-1), x), std::domain_error);
    EXPECT_THROW(e_action(6, 1, x), std::out_of_range);
}

TEST(Geometric, SigmaBarAtOnes) {
    auto const y = sigma_bar(ones<V1Tag>());
    EXPECT_EQ(y[yslot::y52], 1);
    EXPECT_EQ(y[yslot::y01], 1);
    EXPECT_EQ(y[yslot::y42], 3);
    EXPECT_EQ(y[yslot::y33], 2);
    EXPECT_EQ(sigma_scale(ones<V1Tag>()), 1);
    EXPECT_TRUE(verify_sigma_equation(ones<V1Tag>()));
}

TEST(Geometric, SigmaEquationAndRoundtrips) {
    RationalSampler rs(99, 50);
    for (int n = 0; n < 100; ++n) {
        auto const x = rs.point<GeomPoint>();
        EXPECT_TRUE(verify_sigma_equation(x)) << x;
        EXPECT_EQ(sigma_bar_inv(sigma_bar(x)), x);
        auto const y = rs.point<GeomPointV2>();
        EXPECT_EQ(sigma_bar(sigma_bar_inv(y)), y);
    }
}

TEST(Geometric, SigmaEquationDetectsPerturbation) {
    auto const x = sample(5);
    auto y = sigma_bar(x);
    y[yslot::y32] += 1;
    EXPECT_NE(build_V2(y), sigma_scale(x) * sigma_twist(build_V1(x)));
}

TEST(Geometric, SpecificRelationsOnSamples) {
    RationalSampler rs(7, 50);
    for (int n = 0; n < 100; ++n) {
        auto const x = rs.point<GeomPoint>();
        Rational const c = rs.next();
        EXPECT_EQ(gamma(0, e_action(2, c, x)), rpow(c, cartan(2, 0)) * gamma(0, x));
        EXPECT_EQ(eps(0, e_action(0, c, x)), eps(0, x) / c);
        EXPECT_EQ(e_action(0, 1, e_action(2, 1, e_action(0, 1, x))), e_action(2, 1, e_action(0, 1, e_action(2, 1, x))));
    }
}

TEST(Geometric, SchubertOracleSingleLetter) {
    std::array<int, 1> const w = {3};
    std::array<Rational, 1> const cs = {Rational(2, 5)};
    auto const out = schubert_e(w, 3, Rational(7), cs);
    ASSERT_EQ(out.size(), 1u);
    EXPECT_EQ(out[0], Rational(14, 5));
}

TEST(Geometric, SchubertOracleReproducesV1Actions) {
    RationalSampler rs(31, 50);
    for (int n = 0; n < 50; ++n) {
        auto const x = rs.point<GeomPoint>();
        Rational const c = rs.next();
        for (int k = 1; k < kRank; ++k) {
            auto const o = schubert_e(kWordV1, k, c, x.v);
            auto const e = e_action(k, c, x);
            EXPECT_TRUE(std::equal(o.begin(), o.end(), e.v.begin())) << "k=" << k;
            EXPECT_EQ(schubert_eps(kWordV1, k, x.v), eps(k, x));
            EXPECT_EQ(schubert_gamma(kWordV1, k, x.v), gamma(k, x));
        }
    }
}

TEST(Geometric, ZeroStructureThroughTheTwist) {
    RationalSampler rs(17, 50);
    for (int n = 0; n < 50; ++n) {
        auto const x = rs.point<GeomPoint>();
        Rational const c = rs.next();
        EXPECT_EQ(e_action(0, c, x), e0_via_sigma(c, x));
        EXPECT_EQ(gamma(0, x), gamma0_via_sigma(x));
        EXPECT_EQ(eps(0, x), eps0_via_sigma(x));
    }
}

TEST(Geometric, AxiomSuite) {
    SampleConfig cfg;
    cfg.seed = 42;
    cfg.count = 100;
    Report const rep = verify_axioms(cfg);
    for (auto const& [name, c] : rep.checks()) EXPECT_TRUE(c.ok()) << name << " " << c.witness.dump();
    EXPECT_TRUE(rep.ok());
    EXPECT_GE(rep.checks().size(), 100u);
}
