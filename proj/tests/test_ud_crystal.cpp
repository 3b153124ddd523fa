#include <gtest/gtest.h>

#include <random>

#include "d5crystal/ud_crystal.hpp"

using namespace d5;

namespace {
UDPoint random_point(std::mt19937_64& g, std::int64_t box) {
    std::uniform_int_distribution<std::int64_t> d(-box, box);
    UDPoint x;
    for (auto& v : x.v) v = d(g);
    return x;
}
UDPoint const zero{};
}  // namespace

TEST(UdFunctions, Examples) {
    EXPECT_EQ(ud_wt_k(0, zero), 0);
    EXPECT_EQ(ud_eps_k(0, zero), 0);
    UDPoint x{};
    x[slot::x11] = 1;
    EXPECT_EQ(ud_wt_k(1, x), 2);
}

TEST(UdActions, Examples) {
    std::mt19937_64 g(1);
    auto const x = random_point(g, 5);
    auto y = ud_e(1, 3, x);
    for (std::size_t i = 0; i < kDim; ++i) EXPECT_EQ(y[i], x[i] + (i == slot::x11 ? 3 : 0));
    for (int k = 0; k < kRank; ++k) EXPECT_EQ(ud_e(k, 0, x), x);
    auto const z = ud_e(5, 1, zero);
    EXPECT_EQ(z[slot::x52], 1);
    EXPECT_EQ(z[slot::x51], 0);
    UDPoint w{};
    w[slot::x22] = 3;
    EXPECT_EQ(ud_f_table(2, w)[slot::x22], 2);
}

TEST(UdActions, GroupLawAndInverses) {
    std::mt19937_64 g(2);
    std::uniform_int_distribution<std::int64_t> dc(-3, 3);
    for (int n = 0; n < 5000; ++n) {
        auto const x = random_point(g, 5);
        std::int64_t const c1 = dc(g), c2 = dc(g);
        for (int k = 0; k < kRank; ++k) {
            EXPECT_EQ(ud_e(k, c1, ud_e(k, c2, x)), ud_e(k, c1 + c2, x)) << "k=" << k;
            EXPECT_EQ(ud_e_tilde(k, ud_f_tilde(k, x)), x);
            EXPECT_EQ(ud_eps_k(k, ud_e(k, c1, x)), ud_eps_k(k, x) - c1);
        }
    }
}

TEST(UdActions, BranchTablesAgreeWithActions) {
    std::mt19937_64 g(3);
    for (int n = 0; n < 10000; ++n) {
        auto const x = random_point(g, 5);
        for (int k = 1; k < kRank; ++k) EXPECT_EQ(ud_f_table(k, x), ud_f_tilde(k, x));
        EXPECT_EQ(ud_f0_table(x), ud_f_tilde(0, x));
        EXPECT_LE(std::popcount(ud_f0_conditions(x)), 1);
    }
}

TEST(UdActions, LiteralReadingsDisagree) {
    std::mt19937_64 g(4);
    int a_sum = 0, c2 = 0, b24 = 0;
    for (int n = 0; n < 2000; ++n) {
        auto const x = random_point(g, 5);
        a_sum += ud_e(0, 1, x, {.a_breve_sum = true}) != ud_e(0, 1, x);
        c2 += ud_e(2, 1, x, {.c2_with_x31 = true}) != ud_e(2, 1, x);
        F4Reading const diff{.b24_as_difference = true, .strict_second = true};
        b24 += ud_f0_conditions(x, diff) == 0 || ud_f0_table(x, diff) != ud_f_tilde(0, x);
    }
    EXPECT_GT(a_sum, 0);
    EXPECT_GT(c2, 0);
    EXPECT_GT(b24, 0);
}

TEST(Omega, Examples) {
    PCElement const binf = PCElement::zero(Regime::limit());
    EXPECT_EQ(omega(binf), zero);
    EXPECT_EQ(omega_inv(zero), binf);
    UDPoint x{};
    x[slot::x11] = 2;
    EXPECT_EQ(omega_inv(x)(1, 1), 2);
    EXPECT_EQ(omega(omega_inv(x))[slot::x11], 2);
    EXPECT_THROW(omega(PCElement::zero(Regime::finite(1))), std::invalid_argument);
}

TEST(Omega, IsomorphismOnSamples) {
    std::mt19937_64 g(5);
    for (int n = 0; n < 10000; ++n) {
        auto const x = random_point(g, 8);
        PCElement const b = omega_inv(x);
        ASSERT_TRUE(is_member(b));
        EXPECT_EQ(omega(b), x);
        EXPECT_EQ(omega_inv(omega(b)), b);
        for (int k = 0; k < kRank; ++k) {
            auto const e = e_tilde(k, b), f = f_tilde(k, b);
            ASSERT_TRUE(e && f);
            EXPECT_EQ(omega(*e), ud_e_tilde(k, x));
            EXPECT_EQ(omega(*f), ud_f_tilde(k, x));
            EXPECT_EQ(ud_wt_k(k, x), wt_k(k, b));
            EXPECT_EQ(ud_eps_k(k, x), eps_k(k, b));
            EXPECT_EQ(ud_phi_k(k, x), phi_k(k, b));
        }
    }
}

TEST(Omega, Json) {
    UDPoint x{};
    for (std::size_t i = 0; i < kDim; ++i) x[i] = static_cast<std::int64_t>(i) - 4;
    EXPECT_EQ(to_json(x).dump(), "[-4,-3,-2,-1,0,1,2,3,4,5]");
}
