#include <gtest/gtest.h>

#include <set>

#include "d5crystal/spin_module.hpp"
#include "oracles/spin_expansions.hpp"

using namespace d5;

namespace {
// Orthonormal-coordinate model of the half-spin module: (i_1..i_5) has weight
// (i_1, ..., i_5)/2 (doubled here), alpha_p = e_p - e_{p+1} (p = 1..4), alpha_5 = e_4 + e_5,
// alpha_0 = -(e_1 + e_2).
std::array<int, 5> doubled_weight(SpinBasis b) {
    std::array<int, 5> w{};
    for (int p = 1; p <= 5; ++p) w[p - 1] = b.sign(p);
    return w;
}

std::array<int, 5> root(int k) {
    std::array<int, 5> a{};
    if (k == 0) {
        a[0] = a[1] = -1;
    } else if (k == 5) {
        a[3] = a[4] = 1;
    } else {
        a[k - 1] = 1;
        a[k] = -1;
    }
    return a;
}

int dot_half(std::array<int, 5> const& w2, std::array<int, 5> const& a) {
    int s = 0;
    for (int i = 0; i < 5; ++i) s += w2[i] * a[i];
    return s / 2;
}
}  // namespace

TEST(SpinBasis, SixteenEvenTuplesInLexOrder) {
    auto const basis = spin_basis();
    std::set<std::string> seen;
    for (int i = 0; i < kSpinDim; ++i) {
        EXPECT_EQ(basis[i].index(), i);
        int minus = 0;
        for (int p = 1; p <= 5; ++p) minus += basis[i].sign(p) < 0;
        EXPECT_EQ(minus % 2, 0);
        seen.insert(basis[i].str());
        if (i > 0) {
            std::string a = basis[i - 1].str(), b = basis[i].str();
            // '+' sorts before '-' here
            for (auto* s : {&a, &b})
                for (auto& ch : *s) ch = ch == '+' ? '0' : '1';
            EXPECT_LT(a, b);
        }
    }
    EXPECT_EQ(seen.size(), 16u);
    EXPECT_EQ(basis[0].str(), "+++++");
    EXPECT_EQ(basis[15].str(), "----+");
}

TEST(SpinBasis, ParseRejectsBadInput) {
    EXPECT_THROW(SpinBasis::parse("++++-"), std::invalid_argument);
    EXPECT_THROW(SpinBasis::parse("+++"), std::invalid_argument);
    EXPECT_THROW(SpinBasis::parse("++x++"), std::invalid_argument);
    EXPECT_EQ(SpinBasis::parse("-+++-").str(), "-+++-");
}

TEST(SpinModule, GeneratorExamples) {
    auto const top = SpinBasis::parse("+++++");
    EXPECT_EQ(apply_gen(Gen::f, 5, top), SpinBasis::parse("+++--"));
    EXPECT_EQ(apply_gen(Gen::e, 0, top), SpinBasis::parse("--+++"));
    EXPECT_EQ(apply_gen(Gen::f, 1, SpinBasis::parse("-+++-")), std::nullopt);
    EXPECT_EQ(coroot_pairing(5, top), 1);
    EXPECT_EQ(coroot_pairing(0, top), -1);
    EXPECT_EQ(coroot_pairing(2, top), 0);
}

TEST(SpinModule, GeneratorsMatchOrthonormalWeightModel) {
    for (auto b : spin_basis()) {
        auto const w = doubled_weight(b);
        for (int k = 0; k < kRank; ++k) {
            EXPECT_EQ(coroot_pairing(k, b), dot_half(w, root(k))) << b << " k=" << k;
            for (Gen g : {Gen::e, Gen::f}) {
                auto const img = apply_gen(g, k, b);
                std::array<int, 5> target = w;
                for (int i = 0; i < 5; ++i) target[i] += (g == Gen::e ? 2 : -2) * root(k)[i];
                bool const exists = std::all_of(target.begin(), target.end(), [](int t) { return t == 1 || t == -1; });
                ASSERT_EQ(img.has_value(), exists) << b << " k=" << k;
                if (img) {
                    EXPECT_EQ(doubled_weight(*img), target);
                }
            }
        }
    }
}

TEST(SpinModule, ApplyYExamples) {
    auto const top = SpinVector::basis(SpinBasis::parse("+++++"));
    Rational const c(3, 7);
    auto const y5 = apply_Y(5, c, top);
    SpinVector expect = c * top + SpinVector::basis(SpinBasis::parse("+++--"));
    EXPECT_EQ(y5, expect);
    EXPECT_EQ(apply_Y(1, c, top), top);
    EXPECT_THROW(apply_Y(1, Rational(0), top), std::domain_error);
    // c = 1 gives 1 + f_k
    for (auto b : spin_basis())
        for (int k = 0; k < kRank; ++k)
            EXPECT_EQ(apply_Y(k, 1, SpinVector::basis(b)),
                      SpinVector::basis(b) + apply_gen(Gen::f, k, SpinVector::basis(b)));
}

TEST(SpinModule, V1CoefficientsAtKnownSlots) {
    RationalSampler rs(11, 30);
    auto const x = rs.point<GeomPoint>();
    auto const v = build_V1(x);
    EXPECT_EQ(v[SpinBasis::parse("----+")], 1);
    EXPECT_EQ(v[SpinBasis::parse("--+++")], x[slot::x52]);
    EXPECT_EQ(build_V1(ones<V1Tag>())[SpinBasis::parse("+++++")], 1);
}

TEST(SpinModule, BuildMatchesWrittenOutExpansions) {
    RationalSampler rs(2024, 50);
    for (int n = 0; n < 100; ++n) {
        auto const x = rs.point<GeomPoint>();
        EXPECT_EQ(build_V1(x), oracle::expanded_V1(x)) << x;
        auto const y = rs.point<GeomPointV2>();
        EXPECT_EQ(build_V2(y), oracle::expanded_V2(y)) << y;
    }
}

TEST(SpinModule, SigmaTwist) {
    // (+++++) has weight Lambda_5 - Lambda_0; sigma sends it to Lambda_1 - Lambda_5.
    EXPECT_EQ(sigma_twist(SpinBasis::parse("+++++")), SpinBasis::parse("+----"));
    EXPECT_EQ(spin_weight(SpinBasis::parse("+----")), ClWeight::fundamental(1) - ClWeight::fundamental(5));
    for (auto b : spin_basis()) {
        SpinBasis t = b;
        for (int i = 0; i < 4; ++i) t = sigma_twist(t);
        EXPECT_EQ(t, b);
        for (int k = 0; k < kRank; ++k)
            EXPECT_EQ(coroot_pairing(sigma(k), sigma_twist(b)), coroot_pairing(k, b));
    }
    std::set<int> image;
    for (auto b : spin_basis()) image.insert(sigma_twist(b).index());
    EXPECT_EQ(image.size(), 16u);
}

TEST(SpinModule, SigmaTwistIntertwinesGenerators) {
    for (auto b : spin_basis())
        for (int k = 0; k < kRank; ++k) {
            auto const lhs = apply_gen(Gen::f, sigma(k), sigma_twist(b));
            auto const rhs = apply_gen(Gen::f, k, b);
            ASSERT_EQ(lhs.has_value(), rhs.has_value());
            if (lhs) {
                EXPECT_EQ(*lhs, sigma_twist(*rhs));
            }
        }
}
