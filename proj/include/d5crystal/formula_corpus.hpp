#pragma once

// Text forms of the positive structure of V_1: the ten slots of e_k^c(x),
// gamma_k and eps_k for k = 0..5, in the tropicalizer grammar. Variables are
// the slot names x4_2 ... x5_1 and c.

#include <array>
#include <string>
#include <vector>

#include "cartan.hpp"
#include "geom_point.hpp"

namespace d5 {

struct Formula {
    enum class Kind { e_slot, gamma, eps };

    std::string name;
    Kind kind;
    int k;
    int slot;  // e_slot only
    std::string text;
};

namespace detail {
inline std::string par(std::string const& s) { return "(" + s + ")"; }

inline std::vector<Formula> build_corpus() {
    std::vector<Formula> out;
    auto e_slots = [&](int k, std::array<std::string, kDim> const& slots) {
        for (std::size_t i = 0; i < kDim; ++i)
            out.push_back({"e" + std::to_string(k) + "^c " + std::string(kSlotNamesV1[i]), Formula::Kind::e_slot,
                           k, static_cast<int>(i), slots[i]});
    };
    auto identity = [] {
        std::array<std::string, kDim> s;
        for (std::size_t i = 0; i < kDim; ++i) s[i] = std::string(kSlotNamesV1[i]);
        return s;
    };

    // k = 0
    std::string const B = par("x2_2*x3_1/x3_3 + x3_2*x3_1/x5_2");
    std::string const C = par("x2_2*x2_1/x4_2 + x2_2*x4_1*x2_1/(x3_3*x3_2)");
    std::string const A = par(B + " + " + C);
    std::string const D = par("x2_2*x4_1*x2_1/(x3_3*x3_2)");
    std::string const s = par("x5_1 + " + A);
    std::string const t = par("c*(x5_1 + x3_2*x3_1/x5_2) + x2_2*x3_1/x3_3 + " + C);
    std::string const u = par("c*(x5_1 + " + B + " + " + D + ") + x2_2*x2_1/x4_2");
    std::string const v = par("c*(x5_1 + " + B + ") + " + C);
    std::string const w = par("c*x5_1 + " + A);
    {
        auto e = identity();
        e[slot::x42] = "x4_2*" + u + "/(c*" + s + ")";
        e[slot::x33] = "x3_3*" + t + "/(c*" + s + ")";
        e[slot::x22] = "x2_2/c";
        e[slot::x52] = "x5_2*" + w + "/(c*" + s + ")";
        e[slot::x32] = "x3_2*" + v + "/(c*" + t + ")";
        e[slot::x41] = "x4_1*" + s + "/" + u;
        e[slot::x11] = "x1_1/c";
        e[slot::x21] = "x2_1/c";
        e[slot::x31] = "x3_1*" + s + "/" + v;
        e[slot::x51] = "x5_1*" + s + "/" + w;
        e_slots(0, e);
    }
    // k = 1
    {
        auto e = identity();
        e[slot::x11] = "c*x1_1";
        e_slots(1, e);
    }
    // k = 2
    {
        std::string const c2 = par("(c*x2_2*x2_1 + x3_2*x1_1)/(x2_2*x2_1 + x3_2*x1_1)");
        auto e = identity();
        e[slot::x22] = "x2_2*" + c2;
        e[slot::x21] = "x2_1*c/" + c2;
        e_slots(2, e);
    }
    // k = 3
    {
        std::string const P = "x3_3*x3_2^2*x3_1", Q = "x2_2*x5_2*x3_2*x3_1", R = "x2_2*x5_2*x4_1*x2_1";
        std::string const c31 = par(par("c*" + P + " + " + Q + " + " + R) + "/" + par(P + " + " + Q + " + " + R));
        std::string const c32 =
            par(par("c*" + P + " + c*" + Q + " + " + R) + "/" + par("c*" + P + " + " + Q + " + " + R));
        auto e = identity();
        e[slot::x33] = "x3_3*" + c31;
        e[slot::x32] = "x3_2*" + c32;
        e[slot::x31] = "x3_1*c/(" + c31 + "*" + c32 + ")";
        e_slots(3, e);
    }
    // k = 4
    {
        std::string const c4 = par("(c*x4_2*x4_1 + x3_3*x3_2)/(x4_2*x4_1 + x3_3*x3_2)");
        auto e = identity();
        e[slot::x42] = "x4_2*" + c4;
        e[slot::x41] = "x4_1*c/" + c4;
        e_slots(4, e);
    }
    // k = 5
    {
        std::string const c5 = par("(c*x5_2*x5_1 + x3_2*x3_1)/(x5_2*x5_1 + x3_2*x3_1)");
        auto e = identity();
        e[slot::x52] = "x5_2*" + c5;
        e[slot::x51] = "x5_1*c/" + c5;
        e_slots(5, e);
    }

    std::array<std::string, kRank> const gammas = {
        "1/(x2_2*x2_1)",
        "x1_1^2/(x2_2*x2_1)",
        "x2_2^2*x2_1^2/(x3_3*x3_2*x1_1*x3_1)",
        "x3_3^2*x3_2^2*x3_1^2/(x4_2*x2_2*x5_2*x4_1*x2_1*x5_1)",
        "x4_2^2*x4_1^2/(x3_3*x3_2*x3_1)",
        "x5_2^2*x5_1^2/(x3_3*x3_2*x3_1)",
    };
    std::array<std::string, kRank> const epss = {
        "x5_1 + " + A,
        "x2_2/x1_1",
        "x3_3/x2_2*(1 + x3_2*x1_1/(x2_2*x2_1))",
        "x4_2/x3_3*(1 + x2_2*x5_2/(x3_3*x3_2) + x2_2*x5_2*x4_1*x2_1/(x3_3*x3_2^2*x3_1))",
        "1/x4_2*(1 + x3_3*x3_2/(x4_2*x4_1))",
        "x3_3/x5_2*(1 + x3_2*x3_1/(x5_2*x5_1))",
    };
    for (int k = 0; k < kRank; ++k) out.push_back({"gamma" + std::to_string(k), Formula::Kind::gamma, k, -1, gammas[k]});
    for (int k = 0; k < kRank; ++k) out.push_back({"eps" + std::to_string(k), Formula::Kind::eps, k, -1, epss[k]});
    return out;
}
}  // namespace detail

inline std::vector<Formula> const& formula_corpus() {
    static const auto corpus = detail::build_corpus();
    return corpus;
}

/// Variable order used when evaluating corpus entries: the ten slots, then c.
inline std::vector<std::string> corpus_variables() {
    std::vector<std::string> v(kSlotNamesV1.begin(), kSlotNamesV1.end());
    v.push_back("c");
    return v;
}

}  // namespace d5
