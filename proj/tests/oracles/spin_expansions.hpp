#pragma once

// The sixteen coefficients of V_1(x) and V_2(y), written out term by term.

#include <string_view>
#include <utility>
#include <vector>

#include "d5crystal/spin_module.hpp"

namespace oracle {

using d5::Rational;

inline d5::SpinVector assemble(std::vector<std::pair<std::string_view, Rational>> const& terms) {
    d5::SpinVector v;
    for (auto const& [s, q] : terms) v[d5::SpinBasis::parse(s)] += q;
    return v;
}

inline d5::SpinVector expanded_V1(d5::GeomPoint const& p) {
    namespace s = d5::slot;
    Rational const x42 = p[s::x42], x33 = p[s::x33], x22 = p[s::x22], x52 = p[s::x52], x32 = p[s::x32];
    Rational const x41 = p[s::x41], x11 = p[s::x11], x21 = p[s::x21], x31 = p[s::x31], x51 = p[s::x51];
    return assemble({
        {"+++++", x52 * x51},
        {"+++--", x33 * x51 + x33 * x32 * x31 / x52},
        {"++-+-", x42 * x51 + x42 * x32 * x31 / x52 + x42 * x22 * x31 / x33 + x42 * x22 * x41 * x21 / (x33 * x32)},
        {"++--+", x51 + x32 * x31 / x52 + x22 * x31 / x33 + x22 * x41 * x21 / (x33 * x32) + x22 * x21 / x42},
        {"+-++-", x42 * x31 + x42 * x41 * x21 / x32 + x42 * x41 * x11 / x22},
        {"+-+-+", x31 + x41 * x21 / x32 + x41 * x11 / x22 + x33 * x21 / x42 + x33 * x32 * x11 / (x42 * x22)},
        {"+--++", x21 + x32 * x11 / x22 + x52 * x11 / x33},
        {"+----", x11},
        {"-+++-", x42 * x41},
        {"-++-+", x41 + x33 * x32 / x42},
        {"-+-++", x32 + x22 * x52 / x33},
        {"--+++", x52},
        {"-+---", x22},
        {"--+--", x33},
        {"---+-", x42},
        {"----+", Rational(1)},
    });
}

inline d5::SpinVector expanded_V2(d5::GeomPointV2 const& q) {
    namespace s = d5::yslot;
    Rational const y52 = q[s::y52], y33 = q[s::y33], y22 = q[s::y22], y42 = q[s::y42], y32 = q[s::y32];
    Rational const y51 = q[s::y51], y01 = q[s::y01], y21 = q[s::y21], y31 = q[s::y31], y41 = q[s::y41];
    return assemble({
        {"-+++-", y42 * y41},
        {"-++-+", y33 * y41 + y33 * y32 * y31 / y42},
        {"-+-++", y52 * y41 + y52 * y32 * y31 / y42 + y52 * y22 * y31 / y33 + y52 * y22 * y51 * y21 / (y33 * y32)},
        {"-+---", y41 + y32 * y31 / y42 + y22 * y31 / y33 + y22 * y51 * y21 / (y33 * y32) + y22 * y21 / y52},
        {"--+++", y52 * y31 + y52 * y51 * y21 / y32 + y52 * y51 * y01 / y22},
        {"--+--", y31 + y51 * y21 / y32 + y51 * y01 / y22 + y33 * y21 / y52 + y33 * y32 * y01 / (y52 * y22)},
        {"---+-", y21 + y32 * y01 / y22 + y42 * y01 / y33},
        {"----+", y01},
        {"+++++", y52 * y51},
        {"+++--", y51 + y33 * y32 / y52},
        {"++-+-", y32 + y22 * y42 / y33},
        {"+-++-", y42},
        {"++--+", y22},
        {"+-+-+", y33},
        {"+--++", y52},
        {"+----", Rational(1)},
    });
}

}  // namespace oracle
