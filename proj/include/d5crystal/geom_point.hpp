#pragma once

// Ten-coordinate points of the varieties V_1 and V_2.
//
// V_1 slot order: x4_2, x3_3, x2_2, x5_2, x3_2, x4_1, x1_1, x2_1, x3_1, x5_1
// V_2 slot order: y5_2, y3_3, y2_2, y4_2, y3_2, y5_1, y0_1, y2_1, y3_1, y4_1
// where xm_l stands for x_m^{(l)}. The same order is used for integer points of
// the ultra-discretization Z^10.

#include <array>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string_view>

#include "rational.hpp"

namespace d5 {

inline constexpr std::size_t kDim = 10;

/// Reduced word i = (i_1, ..., i_10) whose Y-product parametrizes V_1.
inline constexpr std::array<int, kDim> kWordV1 = {4, 3, 2, 5, 3, 4, 1, 2, 3, 5};
/// Reduced word parametrizing V_2.
inline constexpr std::array<int, kDim> kWordV2 = {5, 3, 2, 4, 3, 5, 0, 2, 3, 4};

inline constexpr std::array<std::string_view, kDim> kSlotNamesV1 = {
    "x4_2", "x3_3", "x2_2", "x5_2", "x3_2", "x4_1", "x1_1", "x2_1", "x3_1", "x5_1"};
inline constexpr std::array<std::string_view, kDim> kSlotNamesV2 = {
    "y5_2", "y3_3", "y2_2", "y4_2", "y3_2", "y5_1", "y0_1", "y2_1", "y3_1", "y4_1"};

// Slot indices, named after the V_1 coordinates.
namespace slot {
inline constexpr std::size_t x42 = 0, x33 = 1, x22 = 2, x52 = 3, x32 = 4, x41 = 5, x11 = 6,
                             x21 = 7, x31 = 8, x51 = 9;
}
// Slot indices of V_2.
namespace yslot {
inline constexpr std::size_t y52 = 0, y33 = 1, y22 = 2, y42 = 3, y32 = 4, y51 = 5, y01 = 6,
                             y21 = 7, y31 = 8, y41 = 9;
}

struct V1Tag {
    static constexpr auto const& names = kSlotNamesV1;
    static constexpr auto const& word = kWordV1;
};
struct V2Tag {
    static constexpr auto const& names = kSlotNamesV2;
    static constexpr auto const& word = kWordV2;
};

template <class Tag, class T>
struct Coords {
    std::array<T, kDim> v{};

    T& operator[](std::size_t i) { return v[i]; }
    T const& operator[](std::size_t i) const { return v[i]; }

    static constexpr std::string_view name(std::size_t i) { return Tag::names[i]; }

    friend bool operator==(Coords const&, Coords const&) = default;

    friend std::ostream& operator<<(std::ostream& os, Coords const& c) {
        os << '(';
        for (std::size_t i = 0; i < kDim; ++i) os << (i ? ", " : "") << Tag::names[i] << '=' << c.v[i];
        return os << ')';
    }
};

/// Point of V_1 (positive rationals).
using GeomPoint = Coords<V1Tag, Rational>;
/// Point of V_2 (positive rationals).
using GeomPointV2 = Coords<V2Tag, Rational>;
/// Point of the ultra-discretization X = Z^10.
using UDPoint = Coords<V1Tag, std::int64_t>;

template <class Tag>
bool all_positive(Coords<Tag, Rational> const& p) {
    for (auto const& q : p.v)
        if (sgn(q) <= 0) return false;
    return true;
}

template <class Tag>
Coords<Tag, Rational> ones() {
    Coords<Tag, Rational> p;
    for (auto& q : p.v) q = 1;
    return p;
}

}  // namespace d5
