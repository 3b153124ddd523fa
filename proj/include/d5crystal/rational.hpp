#pragma once

// Exact rationals (GMP) and the seeded positive-rational sampler used for
// identity testing.

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace d5 {

using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// c^n for integer n (negative n inverts).
inline Rational rpow(Rational const& base, int n) {
    Rational out = 1;
    Rational b = base;
    unsigned e = static_cast<unsigned>(n < 0 ? -n : n);
    while (e) {
        if (e & 1u) out *= b;
        b *= b;
        e >>= 1u;
    }
    if (n < 0) {
        if (out == 0) throw std::domain_error("zero to a negative power");
        out = 1 / out;
    }
    return out;
}

inline std::string to_string(Rational const& q) { return q.get_str(); }

struct SampleConfig {
    std::uint64_t seed = 1;
    int count = 100;
    long bound = 50;  // numerators and denominators uniform in [1, bound]

    void validate() const {
        if (count < 1) throw std::invalid_argument("sample count must be >= 1");
        if (bound < 2) throw std::invalid_argument("sample bound must be >= 2");
    }
};

/// Deterministic stream of positive rationals p/q with p, q in [1, bound].
class RationalSampler {
public:
    RationalSampler(std::uint64_t seed, long bound) : rng_(seed), dist_(1, bound) {
        if (bound < 2) throw std::invalid_argument("sample bound must be >= 2");
    }

    Rational next() {
        long p = dist_(rng_);
        long q = dist_(rng_);
        return make_rational(p, q);
    }

    template <class Point>
    Point point() {
        Point x;
        for (auto& v : x.v) v = next();
        return x;
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
    std::uniform_int_distribution<long> dist_;
};

}  // namespace d5
