#pragma once

// Geometric crystal structure on the Schubert cell B^-_i of a reduced word
// i = (i_1, ..., i_l), with coordinates (c_1, ..., c_l):
//
//   e_k^c(Y_{i_1}(c_1) ... Y_{i_l}(c_l)) = Y_{i_1}(C_1) ... Y_{i_l}(C_l)
//
// Used as an oracle for the specialized V_1 / V_2 formulas.

#include <span>
#include <stdexcept>
#include <vector>

#include "cartan.hpp"
#include "rational.hpp"

namespace d5 {

namespace detail {
inline void check_word(std::span<const int> word, std::span<const Rational> cs) {
    if (word.size() != cs.size()) throw std::invalid_argument("word and coordinates differ in length");
    for (int i : word) check_index(i);
}

// 1 / (c_1^{a_{i_1 k}} ... c_{m-1}^{a_{i_{m-1} k}} c_m) for every m with i_m = k, else 0.
inline std::vector<Rational> schubert_terms(std::span<const int> word, int k,
                                            std::span<const Rational> cs) {
    std::vector<Rational> t(word.size());
    Rational prefix = 1;
    for (std::size_t m = 0; m < word.size(); ++m) {
        if (word[m] == k) t[m] = 1 / (prefix * cs[m]);
        prefix *= rpow(cs[m], cartan(word[m], k));
    }
    return t;
}
}  // namespace detail

inline std::vector<Rational> schubert_e(std::span<const int> word, int k, Rational const& c,
                                        std::span<const Rational> cs) {
    detail::check_word(word, cs);
    check_index(k);
    auto t = detail::schubert_terms(word, k, cs);
    std::vector<Rational> out(cs.begin(), cs.end());
    for (std::size_t j = 0; j < word.size(); ++j) {
        if (word[j] != k) continue;
        Rational num = 0, den = 0;
        for (std::size_t m = 0; m < word.size(); ++m) {
            if (word[m] != k) continue;
            num += (m <= j ? c : Rational(1)) * t[m];
            den += (m < j ? c : Rational(1)) * t[m];
        }
        out[j] = cs[j] * num / den;
    }
    return out;
}

inline Rational schubert_eps(std::span<const int> word, int k, std::span<const Rational> cs) {
    detail::check_word(word, cs);
    check_index(k);
    Rational s = 0;
    for (auto const& v : detail::schubert_terms(word, k, cs)) s += v;
    return s;
}

inline Rational schubert_gamma(std::span<const int> word, int k, std::span<const Rational> cs) {
    detail::check_word(word, cs);
    check_index(k);
    Rational p = 1;
    for (std::size_t m = 0; m < word.size(); ++m) p *= rpow(cs[m], cartan(word[m], k));
    return p;
}

}  // namespace d5
