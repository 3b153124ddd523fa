#pragma once

// The coherent family {B^{5,l}}: tensor crystals T_lambda (x) B^{5,l} (x) T_mu,
// the embeddings into B^{5,inf}, and the inverse construction.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>

#include "cartan.hpp"
#include "perfect_crystal.hpp"

namespace d5 {

using AVector = std::array<std::int64_t, 6>;

/// t_lambda (x) b (x) t_mu
struct TensorElement {
    ClWeight lambda;
    PCElement b;
    ClWeight mu;

    friend bool operator==(TensorElement const&, TensorElement const&) = default;
};

inline std::optional<TensorElement> e_tilde(int k, TensorElement const& t) {
    auto b = e_tilde(k, t.b);
    if (!b) return std::nullopt;
    return TensorElement{t.lambda, *b, t.mu};
}
inline std::optional<TensorElement> f_tilde(int k, TensorElement const& t) {
    auto b = f_tilde(k, t.b);
    if (!b) return std::nullopt;
    return TensorElement{t.lambda, *b, t.mu};
}
inline std::int64_t eps_k(int k, TensorElement const& t) { return eps_k(k, t.b) - t.lambda.pairing(k); }
inline std::int64_t phi_k(int k, TensorElement const& t) { return phi_k(k, t.b) + t.mu.pairing(k); }
inline ClWeight wt(TensorElement const& t) { return t.lambda + t.mu + wt(t.b); }

inline PCElement minimal_from_a(AVector const& a) { return minimal_element(a); }

/// t_{eps(b0)} (x) b (x) t_{-phi(b0)}
inline TensorElement tensor_for(PCElement const& b0, PCElement const& b) {
    return TensorElement{eps(b0), b, -phi(b0)};
}

/// f_{(l,b0)}: t_{eps(b0)} (x) b (x) t_{-phi(b0)} -> b - b0.
inline PCElement embed(PCElement const& b0, TensorElement const& t) {
    if (b0.regime.is_limit() || t.b.regime != b0.regime)
        throw std::invalid_argument("embed needs b0 and b in the same B^{5,l}");
    if (level(eps(b0)) != b0.regime.l) throw std::invalid_argument("embed needs a minimal b0");
    if (t.lambda != eps(b0) || t.mu != -phi(b0))
        throw std::invalid_argument("embed needs lambda = eps(b0) and mu = -phi(b0)");
    if (!is_member(t.b)) throw std::invalid_argument("embed needs b in B^{5,l}");
    PCElement out = PCElement::zero(Regime::limit());
    for (std::size_t i = 0; i < out.b.size(); ++i) out.b[i] = t.b.b[i] - b0.b[i];
    return out;
}

struct Preimage {
    std::int64_t l;
    AVector a;
    PCElement b;   // in B^{5,l}
    PCElement b0;  // b^0(a)
};

/// Finds (l, a, b) with embed(b^0(a), t_{eps} (x) b (x) t_{-phi}) = bp.
/// The zero element yields a = 0; it is sent to l = 1, a = (1,0,0,0,0,0) instead.
inline Preimage preimage(PCElement const& bp) {
    if (!bp.regime.is_limit()) throw std::invalid_argument("preimage expects a B^{5,inf} element");
    auto const& B = bp;
    std::int64_t const a1 = std::max({-B(1, 1) + B(2, 2), -B(1, 1) - B(1, 2) + B(2, 2) + B(2, 3),
                                      -B(1, 1) - B(1, 2) - B(1, 3) + B(2, 2) + B(2, 3) + B(2, 4),
                                      std::int64_t{0}});
    std::int64_t const a2 =
        std::max({-B(2, 2) + B(3, 3), -B(2, 2) - B(2, 3) + B(3, 3) + B(3, 4), -B(1, 4), -B(2, 5) - a1,
                  std::int64_t{0}});
    std::int64_t const a3 = std::max({-B(3, 3) + B(4, 4), -B(1, 3), -B(2, 4), -B(3, 5) - a2, std::int64_t{0}});
    std::int64_t const a4 = std::max({-B(1, 2), -B(2, 3), -B(3, 4), -B(4, 5) - a3, std::int64_t{0}});
    std::int64_t const a5 = std::max({-B(1, 1) - a1 - a2 - a3, -B(2, 2) - a2 - a3, -B(3, 3) - a3, -B(4, 4),
                                      std::int64_t{0}});
    std::int64_t const a0 = std::max({B(1, 1) - a2 - a3 - a4, B(1, 1) + B(1, 2) - a2 - a3,
                                      B(1, 1) + B(1, 2) + B(1, 3) - a2,
                                      B(1, 1) + B(1, 2) + B(1, 3) + B(1, 4), std::int64_t{0}});
    AVector a = {a0, a1, a2, a3, a4, a5};
    if (a_level(a) == 0) a = {1, 0, 0, 0, 0, 0};
    Preimage p{a_level(a), a, PCElement{}, minimal_element(a)};
    p.b = PCElement::zero(Regime::finite(p.l));
    for (std::size_t i = 0; i < p.b.b.size(); ++i) p.b.b[i] = bp.b[i] + p.b0.b[i];
    return p;
}

}  // namespace d5
