#pragma once

#include "qsu2/coordinate_algebra.hpp"
#include "qsu2/enveloping_algebra.hpp"

#include <optional>
#include <string>

namespace qsu2 {

enum class ShortDerivation { d1, d2, d3 };  // fk, k^2 - 1, ek

struct LeibnizViolation {
    MonomialA x;
    MonomialA y;
};

struct TwistedLeibnizReport {
    bool passed = true;
    int pairs_checked = 0;
    std::optional<LeibnizViolation> witness;
};

// The left action of U on the coordinate algebra.  Generator table (gauge
// rho on the e/f pair, default 1):
//   d_k: a -> q^{1/2} a, b -> q^{-1/2} b, c -> q^{1/2} c, d -> q^{-1/2} d
//   d_e: a -> 0, b -> rho a, c -> 0, d -> rho c
//   d_f: a -> rho^{-1} b, b -> 0, c -> rho^{-1} d, d -> 0
// extended by the twisted Leibniz rule
//   d_e(xy) = d_e(x) d_{k^{-1}}(y) + d_k(x) d_e(y)  (same shape for d_f)
// and multiplicatively for d_k.
class LeftActionEngine {
public:
    LeftActionEngine() : rho_(1) {}
    explicit LeftActionEngine(ExactScalar gauge_rho);

    const ExactScalar& gauge_rho() const { return rho_; }

    AlgebraElement act(const UElement& g, const AlgebraElement& x) const;

    AlgebraElement act_e(const AlgebraElement& x) const;
    AlgebraElement act_f(const AlgebraElement& x) const;
    AlgebraElement act_k(const AlgebraElement& x) const;       // scales (m,n) by q^{-n}
    AlgebraElement act_k_inv(const AlgebraElement& x) const;

    // Left modular automorphism sigma_L = d_{k^2}; scales (m,n) by q^{-2n}.
    AlgebraElement sigma_L(const AlgebraElement& x) const { return sigma_L_power(x, 1); }
    AlgebraElement sigma_L_inverse(const AlgebraElement& x) const { return sigma_L_power(x, -1); }
    AlgebraElement sigma_L_power(const AlgebraElement& x, long p) const;

    AlgebraElement del1(const AlgebraElement& x) const;  // d_{fk}
    AlgebraElement del2(const AlgebraElement& x) const;  // sigma_L - id
    AlgebraElement del3(const AlgebraElement& x) const;  // d_{ek}
    AlgebraElement short_derivation(ShortDerivation which, const AlgebraElement& x) const;

    // Exact check of d(xy) = d(x) y + sigma_L(x) d(y) over all monomial pairs
    // with deg x, deg y <= sample_degree.  `untwisted` checks the plain rule
    // d(xy) = d(x) y + x d(y) instead (expected to fail for these maps).
    TwistedLeibnizReport verify_twisted_leibniz(ShortDerivation which, int sample_degree,
                                                bool untwisted = false) const;

private:
    ExactScalar rho_;

    AlgebraElement act_e_monomial(const MonomialA& m) const;
    AlgebraElement act_f_monomial(const MonomialA& m) const;
};

}  // namespace qsu2
