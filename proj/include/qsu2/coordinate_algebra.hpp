#pragma once

#include "qsu2/scalars.hpp"

#include <map>
#include <string>
#include <vector>

namespace qsu2 {

// PBW monomial of the coordinate algebra: a^i b^j c^k for diag = i >= 0,
// d^{-i} b^j c^k for diag = i < 0.  The generators a and d never co-occur in
// normal form; b and c commute with each other.
struct MonomialA {
    int diag = 0;
    int b = 0;
    int c = 0;

    friend auto operator<=>(const MonomialA&, const MonomialA&) = default;

    int degree() const { return (diag < 0 ? -diag : diag) + b + c; }
    // Bigrading with a = t^{1/2}_{-1/2,-1/2}, b = t^{1/2}_{-1/2,+1/2},
    // c = t^{1/2}_{+1/2,-1/2}, d = t^{1/2}_{+1/2,+1/2}, extended additively.
    HalfInteger weight_m() const { return HalfInteger::from_twice(-diag - b + c); }
    HalfInteger weight_n() const { return HalfInteger::from_twice(-diag + b - c); }
    bool is_one() const { return diag == 0 && b == 0 && c == 0; }

    std::string to_string() const;
};

// Finite linear combination of PBW monomials with exact coefficients.
// Zero coefficients are never stored, so equality of values is equality of
// the term maps.
class AlgebraElement {
public:
    AlgebraElement() = default;

    static AlgebraElement zero() { return AlgebraElement(); }
    static AlgebraElement unit();
    static AlgebraElement monomial(const MonomialA& m, ExactScalar coeff = ExactScalar(1));
    static AlgebraElement gen_a();
    static AlgebraElement gen_b();
    static AlgebraElement gen_c();
    static AlgebraElement gen_d();
    static AlgebraElement scalar(const ExactScalar& s);

    const std::map<MonomialA, ExactScalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;  // max total degree over terms; -1 for zero
    ExactScalar coeff(const MonomialA& m) const;

    void add_term(const MonomialA& m, const ExactScalar& coeff);

    friend AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y);
    friend AlgebraElement operator-(const AlgebraElement& x, const AlgebraElement& y);
    friend AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y);
    friend AlgebraElement operator*(const ExactScalar& s, const AlgebraElement& x);
    AlgebraElement operator-() const;
    AlgebraElement& operator+=(const AlgebraElement& y) { return *this = *this + y; }
    AlgebraElement& operator-=(const AlgebraElement& y) { return *this = *this - y; }

    bool operator==(const AlgebraElement&) const = default;

    std::string to_string() const;

private:
    std::map<MonomialA, ExactScalar> terms_;
};

// Normal form of the product of two PBW monomials.
AlgebraElement term_product(const MonomialA& x, const MonomialA& y);

// Antilinear anti-homomorphism with a* = d, b* = -q c.  Coefficients are
// real rational functions, so conjugation only matters in the numeric layer.
AlgebraElement star(const AlgebraElement& x);

// Haar state: vanishes off the (0,0)-bigraded part,
// h((bc)^j) = (-q)^j (1-q^2)/(1-q^{2j+2}), h(1) = 1.
ExactScalar haar_state(const AlgebraElement& x);

// <x,y> = h(x* y).
ExactScalar inner_product(const AlgebraElement& x, const AlgebraElement& y);

struct GradedComponent {
    HalfInteger m;
    HalfInteger n;
    AlgebraElement component;
};

// Decomposition into (m,n)-homogeneous components, ordered by (m,n).
std::vector<GradedComponent> grading(const AlgebraElement& x);

// Scales each (m,n)-homogeneous component by lam_h^{2m} mu_h^{2n}; this is
// the automorphism xi^l_{mn} |-> lambda^m mu^n xi^l_{mn} with lambda = lam_h^2
// and mu = mu_h^2.  Throws on zero parameters.
AlgebraElement diagonal_automorphism(const AlgebraElement& x, const ExactScalar& lam_h,
                                     const ExactScalar& mu_h);

// All PBW monomials of total degree <= max_degree (graded-lexicographic order).
std::vector<MonomialA> monomials_up_to_degree(int max_degree);

}  // namespace qsu2
