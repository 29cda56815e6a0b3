#pragma once

#include "qsu2/scalars.hpp"

#include <map>
#include <string>

namespace qsu2 {

// PBW monomial of U_q(su2) in the triangular order f^i k^j e^m, j in Z.
struct MonomialU {
    int f = 0;
    long k = 0;
    int e = 0;

    friend auto operator<=>(const MonomialU&, const MonomialU&) = default;

    int degree() const { return f + e + static_cast<int>(k < 0 ? -k : k); }
    bool is_one() const { return f == 0 && k == 0 && e == 0; }
    std::string to_string() const;
};

class UElement {
public:
    UElement() = default;

    static UElement zero() { return UElement(); }
    static UElement unit();
    static UElement monomial(const MonomialU& m, ExactScalar coeff = ExactScalar(1));
    static UElement gen_e();
    static UElement gen_f();
    static UElement gen_k(long power = 1);
    static UElement scalar(const ExactScalar& s);

    const std::map<MonomialU, ExactScalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const MonomialU& m, const ExactScalar& coeff);

    friend UElement operator+(const UElement& x, const UElement& y);
    friend UElement operator-(const UElement& x, const UElement& y);
    friend UElement operator*(const UElement& x, const UElement& y);
    friend UElement operator*(const ExactScalar& s, const UElement& x);
    UElement operator-() const;
    UElement& operator+=(const UElement& y) { return *this = *this + y; }

    bool operator==(const UElement&) const = default;

    std::string to_string() const;

private:
    std::map<MonomialU, ExactScalar> terms_;
};

// Involutive anti-homomorphism with e* = f, k* = k.
UElement star_u(const UElement& x);

// The quantum Casimir c_q = ef + (q^{-1}-q)^{-2} (q^{1/2}k^{-1} - q^{-1/2}k)^2.
UElement casimir();
// Second presentation fe + (q^{-1}-q)^{-2} (q^{-1/2}k^{-1} - q^{1/2}k)^2;
// normalizes to the same element as casimir().
UElement casimir_alternate_presentation();

// Eigenvalue of the Casimir on the spin-l block: [l+1/2]_q^2.
ExactScalar casimir_eigenvalue(HalfInteger l);

}  // namespace qsu2
