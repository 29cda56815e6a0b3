#include "qsu2/enveloping_algebra.hpp"

#include <sstream>

namespace qsu2 {

std::string MonomialU::to_string() const
{
    if (is_one()) return "1";
    std::ostringstream os;
    auto pow = [&os](const char* g, long p) {
        if (p == 0) return;
        os << g;
        if (p != 1) os << "^" << p;
    };
    pow("f", f);
    pow("k", k);
    pow("e", e);
    return os.str();
}

UElement UElement::unit() { return monomial(MonomialU{}); }

UElement UElement::monomial(const MonomialU& m, ExactScalar coeff)
{
    UElement x;
    if (!coeff.is_zero()) x.terms_.emplace(m, std::move(coeff));
    return x;
}

UElement UElement::gen_e() { return monomial(MonomialU{0, 0, 1}); }
UElement UElement::gen_f() { return monomial(MonomialU{1, 0, 0}); }
UElement UElement::gen_k(long power) { return monomial(MonomialU{0, power, 0}); }
UElement UElement::scalar(const ExactScalar& s) { return monomial(MonomialU{}, s); }

void UElement::add_term(const MonomialU& m, const ExactScalar& coeff)
{
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, coeff);
    if (!inserted) {
        it->second = it->second + coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

UElement operator+(const UElement& x, const UElement& y)
{
    UElement r = x;
    for (const auto& [m, c] : y.terms_) r.add_term(m, c);
    return r;
}

UElement operator-(const UElement& x, const UElement& y)
{
    UElement r = x;
    for (const auto& [m, c] : y.terms_) r.add_term(m, -c);
    return r;
}

UElement UElement::operator-() const
{
    UElement r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

UElement operator*(const ExactScalar& s, const UElement& x)
{
    if (s.is_zero()) return UElement();
    UElement r;
    for (const auto& [m, c] : x.terms()) r.add_term(m, s * c);
    return r;
}

namespace {

UElement term_product_u(const MonomialU& x, const MonomialU& y);

UElement element_product(const UElement& x, const UElement& y)
{
    UElement r;
    for (const auto& [mx, cx] : x.terms()) {
        for (const auto& [my, cy] : y.terms()) {
            ExactScalar c = cx * cy;
            UElement prod = term_product_u(mx, my);
            for (const auto& [m, k] : prod.terms()) {
                r.add_term(m, c * k);
            }
        }
    }
    return r;
}

// Straightening along ke = q ek, kf = q^{-1} fk and
// ef = fe + (k^2 - k^{-2})/(q - q^{-1}); terminates because each recursion
// strictly reduces the number of e-f inversions.
UElement term_product_u(const MonomialU& x, const MonomialU& y)
{
    if (x.e == 0) {
        // f^{xf} k^{xk} f^{yf} k^{yk} e^{ye}; k^{xk} f^{yf} = q^{-xk*yf} f^{yf} k^{xk}
        ExactScalar c = ExactScalar::q_power(-x.k * y.f);
        return UElement::monomial(MonomialU{x.f + y.f, x.k + y.k, y.e}, c);
    }
    if (y.f == 0) {
        // e^{xe} k^{yk} = q^{-xe*yk} k^{yk} e^{xe}
        ExactScalar c = ExactScalar::q_power(-static_cast<long>(x.e) * y.k);
        return UElement::monomial(MonomialU{x.f, x.k + y.k, x.e + y.e}, c);
    }
    // x = A e, y = f B; e f = f e + (k^2 - k^{-2})/(q - q^{-1})
    MonomialU a{x.f, x.k, x.e - 1};
    MonomialU b{y.f - 1, y.k, y.e};
    UElement af = term_product_u(a, MonomialU{1, 0, 0});
    UElement eb = term_product_u(MonomialU{0, 0, 1}, b);
    UElement r = element_product(af, eb);
    ExactScalar inv_comm = q_commutator_denominator().inverse();
    UElement ak2b = element_product(term_product_u(a, MonomialU{0, 2, 0}), UElement::monomial(b));
    UElement akm2b = element_product(term_product_u(a, MonomialU{0, -2, 0}), UElement::monomial(b));
    return r + inv_comm * (ak2b - akm2b);
}

}  // namespace

UElement operator*(const UElement& x, const UElement& y)
{
    return element_product(x, y);
}

UElement star_u(const UElement& x)
{
    UElement r;
    for (const auto& [m, c] : x.terms()) {
        r.add_term(MonomialU{m.e, m.k, m.f}, c);
    }
    return r;
}

UElement casimir()
{
    UElement ef = UElement::gen_e() * UElement::gen_f();
    // (q^{1/2} k^{-1} - q^{-1/2} k)^2
    UElement g = ExactScalar::v_power(1) * UElement::gen_k(-1) -
                 ExactScalar::v_power(-1) * UElement::gen_k(1);
    ExactScalar coeff = (ExactScalar::q_power(-1L) - ExactScalar::q_power(1L)).pow(-2);
    return ef + coeff * (g * g);
}

UElement casimir_alternate_presentation()
{
    UElement fe = UElement::gen_f() * UElement::gen_e();
    UElement g = ExactScalar::v_power(-1) * UElement::gen_k(-1) -
                 ExactScalar::v_power(1) * UElement::gen_k(1);
    ExactScalar coeff = (ExactScalar::q_power(-1L) - ExactScalar::q_power(1L)).pow(-2);
    return fe + coeff * (g * g);
}

ExactScalar casimir_eigenvalue(HalfInteger l)
{
    ExactScalar q = q_integer(l + HalfInteger::from_twice(1));
    return q * q;
}

std::string UElement::to_string() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")";
        if (!m.is_one()) os << "*" << m.to_string();
    }
    return os.str();
}

}  // namespace qsu2
