#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsu2/enveloping_algebra.hpp"
#include "qsu2/random.hpp"
#include "qsu2/serialization.hpp"

using namespace qsu2;

namespace {

UElement E() { return UElement::gen_e(); }
UElement F() { return UElement::gen_f(); }
UElement K(long p = 1) { return UElement::gen_k(p); }

}  // namespace

TEST_CASE("straightening of e f")
{
    // e f = f e + (k^2 - k^{-2})/(q - q^{-1})
    UElement lhs = E() * F();
    ExactScalar inv = q_commutator_denominator().inverse();
    UElement rhs = F() * E() + inv * (K(2) - K(-2));
    // F() * E() is already normal (f before e)
    CHECK(rhs.terms().count(MonomialU{1, 0, 1}) == 1);
    CHECK(lhs == rhs);
}

TEST_CASE("k-e and k-f commutation")
{
    // ke = qek: the product k*e is normal as-is; e*k picks up q^{-1}
    CHECK(K() * E() == UElement::monomial(MonomialU{0, 1, 1}));
    CHECK(E() * K() == ExactScalar::q_power(-1L) * UElement::monomial(MonomialU{0, 1, 1}));
    // kf = q^{-1} fk: the product k*f needs one swap, f*k is already normal
    CHECK(K() * F() == ExactScalar::q_power(-1L) * UElement::monomial(MonomialU{1, 1, 0}));
    CHECK(F() * K() == UElement::monomial(MonomialU{1, 1, 0}));
    CHECK(K(1) * K(-1) == UElement::unit());
    CHECK(K(-3) * K(3) == UElement::unit());
}

TEST_CASE("associativity on random degree <= 3 triples")
{
    RandomSource rng(20240902);
    for (int i = 0; i < 500; ++i) {
        UElement x = UElement::monomial(rng.next_monomial_u(3));
        UElement y = UElement::monomial(rng.next_monomial_u(3));
        UElement z = UElement::monomial(rng.next_monomial_u(3));
        CHECK((x * y) * z == x * (y * z));
    }
}

TEST_CASE("star on generators and words")
{
    CHECK(star_u(E()) == F());
    CHECK(star_u(F()) == E());
    CHECK(star_u(K(2)) == K(2));
    // (ke)* = e* k* = f k
    CHECK(star_u(K() * E()) == F() * K());
    RandomSource rng(11);
    for (int i = 0; i < 100; ++i) {
        UElement x = UElement::monomial(rng.next_monomial_u(3), rng.next_rational());
        UElement y = UElement::monomial(rng.next_monomial_u(3), rng.next_rational());
        CHECK(star_u(star_u(x)) == x);
        CHECK(star_u(x * y) == star_u(y) * star_u(x));
    }
}

TEST_CASE("Casimir: both presentations agree")
{
    CHECK(casimir() == casimir_alternate_presentation());
}

TEST_CASE("Casimir is central")
{
    UElement c = casimir();
    for (const UElement& g : {E(), F(), K(1), K(-1)}) {
        CHECK(c * g == g * c);
    }
}

TEST_CASE("Casimir is star invariant")
{
    CHECK(star_u(casimir()) == casimir());
}

TEST_CASE("Casimir eigenvalue formula")
{
    // l = 0: [1/2]_q^2
    ExactScalar half = q_integer(HalfInteger::from_twice(1));
    CHECK(casimir_eigenvalue(HalfInteger(0)) == half * half);
    // l = 1/2: [1]_q^2 = 1
    CHECK(casimir_eigenvalue(HalfInteger::from_twice(1)) == ExactScalar(1));
    ExactScalar e1 = casimir_eigenvalue(HalfInteger(1));
    ExactScalar expect = q_integer(HalfInteger::from_twice(3)) * q_integer(HalfInteger::from_twice(3));
    CHECK(e1 == expect);
}

TEST_CASE("JSON round trip")
{
    UElement x = casimir();
    CHECK(u_element_from_json(to_json(x)) == x);
}
