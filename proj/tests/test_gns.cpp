#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsu2/gns.hpp"

#include <cmath>

using namespace qsu2;

namespace {

HalfInteger half(long twice) { return HalfInteger::from_twice(twice); }

}  // namespace

TEST_CASE("truncation dimensions")
{
    CHECK(TruncationSpace(0).dim() == 1);
    CHECK(TruncationSpace(1).dim() == 5);
    CHECK(TruncationSpace(4).dim() == 55);

    TruncationSpace t0(0);
    CHECK(t0.vector(0).l.twice() == 0);
    CHECK(t0.vector(0).m.twice() == 0);
    CHECK(t0.vector(0).n.twice() == 0);
    CHECK(t0.vector(0).norm_sq == ExactScalar(1));
}

TEST_CASE("basis is h-orthogonal with positive norms and validated labels")
{
    TruncationSpace space(4);
    for (size_t i = 0; i < space.dim(); ++i) {
        for (size_t j = i + 1; j < space.dim(); ++j) {
            const auto& u = space.vector(i);
            const auto& w = space.vector(j);
            if (u.m == w.m && u.n == w.n) {
                CHECK(inner_product(u.vector, w.vector).is_zero());
            }
        }
    }
    // dk eigenvalue q^{-n} per basis vector
    LeftActionEngine engine;
    for (const auto& bv : space.basis()) {
        CHECK(engine.act_k(bv.vector) == ExactScalar::v_power(-bv.n.twice()) * bv.vector);
    }
    // norms positive on a q-grid
    for (const auto& bv : space.basis()) {
        for (double q0 : {0.25, 0.5, 0.75}) {
            CHECK(bv.norm_sq.eval_q(q0) > 0.0);
        }
    }
}

TEST_CASE("spin 1/2 block is spanned by the generators")
{
    TruncationSpace space(2);
    HalfInteger h = half(1);
    CHECK(space.vector(space.index_of(h, -h, -h)).vector == AlgebraElement::gen_a());
    CHECK(space.vector(space.index_of(h, -h, h)).vector == AlgebraElement::gen_b());
    CHECK(space.vector(space.index_of(h, h, -h)).vector == AlgebraElement::gen_c());
    CHECK(space.vector(space.index_of(h, h, h)).vector == AlgebraElement::gen_d());
    // <a,a> = q^2/(1+q^2)
    ExactScalar q = ExactScalar::q_power(1L);
    CHECK(space.vector(space.index_of(h, -h, -h)).norm_sq ==
          q.pow(2) / (ExactScalar(1) + q.pow(2)));
}

TEST_CASE("projection reproduces elements inside the truncation")
{
    TruncationSpace space(3);
    AlgebraElement x = AlgebraElement::gen_a() * AlgebraElement::gen_b() -
                       ExactScalar::from_fraction(3, 7) * AlgebraElement::gen_c();
    CHECK(space.reconstruct(space.project(x)) == x);
}

TEST_CASE("multiplication matrix basics")
{
    TruncationSpace space(2);
    CHECK(multiplication_matrix(AlgebraElement::unit(), space) ==
          ExactMatrix::identity(space.dim()));

    ExactMatrix pa = multiplication_matrix(AlgebraElement::gen_a(), space);
    // column of 1: a * 1 = a, itself a basis vector
    size_t col = space.index_of(half(0), half(0), half(0));
    size_t row = space.index_of(half(1), -half(1), -half(1));
    for (size_t t = 0; t < space.dim(); ++t) {
        if (t == row) {
            CHECK(pa.at(t, col) == ExactScalar(1));
        } else {
            CHECK(pa.at(t, col).is_zero());
        }
    }
    // selection rule: pi(a) connects (l,m,n) only to (l +- 1/2, m - 1/2, n - 1/2)
    for (size_t t = 0; t < space.dim(); ++t) {
        for (size_t s = 0; s < space.dim(); ++s) {
            if (pa.at(t, s).is_zero()) continue;
            const auto& rt = space.vector(t);
            const auto& cs = space.vector(s);
            CHECK(std::abs(rt.l.twice() - cs.l.twice()) == 1);
            CHECK(rt.m.twice() == cs.m.twice() - 1);
            CHECK(rt.n.twice() == cs.n.twice() - 1);
        }
    }
}

TEST_CASE("E F K matrices: exact diagonal identities")
{
    TruncationSpace space(4);
    LeftActionEngine engine(ExactScalar::from_fraction(3, 5));  // any gauge
    EfkMatrices m = efk_matrices(space, engine);

    // K diagonal q^{-n}; at (1/2,-1/2,-1/2) the entry is q^{1/2}
    size_t i = space.index_of(half(1), -half(1), -half(1));
    CHECK(m.K.at(i, i) == ExactScalar::v_power(1));

    // E kills lowest weight vectors
    for (size_t s = 0; s < space.dim(); ++s) {
        const auto& bv = space.vector(s);
        if (bv.n == -bv.l) {
            for (size_t t = 0; t < space.dim(); ++t) CHECK(m.E.at(t, s).is_zero());
        }
    }

    // gauge-free diagonals: F.E = [l+n][l-n+1], E.F = [l-n][l+n+1]
    ExactMatrix fe = m.F * m.E;
    ExactMatrix ef = m.E * m.F;
    HalfInteger one(1);
    for (size_t s = 0; s < space.dim(); ++s) {
        const auto& bv = space.vector(s);
        CHECK(fe.at(s, s) == q_integer(bv.l + bv.n) * q_integer(bv.l - bv.n + one));
        CHECK(ef.at(s, s) == q_integer(bv.l - bv.n) * q_integer(bv.l + bv.n + one));
        for (size_t t = 0; t < space.dim(); ++t) {
            if (t != s) {
                CHECK(fe.at(t, s).is_zero());
                CHECK(ef.at(t, s).is_zero());
            }
        }
    }

    // commutation relation as matrices: EF - FE = (K^2 - K^{-2})/(q - q^{-1})
    ExactMatrix lhs = ef - fe;
    ExactMatrix rhs = q_commutator_denominator().inverse() * (m.K * m.K - m.K_inv * m.K_inv);
    CHECK(lhs == rhs);
}

TEST_CASE("modular operator implements sigma_L by conjugation")
{
    TruncationSpace space(4);
    LeftActionEngine engine;
    ExactMatrix delta = modular_operator(space);
    ExactMatrix delta_inv(space.dim(), space.dim());
    for (size_t i = 0; i < space.dim(); ++i) delta_inv.at(i, i) = delta.at(i, i).inverse();

    size_t i0 = space.index_of(half(0), half(0), half(0));
    CHECK(delta.at(i0, i0) == ExactScalar(1));
    size_t i1 = space.index_of(half(1), -half(1), half(1));
    CHECK(delta.at(i1, i1) == ExactScalar::q_power(-1L));

    for (const AlgebraElement& x : {AlgebraElement::gen_a(), AlgebraElement::gen_b(),
                                    AlgebraElement::gen_a() * AlgebraElement::gen_c()}) {
        ExactMatrix lhs = multiplication_matrix(engine.sigma_L(x), space);
        ExactMatrix rhs = delta * multiplication_matrix(x, space) * delta_inv;
        CHECK(lhs == rhs);
    }
}

TEST_CASE("numeric truncation agrees with the exact one at q0")
{
    Rational q0(1, 2);
    TruncationSpace exact(3);
    NumericTruncation numeric(3, q0);
    REQUIRE(numeric.dim() == exact.dim());
    for (size_t i = 0; i < exact.dim(); ++i) {
        const auto& bv = exact.vector(i);
        auto j = numeric.find(bv.l, bv.m, bv.n);
        REQUIRE(j.has_value());
        double expect = std::sqrt(bv.norm_sq.eval_q(0.5));
        CHECK(numeric.norm(*j) == doctest::Approx(expect).epsilon(1e-12));
    }
}

TEST_CASE("gauge calibration finds the q-power gauge")
{
    NumericTruncation space(4, Rational(1, 2));
    ExactScalar rho = calibrate_gauge(space);
    CHECK(rho == ExactScalar(1));  // table is already normalized

    // stability across q0
    NumericTruncation space4(4, Rational(1, 4));
    CHECK(calibrate_gauge(space4) == rho);

    // linear gauge dependence of the mismatch
    LeftActionEngine scaled(ExactScalar(10) * rho);
    CHECK(e_gauge_mismatch(space, scaled) == doctest::Approx(10.0).epsilon(1e-9));
}

TEST_CASE("orthonormal E and F are mutually adjoint at q = 1/2")
{
    NumericTruncation space(6, Rational(1, 2));
    LeftActionEngine engine(calibrate_gauge(space));
    NumericMatrix e_mat = space.orthonormal_matrix(
        [&](const MonomialA& m) { return engine.act_e(AlgebraElement::monomial(m)); });
    NumericMatrix f_mat = space.orthonormal_matrix(
        [&](const MonomialA& m) { return engine.act_f(AlgebraElement::monomial(m)); });
    double worst = 0.0;
    for (size_t i = 0; i < space.dim(); ++i) {
        for (size_t j = 0; j < space.dim(); ++j) {
            worst = std::max(worst, std::abs(e_mat.at(i, j) - f_mat.at(j, i)));
        }
    }
    CHECK(worst < 1e-9);
}

TEST_CASE("growth constants of pi(a) and pi(c) are finite")
{
    NumericTruncation space(5, Rational(1, 2));
    for (char g : {'a', 'c'}) {
        GrowthReport rep = growth_constants(space, g);
        CHECK(rep.raising_sup > 0.0);
        CHECK(rep.raising_sup < 100.0);
        CHECK(rep.lowering_sup > 0.0);
        CHECK(rep.lowering_sup < 100.0);
    }
}
