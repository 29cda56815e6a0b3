#include "qsu2/left_action.hpp"

namespace qsu2 {

namespace {

// Splits off the leftmost generator of a normal-form word.
bool split_first(const MonomialA& m, char& gen, MonomialA& rest)
{
    if (m.diag > 0) {
        gen = 'a';
        rest = MonomialA{m.diag - 1, m.b, m.c};
        return true;
    }
    if (m.diag < 0) {
        gen = 'd';
        rest = MonomialA{m.diag + 1, m.b, m.c};
        return true;
    }
    if (m.b > 0) {
        gen = 'b';
        rest = MonomialA{0, m.b - 1, m.c};
        return true;
    }
    if (m.c > 0) {
        gen = 'c';
        rest = MonomialA{0, 0, m.c - 1};
        return true;
    }
    return false;
}

AlgebraElement scale_by_weight_power(const AlgebraElement& x, long twice_exponent_per_n)
{
    // multiplies each monomial by v^{twice_exponent_per_n * twice_n}
    AlgebraElement r;
    for (const auto& [m, c] : x.terms()) {
        r.add_term(m, c * ExactScalar::v_power(twice_exponent_per_n * m.weight_n().twice()));
    }
    return r;
}

MonomialA generator_monomial(char gen)
{
    switch (gen) {
        case 'a': return MonomialA{1, 0, 0};
        case 'b': return MonomialA{0, 1, 0};
        case 'c': return MonomialA{0, 0, 1};
        case 'd': return MonomialA{-1, 0, 0};
    }
    throw std::logic_error("unknown generator");
}

}  // namespace

LeftActionEngine::LeftActionEngine(ExactScalar gauge_rho) : rho_(std::move(gauge_rho))
{
    if (rho_.is_zero()) throw std::domain_error("gauge rho must be nonzero");
}

AlgebraElement LeftActionEngine::act_k(const AlgebraElement& x) const
{
    return scale_by_weight_power(x, -1);  // q^{-n} = v^{-2n}
}

AlgebraElement LeftActionEngine::act_k_inv(const AlgebraElement& x) const
{
    return scale_by_weight_power(x, 1);
}

AlgebraElement LeftActionEngine::sigma_L_power(const AlgebraElement& x, long p) const
{
    return scale_by_weight_power(x, -2 * p);  // q^{-2np} per monomial
}

AlgebraElement LeftActionEngine::act_e_monomial(const MonomialA& m) const
{
    char gen;
    MonomialA rest;
    if (!split_first(m, gen, rest)) return AlgebraElement();  // d_e(1) = 0

    AlgebraElement head;  // d_e(gen)
    switch (gen) {
        case 'a':
        case 'c': break;
        case 'b': head = rho_ * AlgebraElement::gen_a(); break;
        case 'd': head = rho_ * AlgebraElement::gen_c(); break;
    }
    AlgebraElement result;
    if (!head.is_zero()) result = head * act_k_inv(AlgebraElement::monomial(rest));
    AlgebraElement rec = act_e_monomial(rest);
    if (!rec.is_zero()) {
        MonomialA g = generator_monomial(gen);
        // d_k(gen) = q^{-n(gen)} gen
        ExactScalar k_factor = ExactScalar::v_power(-g.weight_n().twice());
        result += k_factor * (AlgebraElement::monomial(g) * rec);
    }
    return result;
}

AlgebraElement LeftActionEngine::act_f_monomial(const MonomialA& m) const
{
    char gen;
    MonomialA rest;
    if (!split_first(m, gen, rest)) return AlgebraElement();

    AlgebraElement head;  // d_f(gen)
    switch (gen) {
        case 'b':
        case 'd': break;
        case 'a': head = rho_.inverse() * AlgebraElement::gen_b(); break;
        case 'c': head = rho_.inverse() * AlgebraElement::gen_d(); break;
    }
    AlgebraElement result;
    if (!head.is_zero()) result = head * act_k_inv(AlgebraElement::monomial(rest));
    AlgebraElement rec = act_f_monomial(rest);
    if (!rec.is_zero()) {
        MonomialA g = generator_monomial(gen);
        ExactScalar k_factor = ExactScalar::v_power(-g.weight_n().twice());
        result += k_factor * (AlgebraElement::monomial(g) * rec);
    }
    return result;
}

AlgebraElement LeftActionEngine::act_e(const AlgebraElement& x) const
{
    AlgebraElement r;
    for (const auto& [m, c] : x.terms()) {
        AlgebraElement dm = act_e_monomial(m);
        for (const auto& [mm, k] : dm.terms()) r.add_term(mm, c * k);
    }
    return r;
}

AlgebraElement LeftActionEngine::act_f(const AlgebraElement& x) const
{
    AlgebraElement r;
    for (const auto& [m, c] : x.terms()) {
        AlgebraElement dm = act_f_monomial(m);
        for (const auto& [mm, k] : dm.terms()) r.add_term(mm, c * k);
    }
    return r;
}

AlgebraElement LeftActionEngine::act(const UElement& g, const AlgebraElement& x) const
{
    AlgebraElement total;
    for (const auto& [m, c] : g.terms()) {
        // d_{f^i k^j e^p} = d_f^i . d_k^j . d_e^p, applied right to left
        AlgebraElement y = x;
        for (int i = 0; i < m.e; ++i) y = act_e(y);
        if (m.k != 0 && !y.is_zero()) y = scale_by_weight_power(y, -m.k);
        for (int i = 0; i < m.f; ++i) y = act_f(y);
        total += c * y;
    }
    return total;
}

AlgebraElement LeftActionEngine::del1(const AlgebraElement& x) const
{
    return act_f(act_k(x));
}

AlgebraElement LeftActionEngine::del2(const AlgebraElement& x) const
{
    return sigma_L(x) - x;
}

AlgebraElement LeftActionEngine::del3(const AlgebraElement& x) const
{
    return act_e(act_k(x));
}

AlgebraElement LeftActionEngine::short_derivation(ShortDerivation which,
                                                  const AlgebraElement& x) const
{
    switch (which) {
        case ShortDerivation::d1: return del1(x);
        case ShortDerivation::d2: return del2(x);
        case ShortDerivation::d3: return del3(x);
    }
    throw std::logic_error("unreachable");
}

TwistedLeibnizReport LeftActionEngine::verify_twisted_leibniz(ShortDerivation which,
                                                              int sample_degree,
                                                              bool untwisted) const
{
    TwistedLeibnizReport report;
    auto monos = monomials_up_to_degree(sample_degree);
    for (const auto& mx : monos) {
        AlgebraElement x = AlgebraElement::monomial(mx);
        AlgebraElement dx = short_derivation(which, x);
        AlgebraElement tx = untwisted ? x : sigma_L(x);
        for (const auto& my : monos) {
            AlgebraElement y = AlgebraElement::monomial(my);
            AlgebraElement lhs = short_derivation(which, x * y);
            AlgebraElement rhs = dx * y + tx * short_derivation(which, y);
            ++report.pairs_checked;
            if (!(lhs == rhs)) {
                report.passed = false;
                report.witness = LeibnizViolation{mx, my};
                return report;
            }
        }
    }
    return report;
}

}  // namespace qsu2
