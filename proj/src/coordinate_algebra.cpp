#include "qsu2/coordinate_algebra.hpp"

#include <algorithm>
#include <sstream>

namespace qsu2 {

std::string MonomialA::to_string() const
{
    if (is_one()) return "1";
    std::ostringstream os;
    auto pow = [&os](const char* g, int p) {
        if (p == 0) return;
        os << g;
        if (p > 1) os << "^" << p;
    };
    if (diag > 0) pow("a", diag);
    if (diag < 0) pow("d", -diag);
    pow("b", b);
    pow("c", c);
    return os.str();
}

AlgebraElement AlgebraElement::unit()
{
    return monomial(MonomialA{});
}

AlgebraElement AlgebraElement::monomial(const MonomialA& m, ExactScalar coeff)
{
    AlgebraElement x;
    if (!coeff.is_zero()) x.terms_.emplace(m, std::move(coeff));
    return x;
}

AlgebraElement AlgebraElement::gen_a() { return monomial(MonomialA{1, 0, 0}); }
AlgebraElement AlgebraElement::gen_b() { return monomial(MonomialA{0, 1, 0}); }
AlgebraElement AlgebraElement::gen_c() { return monomial(MonomialA{0, 0, 1}); }
AlgebraElement AlgebraElement::gen_d() { return monomial(MonomialA{-1, 0, 0}); }

AlgebraElement AlgebraElement::scalar(const ExactScalar& s)
{
    return monomial(MonomialA{}, s);
}

int AlgebraElement::degree() const
{
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

ExactScalar AlgebraElement::coeff(const MonomialA& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? ExactScalar() : it->second;
}

void AlgebraElement::add_term(const MonomialA& m, const ExactScalar& coeff)
{
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, coeff);
    if (!inserted) {
        it->second = it->second + coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y)
{
    AlgebraElement r = x;
    for (const auto& [m, c] : y.terms_) r.add_term(m, c);
    return r;
}

AlgebraElement operator-(const AlgebraElement& x, const AlgebraElement& y)
{
    AlgebraElement r = x;
    for (const auto& [m, c] : y.terms_) r.add_term(m, -c);
    return r;
}

AlgebraElement AlgebraElement::operator-() const
{
    AlgebraElement r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

AlgebraElement operator*(const ExactScalar& s, const AlgebraElement& x)
{
    if (s.is_zero()) return AlgebraElement();
    AlgebraElement r;
    for (const auto& [m, c] : x.terms()) r.add_term(m, s * c);
    return r;
}

namespace {

// Appends (bc)^1 to every monomial, scaled; right-multiplication by bc is a
// plain exponent shift since b and c commute with each other and bc sits to
// the right of the diagonal part in normal form.
AlgebraElement shift_bc(const AlgebraElement& x, const ExactScalar& coeff)
{
    AlgebraElement r;
    for (const auto& [m, c] : x.terms()) {
        MonomialA shifted = m;
        shifted.b += 1;
        shifted.c += 1;
        r.add_term(shifted, c * coeff);
    }
    return r;
}

// Normal form of the purely diagonal product a^{i1-part} * a^{i2-part}.
// Mixed signs are straightened with ad = 1 + q bc and da = 1 + q^{-1} bc:
//   a^al d^de = a^{al-1} d^{de-1} (1 + q^{2de-1} bc)
//   d^de a^al = d^{de-1} a^{al-1} (1 + q^{1-2al} bc)
AlgebraElement diag_product(int i1, int i2)
{
    if (i1 == 0 || i2 == 0 || (i1 > 0) == (i2 > 0)) {
        return AlgebraElement::monomial(MonomialA{i1 + i2, 0, 0});
    }
    AlgebraElement acc = AlgebraElement::monomial(MonomialA{i1 + i2, 0, 0});
    if (i1 > 0) {
        int delta = -i2;
        int t = std::min(i1, delta);
        for (int r = delta - t + 1; r <= delta; ++r) {
            acc = acc + shift_bc(acc, ExactScalar::v_power(2 * (2 * r - 1)));
        }
    } else {
        int alpha = i2;
        int t = std::min(-i1, alpha);
        for (int r = alpha - t + 1; r <= alpha; ++r) {
            acc = acc + shift_bc(acc, ExactScalar::v_power(2 * (1 - 2 * r)));
        }
    }
    return acc;
}

}  // namespace

AlgebraElement term_product(const MonomialA& x, const MonomialA& y)
{
    // commute the diagonal part of y to the left of b^{x.b} c^{x.c}:
    // (b^j c^k) a^p = q^{-p(j+k)} a^p (b^j c^k), same exponent with p < 0 for d.
    long e0 = -static_cast<long>(y.diag) * (x.b + x.c);
    AlgebraElement diag = diag_product(x.diag, y.diag);
    AlgebraElement r;
    ExactScalar factor = ExactScalar::q_power(e0);
    for (const auto& [m, c] : diag.terms()) {
        MonomialA shifted = m;
        shifted.b += x.b + y.b;
        shifted.c += x.c + y.c;
        r.add_term(shifted, factor * c);
    }
    return r;
}

AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y)
{
    AlgebraElement r;
    for (const auto& [mx, cx] : x.terms()) {
        for (const auto& [my, cy] : y.terms()) {
            ExactScalar c = cx * cy;
            AlgebraElement prod = term_product(mx, my);
            for (const auto& [m, k] : prod.terms()) {
                r.add_term(m, c * k);
            }
        }
    }
    return r;
}

AlgebraElement star(const AlgebraElement& x)
{
    AlgebraElement r;
    for (const auto& [m, c] : x.terms()) {
        // (D b^j c^k)* = (c*)^k (b*)^j D* = (-1)^{j+k} q^{j-k} b^k c^j D*
        ExactScalar factor = ExactScalar::q_power(static_cast<long>(m.b - m.c));
        if ((m.b + m.c) % 2 != 0) factor = -factor;
        AlgebraElement tail = term_product(MonomialA{0, m.c, m.b}, MonomialA{-m.diag, 0, 0});
        for (const auto& [mm, k] : tail.terms()) {
            r.add_term(mm, c * factor * k);
        }
    }
    return r;
}

ExactScalar haar_state(const AlgebraElement& x)
{
    ExactScalar total;
    for (const auto& [m, c] : x.terms()) {
        if (m.diag != 0 || m.b != m.c) continue;
        long j = m.b;
        // h((bc)^j) = (-q)^j (1 - q^2) / (1 - q^{2j+2})
        ExactScalar sign_qj = ExactScalar::q_power(j);
        if (j % 2 != 0) sign_qj = -sign_qj;
        ExactScalar numer = ExactScalar(1) - ExactScalar::q_power(2L);
        ExactScalar denom = ExactScalar(1) - ExactScalar::q_power(2 * j + 2);
        total += c * sign_qj * numer / denom;
    }
    return total;
}

ExactScalar inner_product(const AlgebraElement& x, const AlgebraElement& y)
{
    return haar_state(star(x) * y);
}

std::vector<GradedComponent> grading(const AlgebraElement& x)
{
    std::map<std::pair<long, long>, AlgebraElement> by_weight;
    for (const auto& [m, c] : x.terms()) {
        by_weight[{m.weight_m().twice(), m.weight_n().twice()}].add_term(m, c);
    }
    std::vector<GradedComponent> r;
    r.reserve(by_weight.size());
    for (auto& [w, comp] : by_weight) {
        r.push_back({HalfInteger::from_twice(w.first), HalfInteger::from_twice(w.second),
                     std::move(comp)});
    }
    return r;
}

AlgebraElement diagonal_automorphism(const AlgebraElement& x, const ExactScalar& lam_h,
                                     const ExactScalar& mu_h)
{
    if (lam_h.is_zero() || mu_h.is_zero())
        throw std::domain_error("diagonal automorphism parameters must be nonzero");
    AlgebraElement r;
    for (const auto& [m, c] : x.terms()) {
        ExactScalar factor = lam_h.pow(m.weight_m().twice()) * mu_h.pow(m.weight_n().twice());
        r.add_term(m, c * factor);
    }
    return r;
}

std::vector<MonomialA> monomials_up_to_degree(int max_degree)
{
    std::vector<MonomialA> r;
    for (int deg = 0; deg <= max_degree; ++deg) {
        for (int i = -deg; i <= deg; ++i) {
            int rest = deg - (i < 0 ? -i : i);
            for (int j = 0; j <= rest; ++j) {
                r.push_back(MonomialA{i, j, rest - j});
            }
        }
    }
    return r;
}

std::string AlgebraElement::to_string() const
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
