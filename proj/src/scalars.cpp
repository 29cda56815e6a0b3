#include "qsu2/scalars.hpp"

#include <cassert>
#include <cmath>
#include <sstream>

namespace qsu2 {

namespace {

Int int_gcd(const Int& a, const Int& b)
{
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

}  // namespace

std::string HalfInteger::to_string() const
{
    if (twice_ % 2 == 0) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(const Int& constant)
{
    if (constant != 0) c_.push_back(constant);
}

Polynomial::Polynomial(long constant)
{
    if (constant != 0) c_.push_back(Int(constant));
}

Polynomial Polynomial::monomial(const Int& coeff, int degree)
{
    Polynomial p;
    if (coeff == 0) return p;
    p.c_.assign(static_cast<size_t>(degree) + 1, Int(0));
    p.c_.back() = coeff;
    return p;
}

void Polynomial::trim()
{
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Int Polynomial::coeff(int i) const
{
    if (i < 0 || i >= static_cast<int>(c_.size())) return Int(0);
    return c_[static_cast<size_t>(i)];
}

const Int& Polynomial::leading() const
{
    assert(!c_.empty());
    return c_.back();
}

Polynomial operator+(const Polynomial& x, const Polynomial& y)
{
    Polynomial r;
    r.c_.resize(std::max(x.c_.size(), y.c_.size()), Int(0));
    for (size_t i = 0; i < x.c_.size(); ++i) r.c_[i] = x.c_[i];
    for (size_t i = 0; i < y.c_.size(); ++i) r.c_[i] += y.c_[i];
    r.trim();
    return r;
}

Polynomial operator-(const Polynomial& x, const Polynomial& y)
{
    Polynomial r;
    r.c_.resize(std::max(x.c_.size(), y.c_.size()), Int(0));
    for (size_t i = 0; i < x.c_.size(); ++i) r.c_[i] = x.c_[i];
    for (size_t i = 0; i < y.c_.size(); ++i) r.c_[i] -= y.c_[i];
    r.trim();
    return r;
}

Polynomial operator*(const Polynomial& x, const Polynomial& y)
{
    Polynomial r;
    if (x.is_zero() || y.is_zero()) return r;
    r.c_.assign(x.c_.size() + y.c_.size() - 1, Int(0));
    for (size_t i = 0; i < x.c_.size(); ++i) {
        if (x.c_[i] == 0) continue;
        for (size_t j = 0; j < y.c_.size(); ++j) {
            if (y.c_[j] == 0) continue;
            r.c_[i + j] += x.c_[i] * y.c_[j];
        }
    }
    r.trim();
    return r;
}

Polynomial Polynomial::operator-() const
{
    Polynomial r = *this;
    for (auto& k : r.c_) k = -k;
    return r;
}

Polynomial Polynomial::multiply_int(const Int& k) const
{
    if (k == 0) return Polynomial();
    Polynomial r = *this;
    for (auto& x : r.c_) x *= k;
    return r;
}

Polynomial Polynomial::divide_exact(const Polynomial& d) const
{
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    Polynomial rem = *this;
    if (rem.is_zero()) return Polynomial();
    int dd = d.degree();
    int qd = rem.degree() - dd;
    if (qd < 0) throw std::domain_error("inexact polynomial division");
    Polynomial q;
    q.c_.assign(static_cast<size_t>(qd) + 1, Int(0));
    while (!rem.is_zero() && rem.degree() >= dd) {
        Int c;
        Int r;
        mpz_tdiv_qr(c.get_mpz_t(), r.get_mpz_t(), rem.leading().get_mpz_t(),
                    d.leading().get_mpz_t());
        if (r != 0) throw std::domain_error("inexact polynomial division");
        int shift = rem.degree() - dd;
        q.c_[static_cast<size_t>(shift)] = c;
        for (int i = 0; i <= dd; ++i) {
            rem.c_[static_cast<size_t>(i + shift)] -= c * d.coeff(i);
        }
        rem.trim();
    }
    if (!rem.is_zero()) throw std::domain_error("inexact polynomial division");
    q.trim();
    return q;
}

Int Polynomial::content() const
{
    Int g(0);
    for (const auto& k : c_) {
        g = int_gcd(g, k);
        if (g == 1) break;
    }
    return g;
}

Polynomial Polynomial::primitive_part() const
{
    if (is_zero()) return Polynomial();
    Int g = content();
    Polynomial r = *this;
    for (auto& k : r.c_) k /= g;
    return r;
}

namespace {

// Pseudo-remainder of p by d: lead(d)^(deg p - deg d + 1) * p mod d.
Polynomial pseudo_remainder(Polynomial p, const Polynomial& d)
{
    int dd = d.degree();
    while (!p.is_zero() && p.degree() >= dd) {
        // p <- lead(d)*p - lead(p)*v^(deg p - deg d)*d
        int shift = p.degree() - dd;
        Polynomial scaled = p.multiply_int(d.leading());
        Polynomial sub = d.multiply_int(p.leading());
        scaled = scaled - (Polynomial::monomial(Int(1), shift) * sub);
        p = scaled;
    }
    return p;
}

Polynomial primitive_gcd(Polynomial p, Polynomial q)
{
    if (p.degree() < q.degree()) std::swap(p, q);
    while (!q.is_zero()) {
        Polynomial r = pseudo_remainder(p, q);
        p = q;
        q = r.is_zero() ? Polynomial() : r.primitive_part();
    }
    Polynomial g = p.primitive_part();
    if (!g.is_zero() && g.leading() < 0) g = -g;
    return g;
}

}  // namespace

Polynomial Polynomial::gcd(const Polynomial& x, const Polynomial& y)
{
    if (x.is_zero() && y.is_zero()) return Polynomial();
    if (x.is_zero()) return y.leading() < 0 ? -y : y;
    if (y.is_zero()) return x.leading() < 0 ? -x : x;
    Int c = int_gcd(x.content(), y.content());
    Polynomial g = primitive_gcd(x.primitive_part(), y.primitive_part());
    return g.multiply_int(c);
}

double Polynomial::eval(double v) const
{
    double r = 0.0;
    for (size_t i = c_.size(); i-- > 0;) r = r * v + c_[i].get_d();
    return r;
}

bool Polynomial::has_only_even_powers() const
{
    for (size_t i = 1; i < c_.size(); i += 2) {
        if (c_[i] != 0) return false;
    }
    return true;
}

void Polynomial::split_parity(Polynomial& even_in_q, Polynomial& odd_in_q) const
{
    even_in_q = Polynomial();
    odd_in_q = Polynomial();
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (i % 2 == 0) {
            even_in_q = even_in_q + monomial(c_[i], static_cast<int>(i / 2));
        } else {
            odd_in_q = odd_in_q + monomial(c_[i], static_cast<int>((i - 1) / 2));
        }
    }
}

Rational Polynomial::eval_rational(const Rational& v0) const
{
    Rational r(0);
    for (size_t i = c_.size(); i-- > 0;) r = r * v0 + Rational(c_[i]);
    return r;
}

Rational Polynomial::eval_even_at_q(const Rational& q0) const
{
    if (!has_only_even_powers())
        throw std::domain_error("polynomial has odd powers of v; not a function of q");
    Rational r(0);
    Rational qpow(1);
    for (size_t i = 0; i < c_.size(); i += 2) {
        r += Rational(c_[i]) * qpow;
        qpow *= q0;
    }
    return r;
}

std::string Polynomial::to_string(const std::string& var) const
{
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Int a = c_[i];
        if (!first) {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (i == 0) {
            os << a;
        } else {
            if (a == 1) {
            } else if (a == -1) {
                os << "-";
            } else {
                os << a << "*";
            }
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// ExactScalar

ExactScalar::ExactScalar(const Rational& value)
    : num_(Int(value.get_num())), den_(Int(value.get_den()))
{
    normalize();
}

ExactScalar::ExactScalar(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den))
{
    normalize();
}

ExactScalar ExactScalar::from_fraction(long num, long den)
{
    return ExactScalar(Polynomial(num), Polynomial(den));
}

ExactScalar ExactScalar::v_power(long e)
{
    if (e >= 0) return ExactScalar(Polynomial::monomial(Int(1), static_cast<int>(e)), Polynomial(1));
    return ExactScalar(Polynomial(1), Polynomial::monomial(Int(1), static_cast<int>(-e)));
}

void ExactScalar::normalize()
{
    if (den_.is_zero()) throw std::domain_error("division by zero in Q(v)");
    if (num_.is_zero()) {
        den_ = Polynomial(1);
        return;
    }
    Polynomial g = Polynomial::gcd(num_, den_);
    if (!(g == Polynomial(1))) {
        num_ = num_.divide_exact(g);
        den_ = den_.divide_exact(g);
    }
    if (den_.leading() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

ExactScalar operator+(const ExactScalar& x, const ExactScalar& y)
{
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    if (x.den_ == y.den_) return ExactScalar(x.num_ + y.num_, x.den_);
    return ExactScalar(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
}

ExactScalar operator-(const ExactScalar& x, const ExactScalar& y)
{
    if (y.is_zero()) return x;
    if (x.is_zero()) return -y;
    if (x.den_ == y.den_) return ExactScalar(x.num_ - y.num_, x.den_);
    return ExactScalar(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
}

ExactScalar operator*(const ExactScalar& x, const ExactScalar& y)
{
    if (x.is_zero() || y.is_zero()) return ExactScalar();
    // cross-cancel before multiplying to keep degrees small
    Polynomial g1 = Polynomial::gcd(x.num_, y.den_);
    Polynomial g2 = Polynomial::gcd(y.num_, x.den_);
    Polynomial n1 = (g1 == Polynomial(1)) ? x.num_ : x.num_.divide_exact(g1);
    Polynomial d2 = (g1 == Polynomial(1)) ? y.den_ : y.den_.divide_exact(g1);
    Polynomial n2 = (g2 == Polynomial(1)) ? y.num_ : y.num_.divide_exact(g2);
    Polynomial d1 = (g2 == Polynomial(1)) ? x.den_ : x.den_.divide_exact(g2);
    return ExactScalar(n1 * n2, d1 * d2);
}

ExactScalar operator/(const ExactScalar& x, const ExactScalar& y)
{
    return x * y.inverse();
}

ExactScalar ExactScalar::operator-() const
{
    ExactScalar r = *this;
    r.num_ = -r.num_;
    return r;
}

ExactScalar ExactScalar::inverse() const
{
    if (is_zero()) throw std::domain_error("inverse of zero in Q(v)");
    return ExactScalar(den_, num_);
}

ExactScalar ExactScalar::pow(long e) const
{
    if (e == 0) return ExactScalar(1);
    ExactScalar base = e > 0 ? *this : inverse();
    unsigned long k = static_cast<unsigned long>(e > 0 ? e : -e);
    ExactScalar r(1);
    while (k > 0) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

bool ExactScalar::as_v_power(long& e) const
{
    auto is_unit_monomial = [](const Polynomial& p, int& deg) {
        if (p.is_zero()) return false;
        deg = p.degree();
        for (int i = 0; i < deg; ++i) {
            if (p.coeff(i) != 0) return false;
        }
        return p.leading() == 1;
    };
    int dn = 0, dd = 0;
    if (!is_unit_monomial(num_, dn) || !is_unit_monomial(den_, dd)) return false;
    e = dn - dd;
    return true;
}

double ExactScalar::eval_v(double v0) const
{
    double d = den_.eval(v0);
    if (d == 0.0) throw PoleError("pole of exact scalar at v0");
    return num_.eval(v0) / d;
}

double ExactScalar::eval_q(double q0) const
{
    return eval_v(std::sqrt(q0));
}

bool ExactScalar::has_only_even_powers() const
{
    return num_.has_only_even_powers() && den_.has_only_even_powers();
}

bool ExactScalar::has_pole_at_q(const Rational& q0) const
{
    Polynomial ev, od;
    den_.split_parity(ev, od);
    return ev.eval_rational(q0) == 0 && od.eval_rational(q0) == 0;
}

Rational ExactScalar::eval_rational_q(const Rational& q0) const
{
    if (!has_only_even_powers())
        throw std::domain_error("exact scalar has odd v-powers; not a function of q");
    Rational d = den_.eval_even_at_q(q0);
    if (d == 0) throw PoleError("pole of exact scalar at q0");
    return num_.eval_even_at_q(q0) / d;
}

std::string ExactScalar::to_string() const
{
    if (den_ == Polynomial(1)) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

// ---------------------------------------------------------------------------
// q-combinatorics

ExactScalar q_commutator_denominator()
{
    return ExactScalar::q_power(1) - ExactScalar::q_power(-1);
}

ExactScalar q_integer(HalfInteger z)
{
    ExactScalar num = ExactScalar::q_power(z) - ExactScalar::q_power(-z);
    return num / q_commutator_denominator();
}

NumericScalar q_integer(NumericScalar z, double q0)
{
    double lq = std::log(q0);
    NumericScalar qz = std::exp(z * lq);
    return (qz - 1.0 / qz) / (q0 - 1.0 / q0);
}

NumericScalar generalized_q_integer(unsigned k, NumericScalar w)
{
    if (w == NumericScalar(0.0, 0.0)) return NumericScalar(static_cast<double>(k), 0.0);
    if (k == 0) return NumericScalar(0.0, 0.0);
    constexpr double kNearUnitThreshold = 1e-6;
    if (std::abs(w - NumericScalar(1.0, 0.0)) < kNearUnitThreshold ||
        std::abs(w + NumericScalar(1.0, 0.0)) < kNearUnitThreshold) {
        // w^{-(k-1)} + w^{-(k-3)} + ... + w^{k-1}
        NumericScalar sum(0.0, 0.0);
        NumericScalar term = std::pow(w, -static_cast<double>(k - 1));
        NumericScalar w2 = w * w;
        for (unsigned i = 0; i < k; ++i) {
            sum += term;
            term *= w2;
        }
        return sum;
    }
    NumericScalar wk = std::pow(w, static_cast<double>(k));
    return (1.0 / wk - wk) / (1.0 / w - w);
}

NumericScalar geometric_moment_sum(double q0, NumericScalar w, int order)
{
    if (order != 1 && order != 2) throw NumericDomainError("moment order must be 1 or 2");
    if (!(q0 > 0.0 && q0 < 1.0)) throw NumericDomainError("q must lie in (0,1)");
    NumericScalar t = std::exp(w * std::log(q0));  // q0^w
    if (std::abs(t) >= 1.0) throw NumericDomainError("geometric moment sum diverges: |q^w| >= 1");
    NumericScalar one_minus = 1.0 - t;
    if (order == 1) return t / (one_minus * one_minus);
    return t * (1.0 + t) / (one_minus * one_minus * one_minus);
}

NumericScalar complex_binomial(NumericScalar z, unsigned j)
{
    NumericScalar c(1.0, 0.0);
    for (unsigned i = 1; i <= j; ++i) {
        c *= (z + static_cast<double>(i) - 1.0) / static_cast<double>(i);
    }
    return c;
}

NumericScalar eval_numeric(const ExactScalar& x, const Rational& q0)
{
    if (!(q0 > 0 && q0 < 1)) throw NumericDomainError("q must lie in (0,1)");
    if (x.has_pole_at_q(q0)) throw PoleError("exact scalar has a pole at q0");
    return NumericScalar(x.eval_q(q0.get_d()), 0.0);
}

}  // namespace qsu2
