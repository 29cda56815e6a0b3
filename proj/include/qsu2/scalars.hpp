#pragma once

#include <gmpxx.h>

#include <compare>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace qsu2 {

using Int = mpz_class;
using Rational = mpq_class;
using NumericScalar = std::complex<double>;

/// Thrown when an exact evaluation hits a pole of the rational function.
struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Thrown on invalid numeric input (q outside (0,1), divergent sums, ...).
struct NumericDomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Spin and weight labels l, m, n live in (1/2)Z.  Stored as twice the value
// so that all arithmetic stays in machine integers.
class HalfInteger {
public:
    constexpr HalfInteger() = default;
    constexpr explicit HalfInteger(long whole) : twice_(2 * whole) {}

    static constexpr HalfInteger from_twice(long twice)
    {
        HalfInteger h;
        h.twice_ = twice;
        return h;
    }

    constexpr long twice() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }
    constexpr bool is_zero() const { return twice_ == 0; }
    double value() const { return 0.5 * static_cast<double>(twice_); }

    friend constexpr HalfInteger operator+(HalfInteger x, HalfInteger y)
    {
        return from_twice(x.twice_ + y.twice_);
    }
    friend constexpr HalfInteger operator-(HalfInteger x, HalfInteger y)
    {
        return from_twice(x.twice_ - y.twice_);
    }
    constexpr HalfInteger operator-() const { return from_twice(-twice_); }

    friend constexpr auto operator<=>(HalfInteger, HalfInteger) = default;

    std::string to_string() const;

private:
    long twice_ = 0;
};

// Dense polynomial in one indeterminate over Z.  The indeterminate is v with
// v^2 = q throughout this project; keeping v (rather than q) as the base makes
// every half-integer power of q representable.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(const Int& constant);
    explicit Polynomial(long constant);

    static Polynomial monomial(const Int& coeff, int degree);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Int coeff(int i) const;
    const Int& leading() const;

    friend Polynomial operator+(const Polynomial& x, const Polynomial& y);
    friend Polynomial operator-(const Polynomial& x, const Polynomial& y);
    friend Polynomial operator*(const Polynomial& x, const Polynomial& y);
    Polynomial operator-() const;
    bool operator==(const Polynomial&) const = default;

    Polynomial multiply_int(const Int& k) const;
    // Exact division; the divisor must divide without remainder.
    Polynomial divide_exact(const Polynomial& d) const;

    Int content() const;  // gcd of coefficients, nonnegative
    Polynomial primitive_part() const;
    // Full gcd in Z[v] (content included), positive leading coefficient.
    static Polynomial gcd(const Polynomial& x, const Polynomial& y);

    double eval(double v) const;
    // Exact evaluation of p(sqrt(q0)) for polynomials with only even powers.
    Rational eval_even_at_q(const Rational& q0) const;
    bool has_only_even_powers() const;
    // Even/odd split: p(v) = even(v^2) + v*odd(v^2).
    void split_parity(Polynomial& even_in_q, Polynomial& odd_in_q) const;
    Rational eval_rational(const Rational& v0) const;

    std::string to_string(const std::string& var = "v") const;

private:
    std::vector<Int> c_;  // c_[i] * v^i; invariant: empty or c_.back() != 0
    void trim();
};

// An element of the field Q(v).  Canonical form: gcd(num, den) = 1 in Z[v]
// (integer content included) and den has positive leading coefficient, so
// equality of values is equality of representations.
class ExactScalar {
public:
    ExactScalar() : num_(), den_(1) {}
    ExactScalar(long value) : num_(value), den_(1) {}  // NOLINT: implicit by design
    explicit ExactScalar(const Int& value) : num_(value), den_(1) {}
    explicit ExactScalar(const Rational& value);
    ExactScalar(Polynomial num, Polynomial den);

    static ExactScalar zero() { return ExactScalar(); }
    static ExactScalar one() { return ExactScalar(1); }
    static ExactScalar from_fraction(long num, long den);
    static ExactScalar v_power(long e);
    static ExactScalar q_power(long e) { return v_power(2 * e); }
    static ExactScalar q_power(HalfInteger z) { return v_power(z.twice()); }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == Polynomial(1) && den_ == Polynomial(1); }

    friend ExactScalar operator+(const ExactScalar& x, const ExactScalar& y);
    friend ExactScalar operator-(const ExactScalar& x, const ExactScalar& y);
    friend ExactScalar operator*(const ExactScalar& x, const ExactScalar& y);
    friend ExactScalar operator/(const ExactScalar& x, const ExactScalar& y);
    ExactScalar operator-() const;
    ExactScalar& operator+=(const ExactScalar& y) { return *this = *this + y; }
    ExactScalar& operator-=(const ExactScalar& y) { return *this = *this - y; }
    ExactScalar& operator*=(const ExactScalar& y) { return *this = *this * y; }

    ExactScalar inverse() const;
    ExactScalar pow(long e) const;
    bool operator==(const ExactScalar&) const = default;

    // True if the value is c * v^e with c = 1; used for gauge/q-power fits.
    bool as_v_power(long& e) const;

    double eval_v(double v0) const;
    double eval_q(double q0) const;
    bool has_only_even_powers() const;
    // Exact substitution v^2 = q0; requires even powers and no pole at q0.
    Rational eval_rational_q(const Rational& q0) const;
    // Exact pole test at v0 = sqrt(q0).
    bool has_pole_at_q(const Rational& q0) const;

    std::string to_string() const;

private:
    Polynomial num_, den_;
    void normalize();
};

// [z]_q = (q^z - q^{-z})/(q - q^{-1}), exact for half-integer z.
ExactScalar q_integer(HalfInteger z);
NumericScalar q_integer(NumericScalar z, double q0);

// [k]_w = (w^{-k} - w^k)/(w^{-1} - w) with [k]_0 = k; near w = +-1 the
// polynomial form w^{-(k-1)} + w^{-(k-3)} + ... + w^{k-1} is used to avoid
// catastrophic cancellation (threshold 1e-6).
NumericScalar generalized_q_integer(unsigned k, NumericScalar w);

// Sum_{k>=1} k^order q0^{w k} in closed form; requires |q0^w| < 1.
NumericScalar geometric_moment_sum(double q0, NumericScalar w, int order);

// Binomial coefficient (z + j - 1 choose j) via the multiplicative recursion.
NumericScalar complex_binomial(NumericScalar z, unsigned j);

// Evaluation of an exact scalar at a rational q0 strictly inside (0,1).
NumericScalar eval_numeric(const ExactScalar& x, const Rational& q0);

ExactScalar q_commutator_denominator();  // q - q^{-1} as an exact scalar

}  // namespace qsu2
