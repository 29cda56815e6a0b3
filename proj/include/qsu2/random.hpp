#pragma once

#include "qsu2/coordinate_algebra.hpp"
#include "qsu2/enveloping_algebra.hpp"

#include <cstdint>
#include <random>

namespace qsu2 {

// Seeded source for all randomized sampling; identical seeds give identical
// streams on every platform (mt19937_64 is fully specified by the standard).
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t next() { return rng_(); }

    long next_long(long lo, long hi)  // inclusive bounds
    {
        return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    ExactScalar next_rational(long max_abs_num = 6, long max_den = 4)
    {
        long num = next_long(-max_abs_num, max_abs_num);
        long den = next_long(1, max_den);
        return ExactScalar::from_fraction(num, den);
    }

    ExactScalar next_nonzero_rational(long max_abs_num = 6, long max_den = 4)
    {
        ExactScalar r;
        do {
            r = next_rational(max_abs_num, max_den);
        } while (r.is_zero());
        return r;
    }

    MonomialA next_monomial(int max_degree)
    {
        int deg = static_cast<int>(next_long(0, max_degree));
        int i = static_cast<int>(next_long(-deg, deg));
        int rest = deg - (i < 0 ? -i : i);
        int j = static_cast<int>(next_long(0, rest));
        return MonomialA{i, j, rest - j};
    }

    AlgebraElement next_element(int max_degree, int max_terms = 3)
    {
        AlgebraElement x;
        int n = static_cast<int>(next_long(1, max_terms));
        for (int t = 0; t < n; ++t) {
            x.add_term(next_monomial(max_degree), next_rational());
        }
        return x;
    }

    MonomialU next_monomial_u(int max_degree)
    {
        int deg = static_cast<int>(next_long(0, max_degree));
        int f = static_cast<int>(next_long(0, deg));
        int rest = deg - f;
        int kabs = static_cast<int>(next_long(0, rest));
        long k = next_long(0, 1) == 0 ? kabs : -kabs;
        return MonomialU{f, k, rest - kabs};
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace qsu2
