#pragma once

#include <cstdint>
#include <random>

#include <gmpxx.h>

#include "ratmed/exact.hpp"

namespace ratmed::testing {

/// Seeded source of random test inputs.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed), big_(gmp_randinit_mt) { big_.seed(seed); }

    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
    }

    bool coin() { return range(0, 1) == 1; }

    /// Uniform in [0, 2^bits).
    Integer bits(unsigned bits) { return big_.get_z_bits(bits); }

    /// Uniform in [1, 2^bits).
    Integer positive(unsigned bits) {
        Integer n;
        do n = this->bits(bits);
        while (n == 0);
        return n;
    }

    /// Bit length itself drawn uniformly, so small and large values both occur.
    Integer integer(unsigned max_bits) {
        Integer n = bits(static_cast<unsigned>(range(1, max_bits)));
        return coin() ? Integer(-n) : n;
    }

    Rational rational(unsigned max_bits) {
        return Rational(integer(max_bits), positive(static_cast<unsigned>(range(1, max_bits))));
    }

    Rational nonzero_rational(unsigned max_bits) {
        Rational q;
        do q = rational(max_bits);
        while (q.is_zero());
        return q;
    }

    /// p/q with 1 <= p, q <= bound.
    Rational small_positive(std::int64_t bound) {
        return Rational(Integer(static_cast<long>(range(1, bound))), Integer(static_cast<long>(range(1, bound))));
    }

    /// p/q in (0, 1) with q <= max_den.
    Rational unit_interval(std::int64_t max_den) {
        const std::int64_t q = range(2, max_den);
        return Rational(Integer(static_cast<long>(range(1, q - 1))), Integer(static_cast<long>(q)));
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
    gmp_randclass big_;
};

}  // namespace ratmed::testing
