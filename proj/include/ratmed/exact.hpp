#pragma once

// Exact integer and rational arithmetic.
//
// Integer is GMP's mpz_class. Rational wraps mpq_class so that every value is
// canonical (reduced, positive denominator, zero is 0/1) and so that
// arithmetic never leaks GMP expression templates into `auto` variables.

#include <array>
#include <compare>
#include <concepts>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace ratmed {

using Integer = mpz_class;

Integer parse_integer(std::string_view text);
std::string to_string(const Integer& n);

class Rational {
public:
    Rational() = default;

    template <std::signed_integral T>
    Rational(T v) : q_(static_cast<long>(v)) {}

    template <std::unsigned_integral T>
    Rational(T v) : q_(static_cast<unsigned long>(v)) {}

    Rational(const Integer& n) : q_(n) {}

    /// Throws DomainError when `den` is zero.
    Rational(const Integer& num, const Integer& den);

    /// Accepts "n", "-n", "n/d" in decimal.
    static Rational parse(std::string_view text);

    const Integer& num() const { return q_.get_num(); }
    const Integer& den() const { return q_.get_den(); }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return den() == 1; }

    Rational abs() const;
    /// Throws DomainError on zero.
    Rational inverse() const;
    double to_double() const { return q_.get_d(); }

    /// "n" for integers, "n/d" otherwise.
    std::string to_string() const;

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a);

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return cmp(a.q_, b.q_) <=> 0;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.to_string();
    }

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) {}

    mpq_class q_;
};

inline Rational square(const Rational& x) { return x * x; }

struct SqrtResult {
    Integer root;
    bool exact = false;
};

/// Floor square root by integer Newton iteration. Throws DomainError for n < 0.
SqrtResult int_sqrt(const Integer& n);

bool is_square(const Integer& n);

/// The non-negative rational square root of `q`, if `q` is a rational square.
/// Throws DomainError for q < 0.
std::optional<Rational> rat_sqrt(const Rational& q);

struct PrimePower {
    Integer prime;
    unsigned exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization with strictly increasing primes.
class Factorization {
public:
    Factorization() = default;
    explicit Factorization(std::vector<PrimePower> terms);

    const std::vector<PrimePower>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    Integer value() const;

    /// "2^2·3·5·7"; "1" for the empty factorization.
    std::string to_string() const;

    /// Parses the `to_string` format (also accepts '*' as separator).
    static Factorization parse(std::string_view text);

    friend bool operator==(const Factorization&, const Factorization&) = default;

private:
    std::vector<PrimePower> terms_;
};

/// Miller-Rabin with the first 13 prime bases: deterministic below
/// 3.317e24. Larger inputs get extra bases and the answer is probabilistic.
bool is_prime(const Integer& n);

/// Trial division to 10^4, then Brent's variant of Pollard rho.
/// Throws DomainError for n < 1.
Factorization factorize(const Integer& n);

struct NormalizedTriple {
    std::array<Integer, 3> sides;
    Rational scale;
};

/// Writes positive rationals (a, b, c) as scale * (pa, pb, pc) with integers
/// of gcd 1, preserving order. Throws DomainError on non-positive input.
NormalizedTriple normalize_triple(const Rational& a, const Rational& b, const Rational& c);

}  // namespace ratmed
