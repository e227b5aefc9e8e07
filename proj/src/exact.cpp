#include "ratmed/exact.hpp"

#include <charconv>

#include "ratmed/error.hpp"

namespace ratmed {

Integer parse_integer(std::string_view text) {
    std::string s(text);
    if (!s.empty() && s.front() == '+') s.erase(0, 1);
    bool ok = !s.empty();
    for (std::size_t i = 0; ok && i < s.size(); ++i) {
        const char ch = s[i];
        ok = (ch >= '0' && ch <= '9') || (i == 0 && ch == '-' && s.size() > 1);
    }
    if (!ok) throw DomainError("not a decimal integer: '" + std::string(text) + "'");
    return Integer(s, 10);
}

std::string to_string(const Integer& n) { return n.get_str(10); }

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    return Rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(q_))); }

Rational Rational::inverse() const {
    if (is_zero()) throw DomainError("reciprocal of zero");
    return Rational(mpq_class(1 / q_));
}

std::string Rational::to_string() const {
    if (is_integer()) return num().get_str(10);
    return num().get_str(10) + "/" + den().get_str(10);
}

Rational& Rational::operator+=(const Rational& o) {
    q_ += o.q_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    q_ -= o.q_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    q_ *= o.q_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("rational division by zero");
    q_ /= o.q_;
    return *this;
}

Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

SqrtResult int_sqrt(const Integer& n) {
    if (n < 0) throw DomainError("int_sqrt of a negative integer");
    if (n < 2) return {n, true};
    // 2^ceil(bits/2) is never below the root, so the iteration decreases
    // monotonically until it reaches floor(sqrt(n)).
    const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    Integer x = 1;
    x <<= (bits + 1) / 2;
    for (;;) {
        Integer y = (x + n / x) >> 1;
        if (y >= x) break;
        x = std::move(y);
    }
    return {x, x * x == n};
}

bool is_square(const Integer& n) {
    if (n < 0) return false;
    // Squares mod 64 occupy 12 residues; cheap rejection before Newton.
    static constexpr std::uint64_t kSquaresMod64 = 0x0202021202030213ULL;
    const unsigned long low = mpz_fdiv_ui(n.get_mpz_t(), 64);
    if (((kSquaresMod64 >> low) & 1U) == 0) return false;
    return int_sqrt(n).exact;
}

std::optional<Rational> rat_sqrt(const Rational& q) {
    if (q.sign() < 0) throw DomainError("rat_sqrt of a negative rational");
    if (!is_square(q.num())) return std::nullopt;
    const SqrtResult den = int_sqrt(q.den());
    if (!den.exact) return std::nullopt;
    return Rational(int_sqrt(q.num()).root, den.root);
}

NormalizedTriple normalize_triple(const Rational& a, const Rational& b, const Rational& c) {
    if (a.sign() <= 0 || b.sign() <= 0 || c.sign() <= 0)
        throw DomainError("normalize_triple needs positive values");
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.den().get_mpz_t(), b.den().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    std::array<Integer, 3> sides{a.num() * (l / a.den()), b.num() * (l / b.den()),
                                 c.num() * (l / c.den())};
    Integer g = gcd(gcd(sides[0], sides[1]), sides[2]);
    for (auto& s : sides) s /= g;
    return {std::move(sides), Rational(g, l)};
}

}  // namespace ratmed
