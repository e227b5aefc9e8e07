#include "ratmed/qrt.hpp"

#include <cmath>
#include <string>

#include "ratmed/error.hpp"

namespace ratmed {

namespace {

void require_nonzero(const PlanePoint& p, const char* op) {
    if (p.u.is_zero() || p.v.is_zero())
        throw DomainError(std::string(op) + " needs nonzero coordinates, got (" + p.u.to_string() +
                          ", " + p.v.to_string() + ")");
}

// With u = a/b, v = c/d: J * abcd = a^2cd + abc^2 + b^2cd + abd^2 + b^2d^2.
// Working on integer numerators avoids reducing every intermediate rational.
Integer j_numerator(const Integer& a, const Integer& b, const Integer& c, const Integer& d) {
    const Integer ac = a * c;
    const Integer bd = b * d;
    return ac * (a * d + b * c) + bd * (b * c + a * d + bd);
}

}  // namespace

PlanePoint qrt_apply(const PlanePoint& p) {
    require_nonzero(p, "qrt_apply");
    return {p.v, (1 + p.v.inverse()) / p.u};
}

PlanePoint qrt_inverse(const PlanePoint& p) {
    require_nonzero(p, "qrt_inverse");
    PlanePoint out{(1 + p.u.inverse()) / p.v, p.u};
    if (out.u.is_zero())
        throw DomainError("qrt_inverse of a point with U = -1 lands on U = 0");
    return out;
}

Rational invariant_J(const PlanePoint& p) {
    require_nonzero(p, "invariant_J");
    const Integer &a = p.u.num(), &b = p.u.den(), &c = p.v.num(), &d = p.v.den();
    return Rational(j_numerator(a, b, c, d), a * b * c * d);
}

Rational curve_residual(const PlanePoint& p) {
    // u^2 v + u v^2 + u + v - 5uv + 1, scaled by b^2 d^2.
    const Integer &a = p.u.num(), &b = p.u.den(), &c = p.v.num(), &d = p.v.den();
    const Integer bd = b * d;
    Integer n = a * c * (a * d + b * c) + bd * (a * d + b * c) - 5 * a * c * bd + bd * bd;
    if (n == 0) return Rational();
    return Rational(std::move(n), bd * bd);
}

std::vector<PlanePoint> orbit(const PlanePoint& start, std::size_t steps) {
    require_nonzero(start, "orbit");
    std::vector<PlanePoint> out;
    out.reserve(steps + 1);
    out.push_back(start);
    for (std::size_t i = 1; i <= steps; ++i) {
        PlanePoint next = qrt_apply(out.back());
        if (next.v.is_zero())
            throw ZeroDivisionError("orbit reached a zero coordinate", static_cast<long>(i));
        out.push_back(std::move(next));
    }
    return out;
}

std::vector<PlanePoint> orbit_from_somos(const SomosSequence& seq, long n_from, long n_to) {
    std::vector<PlanePoint> out;
    if (n_to < n_from) return out;
    out.reserve(static_cast<std::size_t>(n_to - n_from + 1));
    Rational prev = ratio_u(seq, n_from);
    for (long n = n_from; n <= n_to; ++n) {
        Rational next = ratio_u(seq, n + 1);
        out.push_back({prev, next});
        prev = std::move(next);
    }
    return out;
}

int quadrant(const PlanePoint& p) {
    const int su = p.u.sign();
    const int sv = p.v.sign();
    if (su == 0 || sv == 0) return 0;
    if (su > 0) return sv > 0 ? 1 : 4;
    return sv > 0 ? 2 : 3;
}

std::vector<double> curve_v_at(const Rational& u) {
    // Residual as a quadratic in V: U V^2 + (U^2 - 5U + 1) V + (U + 1).
    const Rational qa = u;
    const Rational qb = u * u - 5 * u + 1;
    const Rational qc = u + 1;
    if (qa.is_zero()) return {(-qc / qb).to_double()};
    const Rational disc = qb * qb - 4 * qa * qc;
    if (disc.sign() < 0) return {};
    std::vector<double> roots;
    if (auto exact = rat_sqrt(disc)) {
        roots.push_back(((-qb - *exact) / (2 * qa)).to_double());
        if (!exact->is_zero()) roots.push_back(((-qb + *exact) / (2 * qa)).to_double());
    } else {
        const double root = std::sqrt(disc.to_double());
        const double b = qb.to_double();
        const double a2 = 2 * qa.to_double();
        roots = {(-b - root) / a2, (-b + root) / a2};
    }
    if (roots.size() == 2 && roots[0] > roots[1]) std::swap(roots[0], roots[1]);
    return roots;
}

}  // namespace ratmed
