#include "ratmed/buchholz.hpp"

#include <algorithm>

#include "ratmed/error.hpp"

namespace ratmed {

std::array<Rational, 3> buchholz_sides(const ParamPoint& p, const Rational& tau) {
    const Rational& t = p.theta;
    const Rational& f = p.phi;
    const Rational t2 = square(t);
    const Rational f2 = square(f);
    const Rational tf = t * f;
    const Rational t2f = t2 * f;
    const Rational tf2 = t * f2;
    const Rational a = -2 * t2f - tf2 + 2 * tf - f2 + t + 1;
    const Rational b = t2f + 2 * tf2 - t2 + 2 * tf - f + 1;
    const Rational c = t2f - tf2 + t2 + 2 * tf + f2 + t - f;
    return {tau * a, tau * b, tau * c};
}

bool constraints_ok(const ParamPoint& p) {
    return p.theta.sign() > 0 && p.theta < 1 && p.phi.sign() > 0 && p.phi < 1 && p.phi + 2 * p.theta > 1;
}

std::array<ParamPoint, 4> params_from_triangle(const Triangle& t, const Rational& k, const Rational& l) {
    const MedianData md = medians(t);
    if (k.sign() <= 0 || square(k) != md.k_sq)
        throw DomainError("k = " + k.to_string() + " is not the a-median of the triangle");
    if (l.sign() <= 0 || square(l) != md.l_sq)
        throw DomainError("l = " + l.to_string() + " is not the b-median of the triangle");
    const Rational two_s = t.a() + t.b() + t.c();
    const Rational theta_base = t.c() - t.a();
    const Rational phi_base = t.b() - t.c();
    const Rational theta_plus = (theta_base + 2 * l) / two_s;
    const Rational theta_minus = (theta_base - 2 * l) / two_s;
    const Rational phi_plus = (phi_base + 2 * k) / two_s;
    const Rational phi_minus = (phi_base - 2 * k) / two_s;
    return {ParamPoint{theta_plus, phi_plus}, ParamPoint{theta_plus, phi_minus},
            ParamPoint{theta_minus, phi_plus}, ParamPoint{theta_minus, phi_minus}};
}

Rational c4_residual(const ParamPoint& p) {
    const Rational& t = p.theta;
    const Rational& f = p.phi;
    const Rational tf = t * f;
    return tf * t - tf * f + tf + 2 * t - 2 * f - 1;
}

Rational e_curve_residual(const Rational& x, const Rational& y) {
    const Rational x2 = square(x);
    return square(y) + x * y - x2 * x - x2 + 2 * x;
}

bool proportional_in_order(const std::array<Rational, 3>& sides, const Triangle& t) {
    if (sides[0].sign() <= 0) return false;
    const Rational ratio = sides[0] / t.a();
    return sides[1] == ratio * t.b() && sides[2] == ratio * t.c();
}

bool proportional_up_to_order(const std::array<Rational, 3>& sides, const Triangle& t) {
    std::array<int, 3> idx{0, 1, 2};
    do {
        if (proportional_in_order({sides[idx[0]], sides[idx[1]], sides[idx[2]]}, t)) return true;
    } while (std::next_permutation(idx.begin(), idx.end()));
    return false;
}

}  // namespace ratmed
