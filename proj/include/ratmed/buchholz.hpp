#pragma once

#include <array>

#include "ratmed/exact.hpp"
#include "ratmed/triangle.hpp"

namespace ratmed {

/// A (theta, phi) point of the two-rational-median parametrization.
struct ParamPoint {
    Rational theta;
    Rational phi;

    friend bool operator==(const ParamPoint&, const ParamPoint&) = default;
};

/// tau times the three cubic side polynomials, in order (a, b, c). No
/// positivity filtering; callers decide what to do with degenerate output.
std::array<Rational, 3> buchholz_sides(const ParamPoint& p, const Rational& tau);

/// 0 < theta < 1, 0 < phi < 1 and phi + 2 theta > 1.
bool constraints_ok(const ParamPoint& p);

/// The four parameter points of a triangle whose a- and b-medians are k and
/// l, in sign order (+,+), (+,-), (-,+), (-,-) where the first sign goes with
/// l in theta and the second with k in phi. Throws DomainError if k or l is
/// not the corresponding median.
std::array<ParamPoint, 4> params_from_triangle(const Triangle& t, const Rational& k, const Rational& l);

/// theta^2 phi - theta phi^2 + theta phi + 2 theta - 2 phi - 1.
Rational c4_residual(const ParamPoint& p);

/// y^2 + xy - x^3 - x^2 + 2x.
Rational e_curve_residual(const Rational& x, const Rational& y);

/// True when `sides` is a positive multiple of (t.a(), t.b(), t.c()).
bool proportional_in_order(const std::array<Rational, 3>& sides, const Triangle& t);

/// True when some permutation of `sides` is a positive multiple of t's sides.
bool proportional_up_to_order(const std::array<Rational, 3>& sides, const Triangle& t);

}  // namespace ratmed
