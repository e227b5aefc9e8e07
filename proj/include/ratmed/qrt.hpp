#pragma once

#include <vector>

#include "ratmed/exact.hpp"
#include "ratmed/somos.hpp"

namespace ratmed {

/// A point (U, V) = (u[n], u[n+1]) of consecutive Somos-5 ratios.
struct PlanePoint {
    Rational u;
    Rational v;

    friend bool operator==(const PlanePoint&, const PlanePoint&) = default;
};

/// (U, V) -> (V, (1 + 1/V) / U). Throws DomainError on a zero coordinate.
PlanePoint qrt_apply(const PlanePoint& p);

/// (U, V) -> ((1 + 1/U) / V, U). Throws DomainError on a zero coordinate of
/// the input, or when U = -1 sends the image onto the axis U = 0.
PlanePoint qrt_inverse(const PlanePoint& p);

/// The conserved quantity U + V + 1/U + 1/V + 1/(UV).
Rational invariant_J(const PlanePoint& p);

/// U^2 V + U V^2 + U + V - 5UV + 1: zero exactly on the level set J = 5.
Rational curve_residual(const PlanePoint& p);

/// `steps` iterations of qrt_apply, starting point included. A zero
/// coordinate mid-orbit raises ZeroDivisionError whose index is the step at
/// which the bad point appeared.
std::vector<PlanePoint> orbit(const PlanePoint& start, std::size_t steps);

/// (u[n], u[n+1]) for n_from <= n <= n_to; empty when n_to < n_from.
std::vector<PlanePoint> orbit_from_somos(const SomosSequence& seq, long n_from, long n_to);

/// 1..4 for the open quadrants (counter-clockwise from U > 0, V > 0);
/// 0 for a point on an axis.
int quadrant(const PlanePoint& p);

/// Real V with curve_residual(U, V) = 0 for a fixed rational U, ascending.
/// The quadratic's discriminant is tested exactly; only the roots are floats.
std::vector<double> curve_v_at(const Rational& u);

}  // namespace ratmed
