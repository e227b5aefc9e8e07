#pragma once

#include <array>
#include <optional>
#include <utility>

#include "ratmed/exact.hpp"

namespace ratmed {

/// Ordered positive sides (a, b, c) satisfying the strict triangle
/// inequalities. Order matters: the medians k, l, m bisect a, b, c.
class Triangle {
public:
    /// Throws DomainError for non-positive sides or a degenerate/impossible
    /// triple.
    Triangle(Rational a, Rational b, Rational c);

    const Rational& a() const { return sides_[0]; }
    const Rational& b() const { return sides_[1]; }
    const Rational& c() const { return sides_[2]; }
    const std::array<Rational, 3>& sides() const { return sides_; }

    Rational semiperimeter() const { return (sides_[0] + sides_[1] + sides_[2]) / 2; }

    /// The same triangle with sides relabelled (b, c, a): the old b-median
    /// becomes the new a-median.
    Triangle rotated() const { return Triangle(sides_[1], sides_[2], sides_[0]); }

    friend bool operator==(const Triangle&, const Triangle&) = default;

private:
    std::array<Rational, 3> sides_;
};

struct MedianData {
    Rational k_sq;
    Rational l_sq;
    Rational m_sq;
    std::optional<Rational> k;
    std::optional<Rational> l;
    std::optional<Rational> m;
};

/// Cotangents of the half-angles around the a-median: `m` and `p` for the
/// two angles the median makes with sides b and c at their common vertex,
/// `x` for the angle between the median and side a at its foot.
struct SchubertTriple {
    Rational m;
    Rational p;
    Rational x;

    friend bool operator==(const SchubertTriple&, const SchubertTriple&) = default;
};

/// s(s-a)(s-b)(s-c).
Rational heron_area_sq(const Triangle& t);

/// The area when it is rational.
std::optional<Rational> heron_area(const Triangle& t);

MedianData medians(const Triangle& t);

/// Euclid's formula scaled by tau. Throws DomainError unless m > n >= 1 and
/// tau >= 1.
Triangle pythagorean(const Integer& m, const Integer& n, const Integer& tau);

/// Rational point ((1 - t^2) / (1 + t^2), 2t / (1 + t^2)) of the unit circle.
std::pair<Rational, Rational> circle_point(const Rational& t);

struct HeronConstruction {
    Triangle triangle;
    Rational area;
};

/// Brahmagupta's two-right-triangle construction with area r * c. Throws
/// DomainError for non-positive input, r^2 = pq, or sides that do not form a
/// triangle.
HeronConstruction brahmagupta(const Rational& p, const Rational& q, const Rational& r);

/// 2MP(X^2 - 1) + MX(P^2 - 1) - PX(M^2 - 1). Throws DomainError on a zero
/// coordinate.
Rational schubert_residual(const SchubertTriple& s);

/// The triple attached to the a-median `k` of a triangle with rational area.
/// Throws DomainError if `k` or `area` do not belong to `t` or a denominator
/// vanishes.
SchubertTriple schubert_from_triangle(const Triangle& t, const Rational& k, const Rational& area);

struct SideRatios {
    Rational a_over_c;
    Rational b_over_c;

    friend bool operator==(const SideRatios&, const SideRatios&) = default;
};

/// Side ratios from a triple. P + 1/P never vanishes for nonzero rational P,
/// so the only failure is a zero coordinate (DomainError).
SideRatios side_ratios_from_schubert(const SchubertTriple& s);

/// True when the triple comes from a genuine triangle: all coordinates
/// positive, X < M and P X > 1 (the two base angles are then positive).
bool is_geometric(const SchubertTriple& s);

/// The first geometric triple reachable through the surface symmetries
/// (full reciprocal R, minus-reciprocal N_M, N_P, N_X), searched as words of
/// length 0..3 in the order id; R, N_M, N_P, N_X; then pairs and triples of
/// distinct generators in lexicographic order. Throws DomainError for a zero
/// coordinate, a point off the surface, or when no geometric triple is
/// reachable (e.g. the degenerate point (1, 1, 1)).
SchubertTriple schubert_normalize(const SchubertTriple& s);

struct SchubertTriangle {
    Triangle triangle;
    Rational k;
    Rational area;
};

/// Rebuilds (triangle, a-median, area) with c = scale. Side ratios come from
/// the triple; k and area solve the M and X equations of the
/// area/median/side relations (falling back to another pair when that 2x2
/// system is singular) and are checked against the remaining one.
/// Throws DomainError if the ratios violate the triangle inequalities and
/// InvariantViolation if the equations disagree (the triple was off-surface).
SchubertTriangle triangle_from_schubert(const SchubertTriple& s, const Rational& scale);

}  // namespace ratmed
