#include "ratmed/triangle.hpp"

#include <functional>
#include <string>
#include <vector>

#include "ratmed/error.hpp"

namespace ratmed {

Triangle::Triangle(Rational a, Rational b, Rational c) : sides_{std::move(a), std::move(b), std::move(c)} {
    const auto& [x, y, z] = sides_;
    if (x.sign() <= 0 || y.sign() <= 0 || z.sign() <= 0)
        throw DomainError("triangle sides must be positive");
    if (!(x < y + z && y < z + x && z < x + y))
        throw DomainError("sides (" + x.to_string() + ", " + y.to_string() + ", " + z.to_string() +
                          ") violate the strict triangle inequality");
}

Rational heron_area_sq(const Triangle& t) {
    const Rational s = t.semiperimeter();
    return s * (s - t.a()) * (s - t.b()) * (s - t.c());
}

std::optional<Rational> heron_area(const Triangle& t) { return rat_sqrt(heron_area_sq(t)); }

MedianData medians(const Triangle& t) {
    const Rational a2 = square(t.a());
    const Rational b2 = square(t.b());
    const Rational c2 = square(t.c());
    MedianData d;
    d.k_sq = (2 * b2 + 2 * c2 - a2) / 4;
    d.l_sq = (2 * c2 + 2 * a2 - b2) / 4;
    d.m_sq = (2 * a2 + 2 * b2 - c2) / 4;
    d.k = rat_sqrt(d.k_sq);
    d.l = rat_sqrt(d.l_sq);
    d.m = rat_sqrt(d.m_sq);
    return d;
}

Triangle pythagorean(const Integer& m, const Integer& n, const Integer& tau) {
    if (n < 1 || m <= n) throw DomainError("pythagorean needs m > n >= 1");
    if (tau < 1) throw DomainError("pythagorean needs tau >= 1");
    const Integer m2 = m * m;
    const Integer n2 = n * n;
    return Triangle(Integer(tau * (m2 - n2)), Integer(2 * tau * m * n), Integer(tau * (m2 + n2)));
}

std::pair<Rational, Rational> circle_point(const Rational& t) {
    const Rational t2 = square(t);
    const Rational den = 1 + t2;
    return {(1 - t2) / den, 2 * t / den};
}

HeronConstruction brahmagupta(const Rational& p, const Rational& q, const Rational& r) {
    if (p.sign() <= 0 || q.sign() <= 0 || r.sign() <= 0)
        throw DomainError("brahmagupta needs positive p, q, r");
    const Rational r2 = square(r);
    if (r2 == p * q) throw DomainError("brahmagupta is degenerate when r^2 = pq");
    const Rational a = (square(p) + r2) / p;
    const Rational b = (square(q) + r2) / q;
    const Rational c = (p + q) * (r2 - p * q).abs() / (p * q);
    return {Triangle(a, b, c), r * c};
}

Rational schubert_residual(const SchubertTriple& s) {
    if (s.m.is_zero() || s.p.is_zero() || s.x.is_zero())
        throw DomainError("Schubert coordinates must be nonzero");
    const Rational& m = s.m;
    const Rational& p = s.p;
    const Rational& x = s.x;
    return 2 * m * p * (square(x) - 1) + m * x * (square(p) - 1) - p * x * (square(m) - 1);
}

SchubertTriple schubert_from_triangle(const Triangle& t, const Rational& k, const Rational& area) {
    if (k.sign() <= 0 || square(k) != medians(t).k_sq)
        throw DomainError("k = " + k.to_string() + " is not the a-median of the triangle");
    if (area.sign() <= 0 || square(area) != heron_area_sq(t))
        throw DomainError("area = " + area.to_string() + " is not the area of the triangle");
    const Rational &a = t.a(), &b = t.b(), &c = t.c();
    const Rational a2 = square(a), b2 = square(b), c2 = square(c);
    const Rational den_m = 4 * b * k + a2 - 3 * b2 - c2;
    const Rational den_p = 4 * c * k + a2 - b2 - 3 * c2;
    const Rational den_x = 2 * a * k - b2 + c2;
    if (den_m.is_zero() || den_p.is_zero() || den_x.is_zero())
        throw DomainError("degenerate configuration: a Schubert denominator vanishes");
    const Rational four_area = 4 * area;
    return {four_area / den_m, four_area / den_p, four_area / den_x};
}

SideRatios side_ratios_from_schubert(const SchubertTriple& s) {
    if (s.m.is_zero() || s.p.is_zero() || s.x.is_zero())
        throw DomainError("Schubert coordinates must be nonzero");
    const Rational pp = s.p + s.p.inverse();
    return {2 * (s.x + s.x.inverse()) / pp, (s.m + s.m.inverse()) / pp};
}

bool is_geometric(const SchubertTriple& s) {
    return s.m.sign() > 0 && s.p.sign() > 0 && s.x.sign() > 0 && s.x < s.m && s.p * s.x > 1;
}

SchubertTriple schubert_normalize(const SchubertTriple& s) {
    if (!schubert_residual(s).is_zero())
        throw DomainError("schubert_normalize needs a point on the Schubert surface");

    using Move = std::function<void(SchubertTriple&)>;
    const std::vector<Move> generators = {
        [](SchubertTriple& v) {
            v.m = v.m.inverse();
            v.p = v.p.inverse();
            v.x = v.x.inverse();
        },
        [](SchubertTriple& v) { v.m = -v.m.inverse(); },
        [](SchubertTriple& v) { v.p = -v.p.inverse(); },
        [](SchubertTriple& v) { v.x = -v.x.inverse(); },
    };
    // Each generator is an involution and they commute, so words of distinct
    // generators in increasing order cover all 16 reachable elements.
    const std::size_t g = generators.size();
    std::vector<std::vector<std::size_t>> words = {{}};
    for (std::size_t i = 0; i < g; ++i) words.push_back({i});
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = i + 1; j < g; ++j) words.push_back({i, j});
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = i + 1; j < g; ++j)
            for (std::size_t k = j + 1; k < g; ++k) words.push_back({i, j, k});
    words.push_back({0, 1, 2, 3});

    for (const auto& word : words) {
        SchubertTriple v = s;
        for (std::size_t idx : word) generators[idx](v);
        if (is_geometric(v)) return v;
    }
    throw DomainError("no geometric triple is reachable from (" + s.m.to_string() + ", " +
                      s.p.to_string() + ", " + s.x.to_string() + ")");
}

SchubertTriangle triangle_from_schubert(const SchubertTriple& s, const Rational& scale) {
    if (scale.sign() <= 0) throw DomainError("triangle_from_schubert needs a positive scale");
    const SideRatios ratios = side_ratios_from_schubert(s);
    const Rational& c = scale;
    Triangle tri(ratios.a_over_c * c, ratios.b_over_c * c, c);
    const Rational& a = tri.a();
    const Rational& b = tri.b();
    const Rational a2 = square(a), b2 = square(b), c2 = square(c);

    // Each relation reads  slope * k - 4 * area = offset.
    struct Linear {
        Rational slope;
        Rational offset;
    };
    const Linear eq_m{4 * b * s.m, -s.m * (a2 - 3 * b2 - c2)};
    const Linear eq_p{4 * c * s.p, -s.p * (a2 - b2 - 3 * c2)};
    const Linear eq_x{2 * a * s.x, -s.x * (c2 - b2)};

    const std::pair<const Linear*, const Linear*> pairs[] = {{&eq_m, &eq_x}, {&eq_m, &eq_p}, {&eq_p, &eq_x}};
    for (const auto& [e1, e2] : pairs) {
        const Rational det = e1->slope - e2->slope;
        if (det.is_zero()) continue;
        Rational k = (e1->offset - e2->offset) / det;
        Rational area = (e1->slope * k - e1->offset) / 4;
        for (const Linear* e : {&eq_m, &eq_p, &eq_x}) {
            if (e->slope * k - 4 * area != e->offset)
                throw InvariantViolation("Schubert relations are inconsistent; the triple is off the surface");
        }
        if (k.sign() <= 0 || area.sign() <= 0 || square(k) != medians(tri).k_sq ||
            square(area) != heron_area_sq(tri))
            throw InvariantViolation("recovered median/area do not match the rebuilt triangle");
        return {std::move(tri), std::move(k), std::move(area)};
    }
    throw InvariantViolation("every pair of Schubert relations is singular");
}

}  // namespace ratmed
