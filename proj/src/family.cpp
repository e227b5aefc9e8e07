#include "ratmed/family.hpp"

#include "ratmed/buchholz.hpp"
#include "ratmed/error.hpp"
#include "ratmed/somos.hpp"

namespace ratmed {

namespace {

void require_index(long n) {
    if (n < 1) throw DomainError("family index must be >= 1, got " + std::to_string(n));
}

Integer pow(const Integer& x, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), x.get_mpz_t(), e);
    return r;
}

struct Window {
    std::array<Integer, 5> s;
    std::array<Integer, 5> t;
};

Window window(long n) {
    Window w;
    for (long i = 0; i < 5; ++i) {
        w.s[i] = canonical_S(n + i);
        w.t[i] = canonical_T(n + i);
    }
    return w;
}

Factorization factor_abs(const Integer& x) {
    if (x == 0) throw InvariantViolation("a Heron factor vanished");
    return factorize(abs(x));
}

}  // namespace

FamilyProducts family_products(long n) {
    require_index(n);
    const auto [s, t] = window(n);
    return {s[1] * pow(s[2], 3) * s[3] * t[2], s[0] * s[0] * s[1] * t[3] * t[4] * t[4],
            t[1] * pow(t[2], 3) * t[3] * s[2]};
}

Integer family_raw_gcd(long n) {
    const FamilyProducts x = family_products(n);
    return gcd(gcd(Integer(x.x1 + x.x2), Integer(x.x2 - x.x3)), Integer(x.x1 - x.x3));
}

FamilyTriangle family_triangle(long n) {
    const FamilyProducts x = family_products(n);
    const auto [s, t] = window(n);
    FamilyTriangle ft;
    ft.n = n;
    ft.a = abs(x.x1 + x.x2);
    ft.b = abs(x.x2 - x.x3);
    ft.c = abs(x.x1 - x.x3);
    ft.k = Rational(abs(s[4] * t[4] * (t[0] * t[1] * t[1] * t[2] - s[0] * s[1] * s[1] * s[2])), 2);
    ft.l = Rational(abs(s[0] * t[0] * (t[2] * t[3] * t[3] * t[4] - s[2] * s[3] * s[3] * s[4])), 2);
    ft.area = abs(s[0] * s[1] * s[2] * s[2] * s[3] * s[4] * t[0] * t[1] * t[2] * t[2] * t[3] * t[4]);

    const Integer g = gcd(gcd(ft.a, ft.b), ft.c);
    if (g != 1) {
        ft.a /= g;
        ft.b /= g;
        ft.c /= g;
        ft.k /= g;
        ft.l /= g;
        const Rational area = Rational(ft.area) / Rational(Integer(g * g));
        if (!area.is_integer()) throw InvariantViolation("rescaled family area is not an integer");
        ft.area = area.num();
    }
    ft.s = Rational(Integer(ft.a + ft.b + ft.c), 2);
    ft.s_minus_a = ft.s - ft.a;
    ft.s_minus_b = ft.s - ft.b;
    ft.s_minus_c = ft.s - ft.c;
    return ft;
}

ConjecturalSchubert schubert_conjectural(long n) {
    require_index(n);
    const auto [s, t] = window(n);
    auto check = [n](const Integer& v, long offset) {
        if (v == 0) throw ZeroDivisionError("conjectural Schubert denominator vanishes", n + offset);
    };
    check(s[0], 0);
    check(t[1], 1);
    check(t[2], 2);
    check(s[2], 2);
    check(s[3], 3);
    check(t[3], 3);
    ConjecturalSchubert out;
    out.m_a = Rational(Integer(-s[1] * s[2] * s[2] * t[0]), Integer(s[0] * t[1] * t[2] * t[2]));
    out.m_b = Rational(Integer(s[1] * s[4] * t[1] * t[4]), Integer(s[2] * s[3] * t[2] * t[3]));
    return out;
}

std::pair<SchubertTriple, SchubertTriple> schubert_pair(const FamilyTriangle& ft) {
    const Triangle tri = ft.triangle();
    return {schubert_from_triangle(tri, ft.k, ft.area), schubert_from_triangle(tri.rotated(), ft.l, ft.area)};
}

FactorRow factor_table_row(long n) {
    const FamilyProducts x = family_products(n);
    const FamilyTriangle ft = family_triangle(n);
    return {factor_abs(x.signed_s()), factor_abs(x.x3), factor_abs(x.x1), factor_abs(x.x2),
            factor_abs(ft.area)};
}

FactorRow factor_heron_quantities(const Triangle& t) {
    for (const auto& side : t.sides())
        if (!side.is_integer()) throw DomainError("factor_heron_quantities needs integer sides");
    const auto area = heron_area(t);
    if (!area) throw DomainError("factor_heron_quantities needs a rational area");
    // 2s is an integer; an odd perimeter would leave s with a factor 2^-1.
    const Rational s = t.semiperimeter();
    if (!s.is_integer()) throw DomainError("semiperimeter is not an integer");
    auto f = [](const Rational& v) {
        if (!v.is_integer()) throw DomainError("Heron quantity is not an integer");
        return factor_abs(v.num());
    };
    return {f(s), f(s - t.a()), f(s - t.b()), f(s - t.c()), f(*area)};
}

FamilyReport verify_family(long n) {
    FamilyReport r;
    r.n = n;
    const FamilyTriangle ft = family_triangle(n);
    auto fail = [&r](const std::string& what) { r.failures.push_back(what); };

    r.gcd_one = family_raw_gcd(n) == 1;
    if (!r.gcd_one) fail("gcd of the raw sides is " + to_string(family_raw_gcd(n)) + ", not 1");

    const Triangle tri = ft.triangle();
    const Rational area_sq = ft.s * ft.s_minus_a * ft.s_minus_b * ft.s_minus_c;
    r.heron_identity = area_sq == Rational(Integer(ft.area * ft.area)) && heron_area_sq(tri) == area_sq;
    if (!r.heron_identity) fail("area^2 != s(s-a)(s-b)(s-c)");

    const MedianData md = medians(tri);
    r.k_identity = square(ft.k) == md.k_sq;
    if (!r.k_identity) fail("k^2 = " + square(ft.k).to_string() + " but (2b^2+2c^2-a^2)/4 = " + md.k_sq.to_string());
    r.l_identity = square(ft.l) == md.l_sq;
    if (!r.l_identity) fail("l^2 = " + square(ft.l).to_string() + " but (2c^2+2a^2-b^2)/4 = " + md.l_sq.to_string());

    r.m_sq = md.m_sq;
    r.third_median_irrational = !md.m.has_value();
    if (!r.third_median_irrational) fail("third median is rational: m = " + md.m->to_string());

    r.constraint_pair_exists = false;
    if (r.k_identity && r.l_identity) {
        for (const auto& p : params_from_triangle(tri, ft.k, ft.l)) {
            if (constraints_ok(p) && proportional_in_order(buchholz_sides(p, 1), tri)) {
                r.constraint_pair_exists = true;
                break;
            }
        }
    }
    if (!r.constraint_pair_exists) fail("no (theta, phi) pair satisfies the positivity constraints");
    return r;
}

}  // namespace ratmed
