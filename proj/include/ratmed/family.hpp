#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ratmed/exact.hpp"
#include "ratmed/triangle.hpp"

namespace ratmed {

/// The n-th Heron triangle with rational a- and b-medians built from the
/// canonical Somos-5 pair (S, T).
struct FamilyTriangle {
    long n = 0;
    Integer a, b, c;
    Rational k, l;
    Integer area;
    Rational s, s_minus_a, s_minus_b, s_minus_c;

    Triangle triangle() const { return Triangle(a, b, c); }
};

/// The three signed Somos products behind the side formulas:
///
///   x1 = S[n+1] S[n+2]^3 S[n+3] T[n+2]
///   x2 = S[n]^2 S[n+1] T[n+3] T[n+4]^2
///   x3 = T[n+1] T[n+2]^3 T[n+3] S[n+2]
///
/// with a = |x1 + x2|, b = |x2 - x3|, c = |x1 - x3|. For the signed sides
/// (x1 + x2, x2 - x3, x1 - x3) the Heron factors are exactly
///   s = x1 + x2 - x3 = -S[n+3] S[n+4]^2 T[n]^2 T[n+1],  s - a = -x3,
///   s - b = x1,  s - c = x2.
struct FamilyProducts {
    Integer x1, x2, x3;

    Integer signed_s() const { return x1 + x2 - x3; }
};

/// Throws DomainError for n < 1.
FamilyProducts family_products(long n);

/// Throws DomainError for n < 1. The gcd of the raw sides is divided out
/// (k, l scaled by 1/g and the area by 1/g^2); it is 1 for every n checked.
FamilyTriangle family_triangle(long n);

/// The gcd of the raw Somos-product sides before normalization.
Integer family_raw_gcd(long n);

struct ConjecturalSchubert {
    Rational m_a;
    Rational m_b;
};

/// M_a = -S[n+1] S[n+2]^2 T[n] / (S[n] T[n+1] T[n+2]^2) and
/// M_b = S[n+1] S[n+4] T[n+1] T[n+4] / (S[n+2] S[n+3] T[n+2] T[n+3]).
/// Throws DomainError for n < 1 and ZeroDivisionError naming the Somos
/// index of a vanishing denominator term.
ConjecturalSchubert schubert_conjectural(long n);

/// The geometric Schubert triples of a family triangle: around the a-median
/// k of (a, b, c), and around the b-median l using the relabelling
/// (b, c, a). M_b of `schubert_conjectural` refers to the second one.
std::pair<SchubertTriple, SchubertTriple> schubert_pair(const FamilyTriangle& ft);

/// Factorizations of the four Heron quantities and the area.
struct FactorRow {
    Factorization s;
    Factorization s_minus_a;
    Factorization s_minus_b;
    Factorization s_minus_c;
    Factorization area;
};

/// Row n of the family factor table. Columns follow the signed sides of
/// `FamilyProducts`, i.e. |x1 + x2 - x3|, |x3|, |x1|, |x2|, area. For some n
/// this is a permutation of the geometric (s, s-a, s-b, s-c) of the
/// unsigned triangle. Throws DomainError for n < 1.
FactorRow factor_table_row(long n);

/// Factorizations of s, s-a, s-b, s-c and the area of an integer Heron
/// triangle in geometric order. Throws DomainError if a side is not an
/// integer or the area is irrational.
FactorRow factor_heron_quantities(const Triangle& t);

struct FamilyReport {
    long n = 0;
    bool gcd_one = false;
    bool heron_identity = false;
    bool k_identity = false;
    bool l_identity = false;
    bool third_median_irrational = false;
    bool constraint_pair_exists = false;
    Rational m_sq;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

/// Re-derives every claim about family triangle n from its sides.
FamilyReport verify_family(long n);

}  // namespace ratmed
