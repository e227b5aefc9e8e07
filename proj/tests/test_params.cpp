#include <doctest.h>

#include <set>

#include "gen.hpp"
#include "properties.hpp"
#include "ratmed/buchholz.hpp"
#include "ratmed/error.hpp"
#include "ratmed/family.hpp"

using namespace ratmed;

namespace {

Rational q(const char* s) { return Rational::parse(s); }

}  // namespace

TEST_SUITE("params") {
    TEST_CASE("side polynomials") {
        CHECK(buchholz_sides({q("1/3"), q("2/5")}, 1) ==
              std::array<Rational, 3>{q("292/225"), q("204/225"), q("104/225")});
        CHECK(buchholz_sides({q("1/3"), q("2/5")}, q("225/4")) == std::array<Rational, 3>{73, 51, 26});
        CHECK(buchholz_sides({0, 0}, 1) == std::array<Rational, 3>{1, 1, 0});
    }

    TEST_CASE("constraints") {
        CHECK(constraints_ok({q("1/3"), q("2/5")}));
        CHECK_FALSE(constraints_ok({q("1/3"), q("1/4")}));
        CHECK_FALSE(constraints_ok({1, q("1/2")}));
        CHECK_FALSE(constraints_ok({q("1/2"), 0}));
        CHECK_FALSE(constraints_ok({q("1/4"), q("1/2")}));
    }

    TEST_CASE("parameter points of a triangle") {
        const auto p = params_from_triangle(Triangle(73, 51, 26), q("35/2"), q("97/2"));
        CHECK(p[0] == ParamPoint{q("1/3"), q("2/5")});
        CHECK(p[1] == ParamPoint{q("1/3"), q("-1/15")});
        CHECK(p[2] == ParamPoint{q("-24/25"), q("2/5")});
        CHECK(p[3] == ParamPoint{q("-24/25"), q("-1/15")});
        const auto s = params_from_triangle(Triangle(1241, 4368, 3673), q("7975/2"), 1657);
        CHECK(s[0] == ParamPoint{q("13/21"), q("85/91")});
        const auto s2 = params_from_triangle(Triangle(14384, 14791, 11257), 11001, q("21177/2"));
        CHECK(s2[0] == ParamPoint{q("25/56"), q("12/19")});
        CHECK_THROWS_AS(params_from_triangle(Triangle(73, 51, 26), q("97/2"), q("35/2")), DomainError);
    }

    TEST_CASE("curve residuals") {
        CHECK(c4_residual({q("1/2"), 0}) == 0);
        CHECK(c4_residual({1, 1}) == 0);
        CHECK(c4_residual({q("1/3"), q("2/5")}) == q("-227/225"));
        CHECK(e_curve_residual(0, 0) == 0);
        CHECK(e_curve_residual(2, 2) == 0);
        CHECK(e_curve_residual(1, 1) == 2);
        testing::Gen g(13);
        for (int i = 0; i < 200; ++i) {
            const Rational x = g.rational(40), y = g.rational(40);
            CHECK(e_curve_residual(x, y) == ((y + x) * y) - (((x + 1) * x - 2) * x));
            CHECK(c4_residual({x, y}) == ((x - y + 1) * y + 2) * x - 2 * y - 1);
        }
    }

    TEST_CASE("proportionality helpers") {
        const Triangle t(73, 51, 26);
        CHECK(proportional_in_order({146, 102, 52}, t));
        CHECK_FALSE(proportional_in_order({102, 146, 52}, t));
        CHECK(proportional_up_to_order({102, 146, 52}, t));
        CHECK_FALSE(proportional_in_order({-146, -102, -52}, t));
        CHECK_FALSE(proportional_up_to_order({1, 2, 3}, t));
    }

    TEST_CASE("family round-trip through the (+,+) pair") {
        const std::array<ParamPoint, 5> frozen{{{q("1/3"), q("2/5")},
                                                {q("7/128"), q("27/28")},
                                                {q("11/21"), q("3/77")},
                                                {q("48223/49247"), q("513/6655")},
                                                {q("11/581"), q("2109/2192")}}};
        for (long n = 1; n <= 10; ++n) {
            CAPTURE(n);
            const FamilyTriangle f = family_triangle(n);
            const auto pairs = params_from_triangle(f.triangle(), f.k, f.l);
            CHECK(constraints_ok(pairs[0]));
            CHECK(proportional_in_order(buchholz_sides(pairs[0], 1), f.triangle()));
            if (n <= 5) CHECK(pairs[0] == frozen[static_cast<std::size_t>(n - 1)]);
        }
    }

    TEST_CASE("family points on C4 recur with period 7") {
        std::set<long> hits;
        for (long n = 1; n <= 30; ++n) {
            const FamilyTriangle f = family_triangle(n);
            for (const auto& p : params_from_triangle(f.triangle(), f.k, f.l))
                if (c4_residual(p).is_zero()) hits.insert(n);
        }
        CHECK_FALSE(hits.empty());
        for (long n = 1; n + 7 <= 30; ++n) CHECK(hits.count(n) == hits.count(n + 7));
        std::string listing;
        for (long n : hits) listing += std::to_string(n) + " ";
        MESSAGE("n with a sign choice on C4: " << listing);
    }

    TEST_CASE("property: two rational medians") {
        const auto r = testing::prop_two_medians(14, 1000);
        INFO(r.summary());
        CHECK(r.ok());
    }
}
