#include <doctest.h>

#include "oracles.hpp"
#include "properties.hpp"
#include "ratmed/error.hpp"
#include "ratmed/somos.hpp"

using namespace ratmed;

namespace {

std::vector<Rational> ints(std::initializer_list<long> v) {
    std::vector<Rational> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

}  // namespace

TEST_SUITE("somos") {
    TEST_CASE("forward extension") {
        const SomosSequence ones(0, ints({1, 1, 1, 1, 1}));
        const SomosSequence s = somos5_extend(ones, 11);
        REQUIRE(s.size() == 16);
        for (std::size_t i = 0; i < testing::kSomosOriginal.size(); ++i)
            CHECK(s.terms()[i] == Rational(testing::kSomosOriginal[i]));

        const SomosSequence t = somos5_extend(SomosSequence(1, ints({1, -1, 1, 1, -7})), 4);
        CHECK(t.at(6) == 8);
        CHECK(t.at(7) == -1);
        CHECK(t.at(8) == -57);
        CHECK(t.at(9) == 391);

        const SomosSequence same = somos5_extend(ones, 0);
        CHECK(same.terms() == ones.terms());
        CHECK(same.seed() == ones.seed());
    }

    TEST_CASE("forward zero divisor names its index") {
        const SomosSequence z(3, ints({0, 1, 1, 1, 1}));
        try {
            somos5_extend(z, 1);
            FAIL("expected a zero division");
        } catch (const ZeroDivisionError& e) {
            CHECK(e.index() == 3);
        }
    }

    TEST_CASE("backward extension") {
        const SomosSequence s = somos5_backward(canonical_S_seed(), 1);
        CHECK(s.base_index() == -1);
        CHECK(s.at(-1) == 1);
        CHECK(s.at(0) == 1);

        const SomosSequence t = somos5_backward(canonical_T_seed(), 4);
        CHECK(t.at(-1) == -1);
        for (long n = t.base_index(); n + 5 <= t.last_index(); ++n)
            CHECK(t.at(n + 5) * t.at(n) == t.at(n + 4) * t.at(n + 1) + t.at(n + 3) * t.at(n + 2));
        try {
            somos5_backward(canonical_T_seed(), 5);
            FAIL("expected a zero division");
        } catch (const ZeroDivisionError& e) {
            CHECK(e.index() == 0);
        }
        const SomosSequence same = somos5_backward(canonical_S_seed(), 0);
        CHECK(same.terms() == canonical_S_seed().terms());
    }

    TEST_CASE("window validation") {
        CHECK_THROWS_AS(SomosSequence(0, ints({1, 1, 1, 1})), DomainError);
        CHECK_THROWS_AS(SomosSequence(0, ints({1, 1, 1, 1, 1, 3})), DomainError);
        CHECK_NOTHROW(SomosSequence(0, ints({1, 1, 1, 1, 1, 2})));
        CHECK_THROWS_AS(canonical_S_seed().at(5), DomainError);
    }

    TEST_CASE("canonical sequences") {
        for (std::size_t i = 0; i < testing::kSPrefix.size(); ++i) {
            CHECK(canonical_S(static_cast<long>(i)) == testing::kSPrefix[i]);
            CHECK(canonical_T(static_cast<long>(i)) == testing::kTPrefix[i]);
        }
        CHECK(canonical_S(9) == 274);
        CHECK(canonical_T(0) == 0);
        CHECK(canonical_T(9) == 391);
        CHECK_THROWS_AS(canonical_S(-1), DomainError);
        // S is the all-ones sequence shifted by two places.
        const SomosSequence ones = somos5_extend(SomosSequence(0, ints({1, 1, 1, 1, 1})), 60);
        for (long n = 0; n <= 60; ++n) CHECK(canonical_S(n) == ones.at(n + 2).num());
    }

    TEST_CASE("integrality through index 200") {
        const SomosSequence s = canonical_S_sequence(200);
        const SomosSequence t = canonical_T_sequence(200);
        for (long n = 0; n <= 200; ++n) {
            CHECK(s.at(n).is_integer());
            CHECK(t.at(n).is_integer());
            CHECK(s.at(n) == Rational(canonical_S(n)));
        }
    }

    TEST_CASE("ratio_u") {
        const SomosSequence s = canonical_S_sequence(12);
        const SomosSequence t = canonical_T_sequence(12);
        CHECK(ratio_u(s, 3) == Rational(Integer(3), Integer(2)));
        CHECK(ratio_u(t, 3) == -1);
        CHECK(ratio_u(t, 4) == 7);
        CHECK(ratio_u(t, 2) == 0);
        CHECK_THROWS_AS(ratio_u(s, 1), DomainError);
        const SomosSequence z(0, ints({1, 1, 0, 1, 1}));
        try {
            ratio_u(z, 3);
            FAIL("expected a zero division");
        } catch (const ZeroDivisionError& e) {
            CHECK(e.index() == 2);
        }
    }

    TEST_CASE("property: scaling symmetry") {
        const auto r = testing::prop_somos_scaling(5, 300);
        INFO(r.summary());
        CHECK(r.ok());
    }

    TEST_CASE("property: backward then forward") {
        const auto r = testing::prop_somos_backward_forward(6, 300);
        INFO(r.summary());
        CHECK(r.ok());
    }
}
