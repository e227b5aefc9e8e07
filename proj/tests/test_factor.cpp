#include <doctest.h>

#include "oracles.hpp"
#include "properties.hpp"
#include "ratmed/error.hpp"
#include "ratmed/exact.hpp"

using namespace ratmed;

TEST_SUITE("factor") {
    TEST_CASE("factorize examples") {
        CHECK(factorize(420).to_string() == "2^2·3·5·7");
        CHECK(factorize(1).empty());
        CHECK(factorize(1).to_string() == "1");
        CHECK(factorize(Integer("2137147184560080")) == Factorization::parse("2^4*3*5*7*11*17*19*23*37^2*83*137"));
        CHECK_THROWS_AS(factorize(0), DomainError);
        CHECK_THROWS_AS(factorize(-6), DomainError);
    }

    TEST_CASE("hard inputs") {
        // Square of a prime above the trial-division bound.
        CHECK(factorize(Integer(1000003) * 1000003).to_string() == "1000003^2");
        // Product of two 40-bit primes.
        const Integer p("1099511627791"), q("1099511628401");
        REQUIRE(is_prime(p));
        REQUIRE(is_prime(q));
        CHECK(factorize(p * q) == Factorization({{p, 1}, {q, 1}}));
        // Carmichael numbers and strong pseudoprimes to small bases.
        CHECK_FALSE(is_prime(561));
        CHECK_FALSE(is_prime(Integer("3215031751")));
        CHECK_FALSE(is_prime(Integer("3825123056546413051")));
        CHECK(is_prime(Integer("18446744073709551557")));
        CHECK(is_prime(2));
        CHECK_FALSE(is_prime(1));
        CHECK_FALSE(is_prime(0));
        CHECK_FALSE(is_prime(-7));
    }

    TEST_CASE("factorization parse and validation") {
        CHECK(Factorization::parse("2^2·3·5·7").value() == 420);
        CHECK(Factorization::parse("1").empty());
        CHECK_THROWS_AS(Factorization::parse("4"), DomainError);
        CHECK_THROWS_AS(Factorization::parse("3*2"), DomainError);
        CHECK_THROWS_AS(Factorization::parse("2^0"), DomainError);
        CHECK_THROWS_AS(Factorization::parse("2^^3"), DomainError);
    }

    TEST_CASE("table cells reassemble and refactor") {
        for (const auto& row : testing::kFamilyFactors)
            for (const char* cell : {row.s, row.s_minus_a, row.s_minus_b, row.s_minus_c, row.area}) {
                const Factorization f = Factorization::parse(cell);
                CHECK(factorize(f.value()) == f);
            }
    }

    TEST_CASE("property: factorization reassembly") {
        const auto r = testing::prop_factorization(4, 10000);
        INFO(r.summary());
        CHECK(r.ok());
    }
}
