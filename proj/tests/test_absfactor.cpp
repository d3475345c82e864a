#include "doctest.h"

#include "surfparam/absfactor.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

#include <algorithm>

using namespace surfparam;
using testutil::p2;

TEST_CASE("absolute factor counts") {
    // conic, absolutely irreducible
    CHECK(count_absolute_factors_bivariate(p2("x^2 + y^2 + 1")) == 1);
    // two conjugate lines (x + iy)(x - iy)
    CHECK(count_absolute_factors_bivariate(p2("x^2 + y^2")) == 2);
    // (x - sqrt2 y)(x + sqrt2 y)
    CHECK(count_absolute_factors_bivariate(p2("x^2 - 2*y^2")) == 2);
    // smooth cubic chart: absolutely irreducible
    CHECK(count_absolute_factors_bivariate(p2("x^3 + y^3 + 1")) == 1);
    // three conjugate lines x^3 - 2y^3
    CHECK(count_absolute_factors_bivariate(p2("x^3 - 2*y^3")) == 3);
    // rational split is also counted (the caller restricts to Q-irreducible inputs)
    CHECK(count_absolute_factors_bivariate(p2("x^2 - y^2")) == 2);

    CHECK_THROWS_AS(count_absolute_factors_bivariate(p2("x^2")), domain_error);
    CHECK_THROWS_AS(count_absolute_factors_bivariate(p2("x^2 * y + x*y")), domain_error);
}

TEST_CASE("mod-p factor counts never exceed the absolute count") {
    const uint64_t primes[] = {101, 103, 107, 109, 113};
    const char* samples[] = {"x^2 + y^2", "x^2 - 2*y^2", "x^3 + y^3 + 1", "x^3 - 2*y^3",
                             "x^2 + y^2 + 1"};
    for (const char* s : samples) {
        MultiPoly f = p2(s);
        int count = count_absolute_factors_bivariate(f);
        int best = 0;
        for (uint64_t p : primes) {
            auto c = oracles::fp_bivariate_factor_count(f, p);
            if (!c) continue;
            CHECK(*c <= count); // F_p-irreducible factors merge conjugate absolute ones
            best = std::max(best, *c);
        }
        // on this curated corpus some prime realizes the full split
        CHECK(best == count);
    }
}
