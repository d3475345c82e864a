#include "doctest.h"

#include "surfparam/bifactor.hpp"
#include "surfparam/polyops.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace surfparam;
using testutil::p2;
using testutil::p3;

namespace {

MultiPoly reassemble(const std::vector<std::pair<MultiPoly, int>>& factors, int nvars) {
    MultiPoly r = MultiPoly::constant(nvars, Rational(1));
    for (const auto& [f, m] : factors) r = r * f.pow(static_cast<unsigned>(m));
    return r;
}

} // namespace

TEST_CASE("bivariate factorization over Q") {
    auto f1 = factor_bivariate_q(p2("x^2 - y^2"));
    REQUIRE(f1.size() == 2);
    CHECK(testutil::equal_up_to_constant(reassemble(f1, 2), p2("x^2 - y^2")));

    auto f2 = factor_bivariate_q(p2("x^2 + y^2"));
    REQUIRE(f2.size() == 1);
    CHECK(f2[0].second == 1);

    auto f3 = factor_bivariate_q(p2("(x + y)^2 * (x - y)"));
    REQUIRE(f3.size() == 2);
    CHECK(f3[0] == std::make_pair(p2("x - y"), 1));
    CHECK(f3[1] == std::make_pair(p2("x + y"), 2));

    auto f4 = factor_bivariate_q(p2("x^3 + y^3"));
    REQUIRE(f4.size() == 2);
    CHECK(testutil::equal_up_to_constant(reassemble(f4, 2), p2("x^3 + y^3")));

    // non-monic leading coefficient exercises the monicization path
    auto f5 = factor_bivariate_q(p2("(y*x + 1) * (y^2*x + y + 1)"));
    REQUIRE(f5.size() == 2);
    CHECK(testutil::equal_up_to_constant(reassemble(f5, 2), p2("(y*x + 1) * (y^2*x + y + 1)")));

    // content in x shows up as its own factors
    auto f6 = factor_bivariate_q(p2("(y^2 - 1) * (x^2 + y)"));
    REQUIRE(f6.size() == 3);
    CHECK(testutil::equal_up_to_constant(reassemble(f6, 2), p2("(y^2 - 1) * (x^2 + y)")));
}

TEST_CASE("bivariate factorization roundtrip on random products") {
    testutil::Rng rng(2024);
    for (int trial = 0; trial < 12; ++trial) {
        MultiPoly f = MultiPoly::constant(2, Rational(1));
        int n = static_cast<int>(rng.range(2, 3));
        for (int i = 0; i < n; ++i) f = f * testutil::random_poly(rng, 2, static_cast<int>(rng.range(1, 2)));
        if (f.is_constant()) continue;
        auto fac = factor_bivariate_q(f);
        CHECK(testutil::equal_up_to_constant(reassemble(fac, 2), f));
        for (const auto& [g, m] : fac) {
            (void)m;
            if (g.is_constant()) continue;
            auto sub = factor_bivariate_q(g);
            CHECK(sub.size() == 1);
            CHECK(sub[0].second == 1);
        }
    }
}

TEST_CASE("modular factor count oracle agrees on samples") {
    // x^2 + y^2: two absolute factors; mod p = 1 (mod 4) it splits into two,
    // mod p = 3 (mod 4) it stays irreducible.
    auto c101 = oracles::fp_bivariate_factor_count(p2("x^2 + y^2"), 101); // 101 = 1 mod 4
    REQUIRE(c101.has_value());
    CHECK(*c101 == 2);
    auto c103 = oracles::fp_bivariate_factor_count(p2("x^2 + y^2"), 103); // 103 = 3 mod 4
    REQUIRE(c103.has_value());
    CHECK(*c103 == 1);

    auto cprod = oracles::fp_bivariate_factor_count(p2("(x + y) * (x - y + 1)"), 101);
    REQUIRE(cprod.has_value());
    CHECK(*cprod == 2);
}

TEST_CASE("trivariate irreducibility") {
    CHECK(trivariate_irreducible(p3("x^3 + y^3 + z^3 - 1")).irreducible);
    CHECK(trivariate_irreducible(p3("x^2 + y^2 + z^2 - 1")).irreducible);
    CHECK(trivariate_irreducible(p3("x*y - z^2")).irreducible);
    CHECK(trivariate_irreducible(p3("x^2 - 2*z^2*y^2")).irreducible);

    auto red = trivariate_irreducible(p3("(x + y + z - 1) * (x^2 + y^2 + z^2 - 2)"));
    CHECK(!red.irreducible);
    REQUIRE(red.witness_factor.has_value());
    CHECK(!red.witness_factor->is_constant());
    CHECK(try_divide(p3("(x + y + z - 1) * (x^2 + y^2 + z^2 - 2)"), *red.witness_factor).has_value());

    // non-monic in every variable: forces the Q(y)-lifting confirmation
    auto prod = trivariate_irreducible(p3("(y*x + z) * (z*x + y + 1)"));
    CHECK(!prod.irreducible);
    REQUIRE(prod.witness_factor.has_value());
    CHECK(try_divide(p3("(y*x + z) * (z*x + y + 1)"), *prod.witness_factor).has_value());

    // fewer than three effective variables
    CHECK(trivariate_irreducible(p3("x^2 + 1")).irreducible);
    CHECK(!trivariate_irreducible(p3("x^2 - y^2")).irreducible);
    CHECK(trivariate_irreducible(p3("x^2 + y^2")).irreducible);

    // content in the main variable
    auto cont = trivariate_irreducible(p3("y*x^2 + y*z"));
    CHECK(!cont.irreducible);
}
