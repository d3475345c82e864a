#include "doctest.h"

#include "surfparam/polyops.hpp"
#include "test_util.hpp"

using namespace surfparam;
using testutil::p2;
using testutil::p3;

TEST_CASE("exact division") {
    MultiPoly f = p2("x^2 - y^2");
    CHECK(divide_exact(f, p2("x - y")) == p2("x + y"));
    CHECK(!try_divide(f, p2("x + 1")).has_value());
    testutil::Rng rng(11);
    for (int i = 0; i < 25; ++i) {
        MultiPoly a = testutil::random_poly(rng, 3, 3);
        MultiPoly b = testutil::random_poly(rng, 3, 2);
        CHECK(divide_exact(a * b, b) == a);
    }
}

TEST_CASE("gcd") {
    CHECK(poly_gcd(p2("x^2 - y^2"), p2("x^2 + 2*x*y + y^2")) == p2("x + y"));
    CHECK(poly_gcd(p2("x^2 + y^2"), p2("x^2 - y^2")).is_constant());
    CHECK(poly_gcd(MultiPoly(2), p2("2*x")) == p2("x"));
    testutil::Rng rng(13);
    for (int i = 0; i < 15; ++i) {
        MultiPoly a = testutil::random_poly(rng, 2, 2);
        MultiPoly b = testutil::random_poly(rng, 2, 2);
        MultiPoly c = testutil::random_poly(rng, 2, 2);
        MultiPoly g = poly_gcd(a * c, b * c);
        // c divides the gcd
        CHECK(try_divide(g, c.primitive_part()).has_value());
        // and the gcd divides both products
        CHECK(try_divide((a * c).primitive_part(), g).has_value());
        CHECK(try_divide((b * c).primitive_part(), g).has_value());
    }
}

TEST_CASE("squarefree decomposition") {
    auto parts = squarefree_decomposition(p2("(x + y)^2 * (x - y)"));
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].second == 1);
    CHECK(parts[0].first == p2("x - y"));
    CHECK(parts[1].second == 2);
    CHECK(parts[1].first == p2("x + y"));

    auto single = squarefree_decomposition(p2("x^2 + y^2"));
    REQUIRE(single.size() == 1);
    CHECK(single[0] == std::make_pair(p2("x^2 + y^2"), 1));

    // gcd(p, dp/dx) computed by hand gives (x^2+y^2)^2
    auto quartic = squarefree_decomposition(p2("x^4 + 2*x^2*y^2 + y^4"));
    REQUIRE(quartic.size() == 1);
    CHECK(quartic[0] == std::make_pair(p2("x^2 + y^2"), 2));

    CHECK_THROWS_AS(squarefree_decomposition(MultiPoly(2)), domain_error);

    testutil::Rng rng(17);
    for (int i = 0; i < 12; ++i) {
        MultiPoly a = testutil::random_poly(rng, 2, 2);
        MultiPoly b = testutil::random_poly(rng, 2, 2);
        MultiPoly f = a * a * b;
        if (f.is_constant()) continue;
        MultiPoly re = MultiPoly::constant(2, Rational(1));
        for (const auto& [part, mult] : squarefree_decomposition(f))
            re = re * part.pow(static_cast<unsigned>(mult));
        CHECK(testutil::equal_up_to_constant(re, f));
    }
}

TEST_CASE("resultant") {
    // res_x(x^2-2, x-1) = (value of x^2-2 at x=1) with the fixed convention
    MultiPoly r = resultant(p2("x^2 - 2"), p2("x - 1"), 0);
    CHECK(r == p2("-1"));

    // linear case: res_x(x-a, x-b) with vars (x,a,b); convention gives a-b
    const std::vector<std::string> xab{"x", "a", "b"};
    MultiPoly lin = resultant(testutil::pp("x - a", xab), testutil::pp("x - b", xab), 0);
    CHECK(lin == testutil::pp("a - b", xab));

    // shared roots
    MultiPoly f = p2("x^2 + y^2 - 1");
    CHECK(resultant(f, f, 0).is_zero());

    CHECK_THROWS_AS(resultant(p2("y"), p2("x"), 0), domain_error);

    // vanishes exactly when the gcd has positive degree in the variable
    testutil::Rng rng(19);
    for (int i = 0; i < 10; ++i) {
        MultiPoly a = testutil::random_poly(rng, 2, 2);
        MultiPoly b = testutil::random_poly(rng, 2, 2);
        if (a.degree_in(0) < 1 || b.degree_in(0) < 1) continue;
        MultiPoly res = resultant(a, b, 0);
        bool common = poly_gcd(a, b).degree_in(0) > 0;
        CHECK(res.is_zero() == common);
        MultiPoly x = MultiPoly::variable(2, 0);
        MultiPoly shared = resultant(a * x, b * x, 0);
        CHECK(shared.is_zero());
    }
}
