#include "doctest.h"

#include "surfparam/multipoly.hpp"
#include "test_util.hpp"

using namespace surfparam;
using testutil::p2;
using testutil::p3;
using testutil::p4;

TEST_CASE("arithmetic basics") {
    CHECK(p2("x + y") + p2("x - y") == p2("2*x"));
    CHECK(p2("(x + y) * (x - y)") == p2("x^2 - y^2"));
    // schoolbook expansion done independently by hand:
    CHECK(p2("(x^2 + y^2) * (x^2 + y^2)") == p2("x^4 + 2*x^2*y^2 + y^4"));
    CHECK_THROWS_AS(p2("x") + p3("x"), structural_error);
}

TEST_CASE("ring axioms on random polynomials") {
    testutil::Rng rng(42);
    for (int i = 0; i < 40; ++i) {
        MultiPoly p = testutil::random_poly(rng, 3, 3);
        MultiPoly q = testutil::random_poly(rng, 3, 3);
        MultiPoly r = testutil::random_poly(rng, 3, 3);
        CHECK((p + q) + r == p + (q + r));
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
        CHECK(p * (q + r) == p * q + p * r);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p - p == MultiPoly(3));
    }
}

TEST_CASE("partial derivatives") {
    CHECK(p4("x^3 + y^3 + z^3 - w^3").derivative(0) == p4("3*x^2"));
    CHECK(p4("5").derivative(0) == MultiPoly(4));
    CHECK(p3("x^2*y + x*z^2").derivative(2) == p3("2*x*z"));
    CHECK_THROWS_AS(p3("x").derivative(3), structural_error);
}

TEST_CASE("homogenize") {
    CHECK(p3("x^3 + y^3 + z^3 - 1").homogenize() == p4("x^3 + y^3 + z^3 - w^3"));
    CHECK(p2("x^2 + y^2").homogenize() == testutil::pp("x^2 + y^2", {"x", "y", "w"}));
    CHECK(p3("z - x^2 - y^2").homogenize() == p4("z*w - x^2 - y^2"));
    CHECK_THROWS_AS(MultiPoly(3).homogenize(), domain_error);

    testutil::Rng rng(7);
    for (int i = 0; i < 30; ++i) {
        MultiPoly p = testutil::random_poly(rng, 3, 4);
        MultiPoly h = p.homogenize();
        CHECK(h.is_homogeneous());
        CHECK(h.total_degree() == p.total_degree());
        CHECK(h.eval_var(3, Rational(1)).substitute_one_drop(3) == p);
        // Euler relation: sum x_i d/dx_i h = deg * h
        MultiPoly acc(4);
        for (int v = 0; v < 4; ++v) acc = acc + MultiPoly::variable(4, v) * h.derivative(v);
        CHECK(acc == h.scaled(Rational(h.total_degree())));
    }
}

TEST_CASE("restrict_to_infinity") {
    CHECK(p4("x^3 + y^3 + z^3 - w^3").restrict_to_infinity() == p3("x^3 + y^3 + z^3"));
    CHECK(p4("z*w - x^2 - y^2").restrict_to_infinity() == p3("-x^2 - y^2"));
    // w divides the form <=> restriction vanishes
    CHECK(p4("x*w + y*w").restrict_to_infinity() == MultiPoly(3));
    CHECK_THROWS_AS(p4("x^2 + w").restrict_to_infinity(), domain_error);
}

TEST_CASE("canonical printing round-trips") {
    const std::vector<std::string> vars{"x", "y", "z"};
    CHECK(to_string(p3("x^2 + 2*x*y + y^2"), vars) == "x^2 + 2*x*y + y^2");
    CHECK(to_string(p3("-x - 1/2"), vars) == "-x - 1/2");
    CHECK(to_string(MultiPoly(3), vars) == "0");
    CHECK(to_string(p3("y - x^2"), vars) == "-x^2 + y");
}

TEST_CASE("degree bookkeeping") {
    CHECK(MultiPoly(3).total_degree() == MultiPoly::kMinusInfinity);
    CHECK(p3("x*y^2*z - 4").total_degree() == 4);
    CHECK(p3("x*y^2*z - 4").degree_in(1) == 2);
    CHECK(p3("7").total_degree() == 0);
}

TEST_CASE("compose with linear images") {
    // (x+y)^2 under x->x, y->x+z
    MultiPoly f = p3("(x + y)^2");
    std::vector<MultiPoly> images{p3("x"), p3("x + z"), p3("z")};
    CHECK(f.compose(images) == p3("(2*x + z)^2"));
}
