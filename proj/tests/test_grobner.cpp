#include "doctest.h"

#include "surfparam/grobner.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace surfparam;
using testutil::p2;
using testutil::p3;
using testutil::p4;

namespace {

GroebnerBasis gb2(const std::vector<MultiPoly>& gens) {
    return buchberger(gens, MonomialOrder::make_grevlex(2));
}

} // namespace

TEST_CASE("buchberger basics") {
    GroebnerBasis a = gb2({p2("x"), p2("y")});
    REQUIRE(a.generators.size() == 2);
    CHECK(a.generators[0] == p2("y"));
    CHECK(a.generators[1] == p2("x"));

    GroebnerBasis b = gb2({p2("x^2 + y^2"), p2("x^2 - y^2")});
    REQUIRE(b.generators.size() == 2);
    CHECK(b.generators[0] == p2("y^2"));
    CHECK(b.generators[1] == p2("x^2"));

    GroebnerBasis c = gb2({p2("7")});
    REQUIRE(c.generators.size() == 1);
    CHECK(c.generators[0] == p2("1"));

    CHECK_THROWS_AS(buchberger({MultiPoly(2)}, MonomialOrder::make_grevlex(2)), domain_error);
}

TEST_CASE("normal form") {
    GroebnerBasis gb = gb2({p2("x^2"), p2("y^2")});
    CHECK(normal_form(p2("x^2*y"), gb).is_zero());
    CHECK(normal_form(p2("x + y"), gb) == p2("x + y"));
    for (const MultiPoly& g : gb.original_ideal_gens) CHECK(normal_form(g, gb).is_zero());
}

TEST_CASE("buchberger criterion and membership consistency on random ideals") {
    testutil::Rng rng(1234);
    for (int trial = 0; trial < 6; ++trial) {
        std::vector<MultiPoly> gens;
        for (int i = 0; i < 3; ++i) gens.push_back(testutil::random_poly(rng, 3, 2));
        MonomialOrder ord = MonomialOrder::make_grevlex(3);
        GroebnerBasis gb = buchberger(gens, ord);
        // every S-polynomial of basis pairs reduces to zero
        for (size_t i = 0; i < gb.generators.size(); ++i) {
            for (size_t j = i + 1; j < gb.generators.size(); ++j) {
                const auto& [mi, ci] = leading_term(gb.generators[i], ord);
                const auto& [mj, cj] = leading_term(gb.generators[j], ord);
                Monomial l = Monomial::lcm(mi, mj);
                MultiPoly s = gb.generators[i].scaled(1 / ci) * MultiPoly::term(l / mi, Rational(1)) -
                              gb.generators[j].scaled(1 / cj) * MultiPoly::term(l / mj, Rational(1));
                CHECK(normal_form(s, gb).is_zero());
            }
        }
        // normal_form(f*g + h) == normal_form(h) for basis elements f
        MultiPoly g = testutil::random_poly(rng, 3, 2);
        MultiPoly h = testutil::random_poly(rng, 3, 2);
        for (const MultiPoly& f : gb.generators)
            CHECK(normal_form(f * g + h, gb) == normal_form(h, gb));
    }
}

TEST_CASE("projective emptiness") {
    CHECK(is_projectively_empty({p4("x"), p4("y"), p4("z"), p4("w")}));
    CHECK(!is_projectively_empty({p2("x*y")}));
    // Jacobian of the Fermat cubic surface: visible pure powers
    CHECK(is_projectively_empty({p4("3*x^2"), p4("3*y^2"), p4("3*z^2"), p4("-3*w^2")}));
    CHECK_THROWS_AS(is_projectively_empty({p2("x + 1")}), domain_error);

    // one-sided agreement with exhaustive F_p search over >= 3 primes
    testutil::Rng rng(777);
    const uint64_t primes[] = {101, 103, 107};
    for (int trial = 0; trial < 8; ++trial) {
        std::vector<MultiPoly> gens;
        int ngens = static_cast<int>(rng.range(2, 3));
        for (int i = 0; i < ngens; ++i)
            gens.push_back(testutil::random_form(rng, 3, static_cast<int>(rng.range(1, 2))));
        bool empty = is_projectively_empty(gens);
        if (empty) {
            // no F_p point may exist for at least one (generic) prime
            int clean = 0;
            for (uint64_t p : primes)
                if (!oracles::fp_projective_common_zero(gens, p)) ++clean;
            CHECK(clean >= 1);
        } else {
            // a rational projective point would reduce mod every prime, but a
            // nonempty variety need not have F_p-rational points; the sound
            // one-sided check: if some prime has no point, emptiness over Q
            // is still possible, so nothing to assert here. Spot-check that
            // the searches run.
            for (uint64_t p : primes) (void)oracles::fp_projective_common_zero(gens, p);
        }
    }
    // explicit nonempty cross-checks (rational common zeros)
    CHECK(oracles::fp_projective_common_zero({p3("x*y"), p3("x*z")}, 101));
    CHECK(!is_projectively_empty({p3("x*y"), p3("x*z")}));
}

TEST_CASE("eliminate") {
    // parabola implicitization: vars (t, x, y), eliminate t
    const std::vector<std::string> txy{"t", "x", "y"};
    std::vector<MultiPoly> gens{testutil::pp("x - t", txy), testutil::pp("y - t^2", txy)};
    std::vector<MultiPoly> el = eliminate(gens, {1, 2});
    REQUIRE(el.size() == 1);
    CHECK(testutil::equal_up_to_constant(el[0], testutil::pp("y - x^2", txy)));

    std::vector<MultiPoly> el2 = eliminate({p2("x"), p2("y")}, {1});
    REQUIRE(el2.size() == 1);
    CHECK(el2[0] == p2("y"));

    // substitute x = y by hand: 2y^2 - 1
    std::vector<MultiPoly> el3 = eliminate({p2("x^2 + y^2 - 1"), p2("x - y")}, {1});
    REQUIRE(el3.size() == 1);
    CHECK(testutil::equal_up_to_constant(el3[0], p2("2*y^2 - 1")));

    // every returned generator lies in the original ideal
    GroebnerBasis full = buchberger(gens, MonomialOrder::make_grevlex(3));
    for (const MultiPoly& g : el) CHECK(normal_form(g, full).is_zero());
}
