#include "doctest.h"

#include "surfparam/numberfield.hpp"

using namespace surfparam;

namespace {

NumberField sqrt2_field() { return NumberField(QPoly{Rational(-2), Rational(0), Rational(1)}); }

UP<NumberField> nf_poly(const NumberField& K, std::initializer_list<long> rational_coeffs) {
    UP<NumberField> p;
    for (long c : rational_coeffs) p.push_back(K.from_int(c));
    up_trim(K, p);
    return p;
}

// evaluate a K[s]-polynomial at an element of K
NumberField::elem eval_in(const NumberField& K, const UP<NumberField>& p, const NumberField::elem& v) {
    NumberField::elem acc = K.zero();
    for (size_t i = p.size(); i-- > 0;) acc = K.add(K.mul(acc, v), p[i]);
    return acc;
}

} // namespace

TEST_CASE("number field arithmetic") {
    NumberField K = sqrt2_field();
    NumberField::elem r2 = K.generator();
    CHECK(K.eq(K.mul(r2, r2), K.from_int(2)));
    // (1+sqrt2)^(-1) = sqrt2 - 1
    NumberField::elem v = K.add(K.one(), r2);
    CHECK(K.eq(K.inv(v), K.sub(r2, K.one())));
    CHECK_THROWS_AS(K.inv(K.zero()), domain_error);
}

TEST_CASE("factorization over Q(sqrt2)") {
    NumberField K = sqrt2_field();
    // s^2 - 2 splits into (s - sqrt2)(s + sqrt2)
    auto split = nf_factor_squarefree(K, nf_poly(K, {-2, 0, 1}));
    REQUIRE(split.size() == 2);
    for (const auto& fac : split) {
        CHECK(up_deg(fac) == 1);
        NumberField::elem root = K.neg(fac[0]);
        CHECK(K.eq(K.mul(root, root), K.from_int(2)));
    }

    // s^2 + 1 stays irreducible over Q(sqrt2)
    auto stay = nf_factor_squarefree(K, nf_poly(K, {1, 0, 1}));
    REQUIRE(stay.size() == 1);
    CHECK(up_deg(stay[0]) == 2);

    // s^4 - 4 = (s^2-2)(s^2+2) -> four factors over Q(sqrt2)? (s^2-2) splits,
    // (s^2+2) has roots ±i*2^(1/2)... not in Q(sqrt2): expect 2 linear + 1 quadratic.
    auto mixed = nf_factor_squarefree(K, nf_poly(K, {-4, 0, 0, 0, 1}));
    int linear = 0, quadratic = 0;
    UP<NumberField> prod{K.one()};
    for (const auto& fac : mixed) {
        if (up_deg(fac) == 1) ++linear;
        if (up_deg(fac) == 2) ++quadratic;
        prod = up_mul(K, prod, fac);
    }
    CHECK(linear == 2);
    CHECK(quadratic == 1);
    CHECK(up_eq(K, prod, nf_poly(K, {-4, 0, 0, 0, 1})));
}

TEST_CASE("tower flattening") {
    // Q -> Q(sqrt2)
    NumberField Q = rational_field();
    auto ext = nf_flatten(Q, nf_poly(Q, {-2, 0, 1}));
    CHECK(ext.L.degree() == 2);
    CHECK(ext.L.eq(ext.L.mul(ext.s_image, ext.s_image), ext.L.from_int(2)));

    // Q(sqrt2) adjoin i: degree 4 over Q
    NumberField K = sqrt2_field();
    auto up = nf_flatten(K, nf_poly(K, {1, 0, 1}));
    CHECK(up.L.degree() == 4);
    // t_image^2 = 2 and s_image^2 = -1 inside L
    CHECK(up.L.eq(up.L.mul(up.t_image, up.t_image), up.L.from_int(2)));
    CHECK(up.L.eq(up.L.mul(up.s_image, up.s_image), up.L.from_int(-1)));

    // mapping a K element: (3 + sqrt2) -> same algebraic relations in L
    NumberField::elem a = K.add(K.from_int(3), K.generator());
    NumberField::elem mapped = nf_map_elem(up.L, up.t_image, a);
    // (3+sqrt2)(3-sqrt2) = 7
    NumberField::elem b = K.sub(K.from_int(3), K.generator());
    NumberField::elem mb = nf_map_elem(up.L, up.t_image, b);
    CHECK(up.L.eq(up.L.mul(mapped, mb), up.L.from_int(7)));
}

TEST_CASE("flatten a linear extension stays in place") {
    NumberField K = sqrt2_field();
    // s - (1 + sqrt2)
    UP<NumberField> q{K.neg(K.add(K.one(), K.generator())), K.one()};
    auto ext = nf_flatten(K, q);
    CHECK(ext.L.degree() == 2);
    CHECK(ext.L.eq(ext.s_image, ext.L.add(ext.L.one(), ext.t_image)));
    CHECK(K.eq(eval_in(K, q, K.add(K.one(), K.generator())), K.zero()));
}
