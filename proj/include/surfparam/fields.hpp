/* fields.hpp
 *
 * Concrete coefficient fields for the generic univariate layer:
 *   QField        — the rationals,
 *   FpField       — Z/p for an odd prime p,
 *   NumberField   — Q[t]/(m) for a monic irreducible m (elements are reduced
 *                   polynomials in t; inverses via the extended Euclidean
 *                   algorithm modulo m),
 *   RatFuncField  — Q(y), fractions of univariate rational polynomials.
 */
#pragma once

#include "surfparam/upoly.hpp"

namespace surfparam {

struct QField {
    using elem = Rational;
    elem zero() const { return Rational(0); }
    elem one() const { return Rational(1); }
    bool is_zero(const elem& a) const { return a == 0; }
    bool eq(const elem& a, const elem& b) const { return a == b; }
    elem add(const elem& a, const elem& b) const { return a + b; }
    elem sub(const elem& a, const elem& b) const { return a - b; }
    elem neg(const elem& a) const { return -a; }
    elem mul(const elem& a, const elem& b) const { return a * b; }
    elem mul_int(const elem& a, long n) const { return a * n; }
    elem inv(const elem& a) const {
        if (a == 0) throw domain_error("QField: inverse of zero");
        return 1 / a;
    }
    elem div(const elem& a, const elem& b) const { return mul(a, inv(b)); }
    elem from_int(long n) const { return Rational(n); }
};

using QPoly = UP<QField>; // dense univariate over Q

struct FpField {
    BigInt p;

    explicit FpField(BigInt prime) : p(std::move(prime)) {}

    using elem = BigInt;
    elem reduce(const BigInt& a) const {
        BigInt r = a % p;
        if (r < 0) r += p;
        return r;
    }
    elem zero() const { return BigInt(0); }
    elem one() const { return BigInt(1); }
    bool is_zero(const elem& a) const { return a == 0; }
    bool eq(const elem& a, const elem& b) const { return a == b; }
    elem add(const elem& a, const elem& b) const { return reduce(a + b); }
    elem sub(const elem& a, const elem& b) const { return reduce(a - b); }
    elem neg(const elem& a) const { return reduce(-a); }
    elem mul(const elem& a, const elem& b) const { return reduce(a * b); }
    elem mul_int(const elem& a, long n) const { return reduce(a * n); }
    elem inv(const elem& a) const {
        BigInt r;
        if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0)
            throw domain_error("FpField: inverse of zero");
        return r;
    }
    elem div(const elem& a, const elem& b) const { return mul(a, inv(b)); }
    elem from_int(long n) const { return reduce(BigInt(n)); }
};

class NumberField {
public:
    using elem = QPoly; // reduced: deg < degree()

    // minpoly monic over Q, degree >= 1; irreducibility is the caller's
    // contract (cluster construction and Trager splitting guarantee it).
    explicit NumberField(QPoly monic_minpoly) : min_(std::move(monic_minpoly)) {
        if (up_deg(min_) < 1) throw structural_error("NumberField: minimal polynomial must have degree >= 1");
        if (min_.back() != 1) throw structural_error("NumberField: minimal polynomial must be monic");
    }

    int degree() const { return up_deg(min_); }
    const QPoly& minpoly() const { return min_; }

    elem zero() const { return {}; }
    elem one() const { return elem{Rational(1)}; }
    elem from_rational(const Rational& r) const { return r == 0 ? elem{} : elem{r}; }
    elem from_int(long n) const { return from_rational(Rational(n)); }
    // The class of t.
    elem generator() const { return reduce(up_x(QField{})); }

    elem reduce(const QPoly& p) const { return up_mod(QField{}, p, min_); }

    bool is_zero(const elem& a) const { return a.empty(); }
    bool eq(const elem& a, const elem& b) const { return a == b; }
    elem add(const elem& a, const elem& b) const { return up_add(QField{}, a, b); }
    elem sub(const elem& a, const elem& b) const { return up_sub(QField{}, a, b); }
    elem neg(const elem& a) const { return up_neg(QField{}, a); }
    elem mul(const elem& a, const elem& b) const { return reduce(up_mul(QField{}, a, b)); }
    elem mul_int(const elem& a, long n) const { return up_scale(QField{}, a, Rational(n)); }
    elem inv(const elem& a) const {
        if (a.empty()) throw domain_error("NumberField: inverse of zero");
        auto [g, s, t] = up_xgcd(QField{}, a, min_);
        if (up_deg(g) != 0)
            throw domain_error("NumberField: non-invertible element (minimal polynomial not irreducible?)");
        return reduce(s);
    }
    elem div(const elem& a, const elem& b) const { return mul(a, inv(b)); }

    // Rational value of a degree-0 element (throws otherwise).
    Rational to_rational(const elem& a) const {
        if (a.empty()) return Rational(0);
        if (a.size() != 1) throw domain_error("NumberField: element is not rational");
        return a[0];
    }

private:
    QPoly min_;
};

// The trivial number field Q = Q[t]/(t).
inline NumberField rational_field() { return NumberField(QPoly{Rational(0), Rational(1)}); }

struct RatFuncField {
    struct elem {
        QPoly num; // zero <=> num empty
        QPoly den; // monic, nonzero, coprime to num

        bool operator==(const elem& o) const { return num == o.num && den == o.den; }
    };

    static elem make(QPoly n, QPoly d) {
        QField Q;
        if (d.empty()) throw domain_error("RatFuncField: zero denominator");
        if (n.empty()) return elem{{}, {Rational(1)}};
        QPoly g = up_gcd(Q, n, d);
        if (up_deg(g) > 0) {
            n = up_div(Q, n, g);
            d = up_div(Q, d, g);
        }
        Rational lc = d.back();
        n = up_scale(Q, n, Rational(1) / lc);
        d = up_scale(Q, d, Rational(1) / lc);
        return elem{std::move(n), std::move(d)};
    }

    elem zero() const { return elem{{}, {Rational(1)}}; }
    elem one() const { return elem{{Rational(1)}, {Rational(1)}}; }
    elem from_poly(QPoly p) const { return make(std::move(p), {Rational(1)}); }
    elem from_int(long n) const { return from_poly(n == 0 ? QPoly{} : QPoly{Rational(n)}); }

    bool is_zero(const elem& a) const { return a.num.empty(); }
    bool eq(const elem& a, const elem& b) const { return a == b; }
    elem add(const elem& a, const elem& b) const {
        QField Q;
        QPoly n = up_add(Q, up_mul(Q, a.num, b.den), up_mul(Q, b.num, a.den));
        return make(std::move(n), up_mul(Q, a.den, b.den));
    }
    elem sub(const elem& a, const elem& b) const { return add(a, neg(b)); }
    elem neg(const elem& a) const { return elem{up_neg(QField{}, a.num), a.den}; }
    elem mul(const elem& a, const elem& b) const {
        QField Q;
        return make(up_mul(Q, a.num, b.num), up_mul(Q, a.den, b.den));
    }
    elem mul_int(const elem& a, long n) const {
        return make(up_scale(QField{}, a.num, Rational(n)), a.den);
    }
    elem inv(const elem& a) const {
        if (a.num.empty()) throw domain_error("RatFuncField: inverse of zero");
        return make(a.den, a.num);
    }
    elem div(const elem& a, const elem& b) const { return mul(a, inv(b)); }
};

} // namespace surfparam
