/* upoly.hpp
 *
 * Dense univariate polynomial arithmetic over an abstract field, used with
 * the concrete fields in fields.hpp (Q, F_p, number fields, rational
 * functions). A polynomial is a trimmed coefficient vector, c[i] the
 * coefficient of x^i; the zero polynomial is the empty vector.
 *
 * Field objects are passed explicitly: they may carry runtime state (the
 * prime, the minimal polynomial).
 */
#pragma once

#include "surfparam/rational.hpp"

#include <utility>
#include <vector>

namespace surfparam {

template <class F>
using UP = std::vector<typename F::elem>;

template <class F>
void up_trim(const F& K, UP<F>& p) {
    while (!p.empty() && K.is_zero(p.back())) p.pop_back();
}

template <class E>
int up_deg(const std::vector<E>& p) {
    return static_cast<int>(p.size()) - 1;
}

template <class E>
bool up_is_zero(const std::vector<E>& p) {
    return p.empty();
}

template <class F>
UP<F> up_const(const F& K, typename F::elem c) {
    UP<F> p;
    if (!K.is_zero(c)) p.push_back(std::move(c));
    return p;
}

template <class F>
UP<F> up_x(const F& K) {
    return UP<F>{K.zero(), K.one()};
}

template <class F>
UP<F> up_add(const F& K, const UP<F>& a, const UP<F>& b) {
    UP<F> r(std::max(a.size(), b.size()), K.zero());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = K.add(r[i], b[i]);
    up_trim(K, r);
    return r;
}

template <class F>
UP<F> up_neg(const F& K, const UP<F>& a) {
    UP<F> r = a;
    for (auto& c : r) c = K.neg(c);
    return r;
}

template <class F>
UP<F> up_sub(const F& K, const UP<F>& a, const UP<F>& b) {
    return up_add(K, a, up_neg(K, b));
}

template <class F>
UP<F> up_mul(const F& K, const UP<F>& a, const UP<F>& b) {
    if (a.empty() || b.empty()) return {};
    UP<F> r(a.size() + b.size() - 1, K.zero());
    for (size_t i = 0; i < a.size(); ++i) {
        if (K.is_zero(a[i])) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = K.add(r[i + j], K.mul(a[i], b[j]));
    }
    up_trim(K, r);
    return r;
}

template <class F>
UP<F> up_scale(const F& K, const UP<F>& a, const typename F::elem& c) {
    if (K.is_zero(c)) return {};
    UP<F> r = a;
    for (auto& x : r) x = K.mul(x, c);
    return r;
}

template <class F>
UP<F> up_monic(const F& K, const UP<F>& a) {
    if (a.empty()) return a;
    return up_scale(K, a, K.inv(a.back()));
}

// Field division: a = q*b + r with deg r < deg b. b must be nonzero.
template <class F>
std::pair<UP<F>, UP<F>> up_divrem(const F& K, const UP<F>& a, const UP<F>& b) {
    if (b.empty()) throw domain_error("up_divrem: division by zero");
    UP<F> q, r = a;
    int db = up_deg(b);
    if (up_deg(a) >= db) q.assign(static_cast<size_t>(up_deg(a) - db) + 1, K.zero());
    typename F::elem lb_inv = K.inv(b.back());
    while (up_deg(r) >= db) {
        int d = up_deg(r) - db;
        typename F::elem c = K.mul(r.back(), lb_inv);
        q[static_cast<size_t>(d)] = c;
        for (int i = 0; i <= db; ++i) {
            size_t k = static_cast<size_t>(d + i);
            r[k] = K.sub(r[k], K.mul(c, b[static_cast<size_t>(i)]));
        }
        up_trim(K, r);
    }
    up_trim(K, q);
    return {q, r};
}

template <class F>
UP<F> up_mod(const F& K, const UP<F>& a, const UP<F>& b) {
    return up_divrem(K, a, b).second;
}

template <class F>
UP<F> up_div(const F& K, const UP<F>& a, const UP<F>& b) {
    return up_divrem(K, a, b).first;
}

// Monic gcd.
template <class F>
UP<F> up_gcd(const F& K, UP<F> a, UP<F> b) {
    while (!b.empty()) {
        UP<F> r = up_mod(K, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return up_monic(K, a);
}

// Extended gcd: returns (g, s, t) with g monic and g = s*a + t*b.
template <class F>
std::tuple<UP<F>, UP<F>, UP<F>> up_xgcd(const F& K, const UP<F>& a, const UP<F>& b) {
    UP<F> r0 = a, r1 = b;
    UP<F> s0 = up_const(K, K.one()), s1;
    UP<F> t0, t1 = up_const(K, K.one());
    while (!r1.empty()) {
        auto [q, r] = up_divrem(K, r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        UP<F> s = up_sub(K, s0, up_mul(K, q, s1));
        s0 = std::move(s1);
        s1 = std::move(s);
        UP<F> t = up_sub(K, t0, up_mul(K, q, t1));
        t0 = std::move(t1);
        t1 = std::move(t);
    }
    if (!r0.empty()) {
        typename F::elem c = K.inv(r0.back());
        r0 = up_scale(K, r0, c);
        s0 = up_scale(K, s0, c);
        t0 = up_scale(K, t0, c);
    }
    return {r0, s0, t0};
}

template <class F>
UP<F> up_derivative(const F& K, const UP<F>& a) {
    if (a.size() <= 1) return {};
    UP<F> r(a.size() - 1, K.zero());
    for (size_t i = 1; i < a.size(); ++i) r[i - 1] = K.mul_int(a[i], static_cast<long>(i));
    up_trim(K, r);
    return r;
}

template <class F>
typename F::elem up_eval(const F& K, const UP<F>& a, const typename F::elem& x) {
    typename F::elem acc = K.zero();
    for (size_t i = a.size(); i-- > 0;) acc = K.add(K.mul(acc, x), a[i]);
    return acc;
}

// a(c*x + b) for field constants c, b.
template <class F>
UP<F> up_compose_affine(const F& K, const UP<F>& a, const typename F::elem& c, const typename F::elem& b) {
    UP<F> lin{b, c};
    up_trim(K, lin);
    UP<F> acc;
    for (size_t i = a.size(); i-- > 0;) {
        acc = up_mul(K, acc, lin);
        acc = up_add(K, acc, up_const(K, a[i]));
    }
    return acc;
}

// a^e mod m (binary exponentiation), e >= 0.
template <class F>
UP<F> up_pow_mod(const F& K, UP<F> a, BigInt e, const UP<F>& m) {
    UP<F> r = up_const(K, K.one());
    a = up_mod(K, a, m);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = up_mod(K, up_mul(K, r, a), m);
        e >>= 1;
        if (e > 0) a = up_mod(K, up_mul(K, a, a), m);
    }
    return r;
}

template <class F>
bool up_eq(const F& K, const UP<F>& a, const UP<F>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (!K.eq(a[i], b[i])) return false;
    return true;
}

} // namespace surfparam
