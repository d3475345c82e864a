/* bifactor.hpp
 *
 * Bivariate factorization over Q and trivariate irreducibility testing, both
 * built on one generic core: factor the polynomial at a good evaluation
 * point, lift the coprime base factors (y-y0)-adically with a linear
 * multifactor Hensel step, and recombine subsets with exact division tests.
 *
 * The generic pieces are templated over the coefficient field so the same
 * lifting code serves Q (curve factorization), Q(y) (the trivariate
 * irreducibility decision) and F_p (the test-suite factor-count oracle).
 *
 * Bivariate representation: f = sum_i c_i(y) * x^i is a vector indexed by
 * the x-power whose entries are univariate polynomials in y.
 */
#pragma once

#include "surfparam/fields.hpp"
#include "surfparam/multipoly.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace surfparam {

template <class F>
using BiPoly = std::vector<UP<F>>; // [x-power] -> coefficient in F[y]

template <class F>
void bi_trim(const F& K, BiPoly<F>& f) {
    for (auto& c : f) up_trim(K, c);
    while (!f.empty() && f.back().empty()) f.pop_back();
}

template <class E>
int bi_xdeg(const std::vector<std::vector<E>>& f) {
    return static_cast<int>(f.size()) - 1;
}

template <class E>
int bi_ydeg(const std::vector<std::vector<E>>& f) {
    int d = -1;
    for (const auto& c : f) d = std::max(d, up_deg(c));
    return d;
}

template <class F>
BiPoly<F> bi_add(const F& K, const BiPoly<F>& a, const BiPoly<F>& b) {
    BiPoly<F> r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        UP<F> s = i < a.size() ? a[i] : UP<F>{};
        if (i < b.size()) s = up_add(K, s, b[i]);
        r[i] = std::move(s);
    }
    bi_trim(K, r);
    return r;
}

template <class F>
BiPoly<F> bi_neg(const F& K, const BiPoly<F>& a) {
    BiPoly<F> r = a;
    for (auto& c : r) c = up_neg(K, c);
    return r;
}

template <class F>
BiPoly<F> bi_sub(const F& K, const BiPoly<F>& a, const BiPoly<F>& b) {
    return bi_add(K, a, bi_neg(K, b));
}

// Product truncated to y-degree < yprec (yprec < 0: no truncation).
template <class F>
BiPoly<F> bi_mul(const F& K, const BiPoly<F>& a, const BiPoly<F>& b, int yprec = -1) {
    if (a.empty() || b.empty()) return {};
    BiPoly<F> r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].empty()) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j].empty()) continue;
            UP<F> prod = up_mul(K, a[i], b[j]);
            if (yprec >= 0 && up_deg(prod) >= yprec) {
                prod.resize(static_cast<size_t>(yprec));
                up_trim(K, prod);
            }
            r[i + j] = up_add(K, r[i + j], prod);
        }
    }
    bi_trim(K, r);
    return r;
}

template <class F>
BiPoly<F> bi_truncate(const F& K, BiPoly<F> f, int yprec) {
    for (auto& c : f) {
        if (up_deg(c) >= yprec) c.resize(static_cast<size_t>(yprec));
        up_trim(K, c);
    }
    bi_trim(K, f);
    return f;
}

// f(x, y + a): Taylor shift in y.
template <class F>
BiPoly<F> bi_shift_y(const F& K, const BiPoly<F>& f, const typename F::elem& a) {
    BiPoly<F> r(f.size());
    for (size_t i = 0; i < f.size(); ++i) r[i] = up_compose_affine(K, f[i], K.one(), a);
    bi_trim(K, r);
    return r;
}

// f(x, y0) as a univariate polynomial in x.
template <class F>
UP<F> bi_eval_y(const F& K, const BiPoly<F>& f, const typename F::elem& y0) {
    UP<F> r(f.size());
    for (size_t i = 0; i < f.size(); ++i) r[i] = up_eval(K, f[i], y0);
    up_trim(K, r);
    return r;
}

// Division in K[y][x] by a divisor monic in x; returns (quotient, remainder).
template <class F>
std::pair<BiPoly<F>, BiPoly<F>> bi_divrem_monic(const F& K, const BiPoly<F>& a, const BiPoly<F>& b) {
    if (b.empty() || up_deg(b.back()) != 0 || !K.eq(b.back()[0], K.one()))
        throw domain_error("bi_divrem_monic: divisor must be monic in x");
    BiPoly<F> r = a;
    bi_trim(K, r);
    int db = bi_xdeg(b);
    BiPoly<F> q;
    while (bi_xdeg(r) >= db) {
        int d = bi_xdeg(r) - db;
        UP<F> c = r.back();
        if (static_cast<int>(q.size()) <= d) q.resize(static_cast<size_t>(d) + 1);
        q[static_cast<size_t>(d)] = up_add(K, q[static_cast<size_t>(d)], c);
        for (int i = 0; i <= db; ++i) {
            size_t k = static_cast<size_t>(d + i);
            r[k] = up_sub(K, r[k], up_mul(K, c, b[static_cast<size_t>(i)]));
        }
        bi_trim(K, r);
    }
    bi_trim(K, q);
    return {q, r};
}

// Linear multifactor Hensel lifting along y: given f monic in x with
// f(x, 0) = prod base_i (base_i monic, pairwise coprime), returns factors
// G_i monic in x with f = prod G_i (mod y^yprec).
template <class F>
std::vector<BiPoly<F>> hensel_lift_bivariate(const F& K, const BiPoly<F>& f,
                                             const std::vector<UP<F>>& base, int yprec) {
    size_t r = base.size();
    // Bezout family: sigma_i * prod_{j != i} base_j = 1 (mod base_i).
    std::vector<UP<F>> sigma(r);
    for (size_t i = 0; i < r; ++i) {
        UP<F> cof = up_const(K, K.one());
        for (size_t j = 0; j < r; ++j)
            if (j != i) cof = up_mod(K, up_mul(K, cof, base[j]), base[i]);
        auto [g, s, t] = up_xgcd(K, cof, base[i]);
        if (up_deg(g) != 0) throw domain_error("hensel_lift_bivariate: base factors not coprime");
        sigma[i] = s;
    }

    std::vector<BiPoly<F>> lifted(r);
    for (size_t i = 0; i < r; ++i) {
        lifted[i].resize(base[i].size());
        for (size_t j = 0; j < base[i].size(); ++j) lifted[i][j] = up_const(K, base[i][j]);
    }

    BiPoly<F> ftrunc = bi_truncate(K, f, yprec);
    for (int k = 1; k < yprec; ++k) {
        BiPoly<F> prod = lifted[0];
        for (size_t i = 1; i < r; ++i) prod = bi_mul(K, prod, lifted[i], k + 1);
        BiPoly<F> err = bi_sub(K, bi_truncate(K, ftrunc, k + 1), prod);
        // coefficient of y^k: a polynomial in x of degree < deg_x f
        UP<F> e;
        for (size_t i = 0; i < err.size(); ++i) {
            if (up_deg(err[i]) >= k && !K.is_zero(err[i][static_cast<size_t>(k)])) {
                if (e.size() <= i) e.resize(i + 1, K.zero());
                e[i] = err[i][static_cast<size_t>(k)];
            }
        }
        up_trim(K, e);
        if (e.empty()) continue;
        for (size_t i = 0; i < r; ++i) {
            UP<F> delta = up_mod(K, up_mul(K, sigma[i], e), base[i]);
            if (delta.empty()) continue;
            for (size_t j = 0; j < delta.size(); ++j) {
                UP<F>& cell = lifted[i][j];
                if (static_cast<int>(cell.size()) <= k) cell.resize(static_cast<size_t>(k) + 1, K.zero());
                cell[static_cast<size_t>(k)] = K.add(cell[static_cast<size_t>(k)], delta[j]);
                up_trim(K, cell);
            }
        }
    }
    return lifted;
}

// Subset recombination: the true monic-in-x factors of f are exactly the
// products of base-factor subsets, recovered by an exact division test.
// `to_factor` converts a y-truncated candidate (already shifted back to the
// original y) into a verified factor, or rejects it.
template <class F>
std::vector<BiPoly<F>> recombine_factors(
    const F& K, const BiPoly<F>& f, const std::vector<BiPoly<F>>& lifted, int yprec,
    const std::function<std::optional<BiPoly<F>>(const BiPoly<F>& candidate)>& accept) {
    std::vector<BiPoly<F>> result;
    std::vector<size_t> live(lifted.size());
    for (size_t i = 0; i < live.size(); ++i) live[i] = i;
    BiPoly<F> remaining = f;

    auto product_of = [&](const std::vector<size_t>& subset) {
        BiPoly<F> prod{{K.one()}};
        for (size_t idx : subset) prod = bi_mul(K, prod, lifted[idx], yprec);
        return prod;
    };

    for (size_t take = 1; !live.empty() && 2 * take <= live.size();) {
        std::vector<size_t> pick(take);
        for (size_t i = 0; i < take; ++i) pick[i] = i;
        bool found = false;
        for (;;) {
            std::vector<size_t> subset(take);
            for (size_t i = 0; i < take; ++i) subset[i] = live[pick[i]];
            if (auto fac = accept(product_of(subset))) {
                result.push_back(*fac);
                auto [q, rem] = bi_divrem_monic(K, remaining, *fac);
                if (!rem.empty()) throw domain_error("recombine_factors: accepted candidate does not divide");
                remaining = q;
                std::vector<size_t> rest;
                for (size_t v : live)
                    if (std::find(subset.begin(), subset.end(), v) == subset.end()) rest.push_back(v);
                live = rest;
                found = true;
                break;
            }
            int i = static_cast<int>(take) - 1;
            while (i >= 0 && pick[static_cast<size_t>(i)] == live.size() - take + static_cast<size_t>(i)) --i;
            if (i < 0) break;
            ++pick[static_cast<size_t>(i)];
            for (size_t j = static_cast<size_t>(i) + 1; j < take; ++j) pick[j] = pick[j - 1] + 1;
        }
        if (!found) ++take;
    }
    if (!live.empty()) result.push_back(remaining);
    return result;
}

// ---- Q-specific interface ----------------------------------------------

// Complete factorization over Q of a bivariate polynomial (vars (x, y) of a
// 2-variable MultiPoly) into irreducible primitive factors with
// multiplicities; deterministic order.
std::vector<std::pair<MultiPoly, int>> factor_bivariate_q(const MultiPoly& f);

// Irreducible factors of a squarefree primitive bivariate polynomial.
std::vector<MultiPoly> factor_bivariate_squarefree_q(const MultiPoly& f);

// Exact irreducibility decision for a nonconstant squarefree trivariate
// polynomial (3-variable MultiPoly); returns a nontrivial factor when
// reducible.
struct IrreducibilityResult {
    bool irreducible;
    std::optional<MultiPoly> witness_factor;
};
IrreducibilityResult trivariate_irreducible(const MultiPoly& f);

} // namespace surfparam
