#include "surfparam/bifactor.hpp"

#include "surfparam/polyops.hpp"
#include "surfparam/unifactor.hpp"

#include <algorithm>

namespace surfparam {

namespace {

long sweep_value(int k) { return (k % 2 == 0) ? k / 2 : -(k / 2 + 1); }

// Deterministic order on polynomials: total degree, then term maps.
bool canonical_less(const MultiPoly& a, const MultiPoly& b) {
    if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
    auto ita = a.terms().begin();
    auto itb = b.terms().begin();
    for (; ita != a.terms().end() && itb != b.terms().end(); ++ita, ++itb) {
        if (ita->first != itb->first) return grevlex_less(itb->first, ita->first);
        if (ita->second != itb->second) return ita->second < itb->second;
    }
    return a.terms().size() < b.terms().size();
}

// ---- MultiPoly <-> BiPoly<QField> (2 variables: x = slot xv, y = slot yv)

BiPoly<QField> bi_from_multipoly(const MultiPoly& f, int xv, int yv) {
    BiPoly<QField> r;
    for (const auto& [m, c] : f.terms()) {
        size_t i = static_cast<size_t>(m[xv]);
        size_t j = static_cast<size_t>(m[yv]);
        if (r.size() <= i) r.resize(i + 1);
        if (r[i].size() <= j) r[i].resize(j + 1, Rational(0));
        r[i][j] = c;
    }
    QField Q;
    bi_trim(Q, r);
    return r;
}

MultiPoly bi_to_multipoly(const BiPoly<QField>& f, int xv, int yv, int nvars) {
    MultiPoly r(nvars);
    for (size_t i = 0; i < f.size(); ++i) {
        for (size_t j = 0; j < f[i].size(); ++j) {
            if (f[i][j] == 0) continue;
            Monomial m(nvars);
            m[xv] = static_cast<int>(i);
            m[yv] = static_cast<int>(j);
            r.add_term(m, f[i][j]);
        }
    }
    return r;
}

QPoly qpoly_from_multipoly(const MultiPoly& f, int var) {
    QPoly r(static_cast<size_t>(std::max(f.degree_in(var), -1)) + 1, Rational(0));
    for (const auto& [m, c] : f.terms()) r[static_cast<size_t>(m[var])] = c;
    up_trim(QField{}, r);
    return r;
}

MultiPoly qpoly_to_multipoly(const QPoly& f, int var, int nvars) {
    MultiPoly r(nvars);
    for (size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0) continue;
        r.add_term(Monomial::unit(nvars, var, static_cast<int>(i)), f[i]);
    }
    return r;
}

// Factors of a univariate-in-`var` MultiPoly, as primitive MultiPolys.
std::vector<MultiPoly> factor_univariate_slot(const MultiPoly& f, int var) {
    std::vector<MultiPoly> out;
    for (const auto& [fac, mult] : factor_univariate_q(qpoly_from_multipoly(f, var)).factors) {
        (void)mult; // squarefree callers
        out.push_back(qpoly_to_multipoly(fac, var, f.nvars()).primitive_part());
    }
    return out;
}

// Irreducible factors of a squarefree primitive f with deg_x >= 1 and
// deg_y >= 1, primitive in x. Returns primitive factors.
std::vector<MultiPoly> factor_core_xy(const MultiPoly& f, int xv, int yv) {
    QField Q;
    int d = f.degree_in(xv);

    // Monicize in x: g = lc^(d-1) * f(x/lc, y), monic of x-degree d.
    std::vector<MultiPoly> coeffs = coeffs_in(f, xv);
    MultiPoly lead = coeffs.back();
    BiPoly<QField> g(static_cast<size_t>(d) + 1);
    g[static_cast<size_t>(d)] = QPoly{Rational(1)}; // lc^(d-1) * lc / lc^d
    for (int i = 0; i < d; ++i) {
        MultiPoly gi = coeffs[static_cast<size_t>(i)];
        for (int k = 0; k < d - 1 - i; ++k) gi = gi * lead;
        g[static_cast<size_t>(i)] = qpoly_from_multipoly(gi, yv);
    }
    bi_trim(Q, g);

    // Good evaluation point: squarefree specialization (degree is preserved
    // automatically, g is monic in x).
    for (int k = 0; k < 128; ++k) {
        Rational y0(sweep_value(k));
        UP<QField> u = bi_eval_y(Q, g, y0);
        if (up_deg(up_gcd(Q, u, up_derivative(Q, u))) != 0) continue;

        QFactorization base_fac = factor_univariate_q(u);
        if (base_fac.factors.size() == 1) return {f.primitive_part()};
        std::vector<UP<QField>> base;
        for (const auto& [p, mult] : base_fac.factors) {
            (void)mult;
            base.push_back(p);
        }

        BiPoly<QField> gs = bi_shift_y(Q, g, y0);
        int yprec = bi_ydeg(g) + 1;
        std::vector<BiPoly<QField>> lifted = hensel_lift_bivariate(Q, gs, base, yprec);

        auto accept = [&](const BiPoly<QField>& cand) -> std::optional<BiPoly<QField>> {
            auto [quot, rem] = bi_divrem_monic(Q, gs, cand);
            (void)quot;
            if (!rem.empty()) return std::nullopt;
            return cand;
        };
        std::vector<BiPoly<QField>> parts =
            recombine_factors<QField>(Q, gs, lifted, yprec, accept);

        // Map back: shift y, undo the monicization (x -> lc*x), strip the
        // x-content the substitution reintroduces.
        std::vector<MultiPoly> out;
        for (const BiPoly<QField>& part : parts) {
            BiPoly<QField> orig = bi_shift_y(Q, part, Q.neg(y0));
            MultiPoly h = bi_to_multipoly(orig, xv, yv, f.nvars());
            std::vector<MultiPoly> hc = coeffs_in(h, xv);
            MultiPoly mapped(f.nvars());
            for (size_t i = 0; i < hc.size(); ++i) {
                MultiPoly term = hc[i] * MultiPoly::term(Monomial::unit(f.nvars(), xv, static_cast<int>(i)),
                                                         Rational(1));
                for (size_t k = 0; k < i; ++k) term = term * lead;
                mapped = mapped + term;
            }
            mapped = divide_exact(mapped, content_in(mapped, xv));
            out.push_back(mapped.primitive_part());
        }
        std::sort(out.begin(), out.end(), canonical_less);
        return out;
    }
    throw domain_error("factor_core_xy: no squarefree evaluation point found");
}

} // namespace

std::vector<MultiPoly> factor_bivariate_squarefree_q(const MultiPoly& f_in) {
    if (f_in.nvars() != 2) throw structural_error("factor_bivariate_squarefree_q: expected 2 variables");
    MultiPoly f = f_in.primitive_part();
    std::vector<MultiPoly> out;
    if (f.is_constant()) return out;
    if (f.degree_in(0) == 0) return factor_univariate_slot(f, 1);
    if (f.degree_in(1) == 0) return factor_univariate_slot(f, 0);

    MultiPoly cont = content_in(f, 0);
    if (!cont.is_constant()) {
        out = factor_univariate_slot(cont, 1); // content is univariate in y
        MultiPoly pp = divide_exact(f, cont);
        std::vector<MultiPoly> rest =
            pp.degree_in(1) == 0 ? factor_univariate_slot(pp, 0) : factor_core_xy(pp, 0, 1);
        out.insert(out.end(), rest.begin(), rest.end());
        std::sort(out.begin(), out.end(), canonical_less);
        return out;
    }
    return factor_core_xy(f, 0, 1);
}

std::vector<std::pair<MultiPoly, int>> factor_bivariate_q(const MultiPoly& f) {
    if (f.is_zero()) throw domain_error("factor_bivariate_q: zero polynomial");
    std::vector<std::pair<MultiPoly, int>> out;
    for (const auto& [part, mult] : squarefree_decomposition(f)) {
        for (const MultiPoly& fac : factor_bivariate_squarefree_q(part)) out.emplace_back(fac, mult);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second < b.second;
        return canonical_less(a.first, b.first);
    });
    return out;
}

namespace {

// ---- trivariate machinery over K = Q(y) ----------------------------------

using RF = RatFuncField;

RF::elem rf_from_mp(const MultiPoly& c, int yv) {
    RF K;
    return K.from_poly(qpoly_from_multipoly(c, yv));
}

// f (3 vars) as BiPoly over Q(y): index = x-power, entries in K[z].
BiPoly<RF> trivariate_to_bi(const MultiPoly& f, int xv, int yv, int zv) {
    RF K;
    BiPoly<RF> r;
    for (const auto& [m, c] : f.terms()) {
        size_t i = static_cast<size_t>(m[xv]);
        size_t k = static_cast<size_t>(m[zv]);
        if (r.size() <= i) r.resize(i + 1);
        if (r[i].size() <= k) r[i].resize(k + 1, K.zero());
        QPoly add(static_cast<size_t>(m[yv]) + 1, Rational(0));
        add[static_cast<size_t>(m[yv])] = c;
        r[i][k] = K.add(r[i][k], K.from_poly(add));
    }
    bi_trim(K, r);
    return r;
}

// Clear the Q(y)-denominators of a candidate and return the primitive
// trivariate polynomial.
MultiPoly bi_rf_to_multipoly(const BiPoly<RF>& f, int xv, int yv, int zv, int nvars) {
    QField Q;
    QPoly den{Rational(1)};
    for (const auto& cz : f)
        for (const auto& e : cz) {
            if (e.num.empty()) continue;
            QPoly g = up_gcd(Q, den, e.den);
            den = up_mul(Q, den, up_div(Q, e.den, g));
        }
    MultiPoly out(nvars);
    for (size_t i = 0; i < f.size(); ++i) {
        for (size_t k = 0; k < f[i].size(); ++k) {
            const RF::elem& e = f[i][k];
            if (e.num.empty()) continue;
            QPoly numer = up_mul(Q, e.num, up_div(Q, den, e.den));
            for (size_t j = 0; j < numer.size(); ++j) {
                if (numer[j] == 0) continue;
                Monomial m(nvars);
                m[xv] = static_cast<int>(i);
                m[yv] = static_cast<int>(j);
                m[zv] = static_cast<int>(k);
                out.add_term(m, numer[j]);
            }
        }
    }
    return out.is_zero() ? out : out.primitive_part();
}

// Variables actually appearing in f, ascending.
std::vector<int> used_vars(const MultiPoly& f) {
    std::vector<int> used;
    for (int v = 0; v < f.nvars(); ++v)
        if (f.degree_in(v) > 0) used.push_back(v);
    return used;
}

IrreducibilityResult result_reducible(MultiPoly witness) {
    return IrreducibilityResult{false, std::move(witness)};
}

} // namespace

IrreducibilityResult trivariate_irreducible(const MultiPoly& f_in) {
    if (f_in.nvars() != 3) throw structural_error("trivariate_irreducible: expected 3 variables");
    MultiPoly f = f_in.primitive_part();
    if (f.is_constant()) throw domain_error("trivariate_irreducible: constant polynomial");

    std::vector<int> used = used_vars(f);
    if (used.size() == 1) {
        std::vector<MultiPoly> fs = factor_univariate_slot(f, used[0]);
        if (fs.size() == 1) return {true, std::nullopt};
        return result_reducible(fs[0]);
    }
    if (used.size() == 2) {
        // Compact to two variables, factor there, expand back.
        MultiPoly g(2);
        for (const auto& [m, c] : f.terms()) {
            Monomial mm(2);
            mm[0] = m[used[0]];
            mm[1] = m[used[1]];
            g.add_term(mm, c);
        }
        std::vector<MultiPoly> fs = factor_bivariate_squarefree_q(g);
        if (fs.size() == 1) return {true, std::nullopt};
        MultiPoly w(3);
        for (const auto& [m, c] : fs[0].terms()) {
            Monomial mm(3);
            mm[used[0]] = m[0];
            mm[used[1]] = m[1];
            w.add_term(mm, c);
        }
        return result_reducible(w);
    }

    const int xv = 0, yv = 1, zv = 2;
    MultiPoly cont = content_in(f, xv);
    if (!cont.is_constant()) return result_reducible(cont);

    // Fast path: an irreducible degree-preserving squarefree specialization
    // certifies irreducibility.
    std::vector<MultiPoly> lead = coeffs_in(f, xv);
    int good_found = 0;
    long first_good = 0;
    for (int k = 0; k < 64 && good_found < 3; ++k) {
        long z0 = sweep_value(k);
        MultiPoly f2 = f.eval_var(zv, Rational(z0));
        if (f2.degree_in(xv) != f.degree_in(xv)) continue;
        if (!poly_gcd(f2, f2.derivative(xv)).is_constant()) continue;
        if (good_found == 0) first_good = z0;
        ++good_found;
        MultiPoly g2(2);
        for (const auto& [m, c] : f2.terms()) {
            Monomial mm(2);
            mm[0] = m[xv];
            mm[1] = m[yv];
            g2.add_term(mm, c);
        }
        if (factor_bivariate_squarefree_q(g2).size() == 1) return {true, std::nullopt};
    }
    if (good_found == 0) throw domain_error("trivariate_irreducible: no usable specialization found");

    // Complete decision: monicize in x over Q[y,z], lift the bivariate base
    // factorization (z-z0)-adically over Q(y), recombine.
    RF K;
    int d = f.degree_in(xv);
    MultiPoly lc = lead.back();
    MultiPoly g = MultiPoly::term(Monomial::unit(3, xv, d), Rational(1));
    for (int i = 0; i < d; ++i) {
        MultiPoly gi = lead[static_cast<size_t>(i)];
        for (int k = 0; k < d - 1 - i; ++k) gi = gi * lc;
        g = g + gi * MultiPoly::term(Monomial::unit(3, xv, i), Rational(1));
    }

    for (int k = 0; k < 64; ++k) {
        long z0v = sweep_value(k);
        MultiPoly g2 = g.eval_var(zv, Rational(z0v));
        if (g2.degree_in(xv) != d) continue;
        if (!poly_gcd(g2, g2.derivative(xv)).is_constant()) continue;

        MultiPoly g2c(2);
        for (const auto& [m, c] : g2.terms()) {
            Monomial mm(2);
            mm[0] = m[xv];
            mm[1] = m[yv];
            g2c.add_term(mm, c);
        }
        std::vector<MultiPoly> base_polys = g2c.degree_in(1) == 0
                                                ? factor_univariate_slot(g2c, 0)
                                                : factor_bivariate_squarefree_q(g2c);
        if (base_polys.size() == 1) return {true, std::nullopt};

        // Base factors as monic elements of Q(y)[x].
        std::vector<UP<RF>> base;
        for (const MultiPoly& b : base_polys) {
            std::vector<MultiPoly> bc = coeffs_in(b, 0);
            UP<RF> u(bc.size());
            for (size_t i = 0; i < bc.size(); ++i) u[i] = rf_from_mp(bc[i], 1);
            RF::elem inv = K.inv(u.back());
            for (auto& e : u) e = K.mul(e, inv);
            base.push_back(u);
        }

        BiPoly<RF> G = trivariate_to_bi(g, xv, yv, zv);
        RF::elem z0 = K.from_int(z0v);
        BiPoly<RF> Gs = bi_shift_y(K, G, z0);
        int zprec = g.degree_in(zv) + 1;
        std::vector<BiPoly<RF>> lifted = hensel_lift_bivariate(K, Gs, base, zprec);

        auto accept = [&](const BiPoly<RF>& cand) -> std::optional<BiPoly<RF>> {
            auto [quot, rem] = bi_divrem_monic(K, Gs, cand);
            (void)quot;
            if (!rem.empty()) return std::nullopt;
            return cand;
        };
        std::vector<BiPoly<RF>> parts = recombine_factors<RF>(K, Gs, lifted, zprec, accept);
        if (parts.size() == 1) return {true, std::nullopt};

        // Reducible: map one factor back to a factor of f.
        BiPoly<RF> orig = bi_shift_y(K, parts[0], K.neg(z0));
        MultiPoly h = bi_rf_to_multipoly(orig, xv, yv, zv, 3);
        // undo monicization: x -> lc * x, strip the reintroduced x-content
        std::vector<MultiPoly> hc = coeffs_in(h, xv);
        MultiPoly mapped(3);
        for (size_t i = 0; i < hc.size(); ++i) {
            MultiPoly term = hc[i] * MultiPoly::term(Monomial::unit(3, xv, static_cast<int>(i)), Rational(1));
            for (size_t j = 0; j < i; ++j) term = term * lc;
            mapped = mapped + term;
        }
        mapped = divide_exact(mapped, content_in(mapped, xv)).primitive_part();
        if (mapped.is_constant() || !try_divide(f, mapped).has_value()) {
            // the witness must divide; fall back to reporting reducibility
            // via the specialization-divided form
            throw domain_error("trivariate_irreducible: internal witness mismatch");
        }
        return result_reducible(mapped);
    }
    (void)first_good;
    throw domain_error("trivariate_irreducible: no usable lifting point found");
}

} // namespace surfparam
