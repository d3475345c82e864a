#include "surfparam/numberfield.hpp"

#include "surfparam/polyops.hpp"
#include "surfparam/unifactor.hpp"

#include <algorithm>

namespace surfparam {

namespace {

// q(s) in K[s] as a bivariate rational polynomial Q(s, t), s = var 0, t = var 1.
MultiPoly to_bivariate(const UP<NumberField>& q) {
    MultiPoly Q(2);
    for (size_t i = 0; i < q.size(); ++i) {
        for (size_t j = 0; j < q[i].size(); ++j) {
            if (q[i][j] == 0) continue;
            Monomial m(2);
            m[0] = static_cast<int>(i);
            m[1] = static_cast<int>(j);
            Q.add_term(m, q[i][j]);
        }
    }
    return Q;
}

MultiPoly minpoly_bivariate(const NumberField& K) {
    MultiPoly M(2);
    const QPoly& m = K.minpoly();
    for (size_t j = 0; j < m.size(); ++j) {
        if (m[j] == 0) continue;
        Monomial mm(2);
        mm[1] = static_cast<int>(j);
        M.add_term(mm, m[j]);
    }
    return M;
}

QPoly to_univariate_in_s(const MultiPoly& p) {
    if (p.is_zero()) return {};
    QPoly r(static_cast<size_t>(p.degree_in(0)) + 1, Rational(0));
    for (const auto& [m, c] : p.terms()) {
        if (m[1] != 0) throw domain_error("to_univariate_in_s: unexpected t dependence");
        r[static_cast<size_t>(m[0])] = c;
    }
    up_trim(QField{}, r);
    return r;
}

// Norm of q over Q: Res_t(M(t), Q(s,t)); degenerates to Q^deg(M) when Q does
// not involve t.
QPoly norm_poly(const NumberField& K, const UP<NumberField>& q) {
    MultiPoly Q = to_bivariate(q);
    QField F;
    if (Q.degree_in(1) == 0) {
        QPoly base = to_univariate_in_s(Q);
        QPoly acc = up_const(F, F.one());
        for (int i = 0; i < K.degree(); ++i) acc = up_mul(F, acc, base);
        return acc;
    }
    MultiPoly R = resultant(minpoly_bivariate(K), Q, 1);
    return to_univariate_in_s(R);
}

bool qpoly_squarefree(const QPoly& f) {
    QField F;
    return up_deg(up_gcd(F, f, up_derivative(F, f))) == 0;
}

// Deterministic shift sweep: 0, 1, -1, 2, -2, ...
long shift_value(int k) { return (k % 2 == 0) ? k / 2 : -(k / 2 + 1); }

void sort_nf_polys(std::vector<UP<NumberField>>& v) {
    auto elem_less = [](const NumberField::elem& a, const NumberField::elem& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        for (size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    };
    std::sort(v.begin(), v.end(), [&](const UP<NumberField>& a, const UP<NumberField>& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        for (size_t i = a.size(); i-- > 0;) {
            if (!(a[i] == b[i])) return elem_less(a[i], b[i]);
        }
        return false;
    });
}

} // namespace

NumberField::elem nf_map_elem(const NumberField& L, const NumberField::elem& t_image,
                              const NumberField::elem& a) {
    NumberField::elem acc = L.zero();
    for (size_t i = a.size(); i-- > 0;) {
        acc = L.mul(acc, t_image);
        acc = L.add(acc, L.from_rational(a[i]));
    }
    return acc;
}

UP<NumberField> nf_map_poly(const NumberField& L, const NumberField::elem& t_image,
                            const UP<NumberField>& p) {
    UP<NumberField> r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[i] = nf_map_elem(L, t_image, p[i]);
    up_trim(L, r);
    return r;
}

std::vector<UP<NumberField>> nf_factor_squarefree(const NumberField& K, const UP<NumberField>& q_in) {
    UP<NumberField> q = up_monic(K, q_in);
    std::vector<UP<NumberField>> out;
    if (up_deg(q) < 1) return out;
    if (up_deg(q) == 1) {
        out.push_back(q);
        return out;
    }

    if (K.degree() == 1) {
        QPoly f(q.size());
        for (size_t i = 0; i < q.size(); ++i) f[i] = K.to_rational(q[i]);
        for (const auto& [fac, mult] : factor_univariate_q(f).factors) {
            (void)mult; // squarefree input
            UP<NumberField> g(fac.size());
            for (size_t i = 0; i < fac.size(); ++i) g[i] = K.from_rational(fac[i]);
            out.push_back(g);
        }
        sort_nf_polys(out);
        return out;
    }

    for (int k = 0; k < 64; ++k) {
        long lambda = shift_value(k);
        NumberField::elem shift = K.mul_int(K.generator(), -lambda);
        UP<NumberField> q_shift = up_compose_affine(K, q, K.one(), shift); // q(s - lambda*t)
        QPoly norm = norm_poly(K, q_shift);
        if (!qpoly_squarefree(norm)) continue;

        QFactorization nf = factor_univariate_q(norm);
        for (const auto& [h, mult] : nf.factors) {
            (void)mult;
            UP<NumberField> hK(h.size());
            for (size_t i = 0; i < h.size(); ++i) hK[i] = K.from_rational(h[i]);
            UP<NumberField> g = up_gcd(K, q_shift, hK);
            if (up_deg(g) < 1) continue;
            // undo the shift: the factor of q is g(s + lambda*t)
            UP<NumberField> fac = up_compose_affine(K, g, K.one(), K.mul_int(K.generator(), lambda));
            out.push_back(up_monic(K, fac));
        }
        sort_nf_polys(out);
        return out;
    }
    throw domain_error("nf_factor_squarefree: no squarefree norm found (input not squarefree?)");
}

FlattenedExtension nf_flatten(const NumberField& K, const UP<NumberField>& q_in) {
    UP<NumberField> q = up_monic(K, q_in);
    if (up_deg(q) < 1) throw domain_error("nf_flatten: constant polynomial");

    if (K.degree() == 1) {
        QPoly h(q.size());
        for (size_t i = 0; i < q.size(); ++i) h[i] = K.to_rational(q[i]);
        NumberField L(h);
        return FlattenedExtension{L, L.from_rational(K.to_rational(K.generator())), L.generator()};
    }
    if (up_deg(q) == 1) {
        NumberField L = K; // root already lies in K
        return FlattenedExtension{L, K.generator(), K.neg(q[0])};
    }

    for (int k = 0; k < 64; ++k) {
        long lambda = shift_value(k);
        NumberField::elem shift = K.mul_int(K.generator(), -lambda);
        UP<NumberField> q_shift = up_compose_affine(K, q, K.one(), shift);
        QPoly norm = norm_poly(K, q_shift);
        if (!qpoly_squarefree(norm)) continue;

        // q irreducible with squarefree norm => the norm is irreducible: it
        // is the minimal polynomial of theta = s - lambda*t.
        QField F;
        NumberField L(up_monic(F, norm));

        UP<NumberField> Mu(K.minpoly().size());
        for (size_t i = 0; i < K.minpoly().size(); ++i) Mu[i] = L.from_rational(K.minpoly()[i]);
        up_trim(L, Mu);

        // B(u) = q with t -> u, s -> theta + lambda*u; its gcd with M(u)
        // over L is (u - image of t).
        MultiPoly Q = to_bivariate(q);
        UP<NumberField> B;
        {
            int ds = Q.degree_in(0);
            std::vector<UP<NumberField>> s_coeffs(static_cast<size_t>(ds) + 1);
            for (const auto& [m, c] : Q.terms()) {
                auto& cf = s_coeffs[static_cast<size_t>(m[0])];
                if (static_cast<int>(cf.size()) <= m[1]) cf.resize(static_cast<size_t>(m[1]) + 1, L.zero());
                cf[static_cast<size_t>(m[1])] = L.add(cf[static_cast<size_t>(m[1])], L.from_rational(c));
            }
            UP<NumberField> lin{L.generator(), L.from_int(lambda)}; // theta + lambda*u
            up_trim(L, lin);
            for (size_t i = s_coeffs.size(); i-- > 0;) {
                up_trim(L, s_coeffs[i]);
                B = up_mul(L, B, lin);
                B = up_add(L, B, s_coeffs[i]);
            }
        }
        UP<NumberField> g = up_gcd(L, Mu, B);
        if (up_deg(g) != 1) continue;
        NumberField::elem t_image = L.neg(L.div(g[0], g[1]));
        NumberField::elem s_image = L.add(L.generator(), L.mul_int(t_image, lambda));
        return FlattenedExtension{L, t_image, s_image};
    }
    throw domain_error("nf_flatten: no separating shift found");
}

} // namespace surfparam
