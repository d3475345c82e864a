#include "surfparam/polyops.hpp"

#include <algorithm>

namespace surfparam {

namespace {

// Positive-degree variables of either polynomial, ascending.
int first_used_var(const MultiPoly& p, const MultiPoly& q) {
    for (int i = 0; i < p.nvars(); ++i)
        if (p.degree_in(i) > 0 || q.degree_in(i) > 0) return i;
    return -1;
}

MultiPoly normalized(const MultiPoly& p) { return p.is_zero() ? p : p.primitive_part(); }

// Leading coefficient of p in `var` (a polynomial of var-degree 0).
MultiPoly lead_coeff_in(const MultiPoly& p, int var) {
    int d = p.degree_in(var);
    MultiPoly lc(p.nvars());
    for (const auto& [m, c] : p.terms()) {
        if (m[var] != d) continue;
        Monomial mm = m;
        mm[var] = 0;
        lc.add_term(mm, c);
    }
    return lc;
}

} // namespace

std::optional<MultiPoly> try_divide(const MultiPoly& p, const MultiPoly& q) {
    if (p.nvars() != q.nvars()) throw structural_error("try_divide: arity mismatch");
    if (q.is_zero()) throw domain_error("try_divide: division by zero");
    MultiPoly quot(p.nvars());
    MultiPoly rem = p;
    const auto& [qm, qc] = q.leading_term();
    while (!rem.is_zero()) {
        const auto& [rm, rc] = rem.leading_term();
        if (!qm.divides(rm)) return std::nullopt;
        MultiPoly t = MultiPoly::term(rm / qm, rc / qc);
        quot = quot + t;
        rem = rem - t * q;
    }
    return quot;
}

MultiPoly divide_exact(const MultiPoly& p, const MultiPoly& q) {
    auto r = try_divide(p, q);
    if (!r) throw domain_error("divide_exact: inexact division");
    return *r;
}

std::vector<MultiPoly> coeffs_in(const MultiPoly& p, int var) {
    if (var < 0 || var >= p.nvars()) throw structural_error("coeffs_in: variable index out of range");
    int d = p.degree_in(var);
    if (p.is_zero()) return {};
    std::vector<MultiPoly> cs(static_cast<size_t>(d) + 1, MultiPoly(p.nvars()));
    for (const auto& [m, c] : p.terms()) {
        Monomial mm = m;
        mm[var] = 0;
        cs[static_cast<size_t>(m[var])].add_term(mm, c);
    }
    return cs;
}

MultiPoly from_coeffs_in(const std::vector<MultiPoly>& cs, int var, int nvars) {
    MultiPoly p(nvars);
    for (size_t i = 0; i < cs.size(); ++i) {
        if (cs[i].is_zero()) continue;
        p = p + cs[i] * MultiPoly::term(Monomial::unit(nvars, var, static_cast<int>(i)), Rational(1));
    }
    return p;
}

MultiPoly content_in(const MultiPoly& p, int var) {
    MultiPoly g(p.nvars());
    for (const MultiPoly& c : coeffs_in(p, var)) {
        if (c.is_zero()) continue;
        g = poly_gcd(g, c);
        if (!g.is_zero() && g.is_constant()) break;
    }
    return g;
}

MultiPoly pseudo_remainder(const MultiPoly& p, const MultiPoly& q, int var) {
    int dq = q.degree_in(var);
    if (q.is_zero() || dq < 0) throw domain_error("pseudo_remainder: zero divisor");
    MultiPoly lb = lead_coeff_in(q, var);
    MultiPoly r = p;
    int e = std::max(p.degree_in(var) - dq + 1, 0);
    while (!r.is_zero() && r.degree_in(var) >= dq) {
        int d = r.degree_in(var) - dq;
        MultiPoly lr = lead_coeff_in(r, var);
        MultiPoly shift = MultiPoly::term(Monomial::unit(r.nvars(), var, d), Rational(1));
        r = r * lb - lr * shift * q;
        --e;
    }
    for (; e > 0; --e) r = r * lb;
    return r;
}

MultiPoly poly_gcd(const MultiPoly& p, const MultiPoly& q) {
    if (p.nvars() != q.nvars()) throw structural_error("poly_gcd: arity mismatch");
    if (p.is_zero()) return normalized(q);
    if (q.is_zero()) return normalized(p);
    if (p.is_constant() || q.is_constant()) return MultiPoly::constant(p.nvars(), Rational(1));

    int var = first_used_var(p, q);
    if (var < 0) return MultiPoly::constant(p.nvars(), Rational(1));
    if (p.degree_in(var) == 0) return poly_gcd(content_in(q, var), p);
    if (q.degree_in(var) == 0) return poly_gcd(content_in(p, var), q);

    MultiPoly cp = content_in(p, var);
    MultiPoly cq = content_in(q, var);
    MultiPoly cont_gcd = poly_gcd(cp, cq);

    MultiPoly a = divide_exact(p, cp).primitive_part();
    MultiPoly b = divide_exact(q, cq).primitive_part();
    if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);

    // Subresultant PRS (Brown): keeps intermediate coefficients integral
    // while dividing out the predictable factors g*h^delta.
    MultiPoly g = MultiPoly::constant(p.nvars(), Rational(1));
    MultiPoly h = g;
    for (;;) {
        int delta = a.degree_in(var) - b.degree_in(var);
        MultiPoly r = pseudo_remainder(a, b, var);
        if (r.is_zero()) {
            MultiPoly pp = divide_exact(b, content_in(b, var)).primitive_part();
            return normalized(cont_gcd * pp);
        }
        if (r.degree_in(var) == 0) return normalized(cont_gcd);
        a = b;
        b = divide_exact(r, g * h.pow(static_cast<unsigned>(delta)));
        g = lead_coeff_in(a, var);
        if (delta == 0) {
            // h unchanged
        } else if (delta == 1) {
            h = g;
        } else {
            h = divide_exact(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
        }
    }
}

std::vector<std::pair<MultiPoly, int>> squarefree_decomposition(const MultiPoly& p) {
    if (p.is_zero()) throw domain_error("squarefree_decomposition: zero polynomial");
    std::vector<std::pair<MultiPoly, int>> parts;
    if (p.is_constant()) return parts;

    int var = -1;
    for (int i = 0; i < p.nvars(); ++i)
        if (p.degree_in(i) > 0) {
            var = i;
            break;
        }

    MultiPoly cont = content_in(p, var);
    MultiPoly f = divide_exact(p, cont).primitive_part();

    // Yun's algorithm along `var`; every prime factor of the primitive part
    // has positive degree in `var`, so none is missed.
    MultiPoly df = f.derivative(var);
    MultiPoly g = poly_gcd(f, df);
    MultiPoly c = divide_exact(f, g);
    MultiPoly d = divide_exact(df, g) - c.derivative(var);
    for (int i = 1; !c.is_constant(); ++i) {
        MultiPoly a = poly_gcd(c, d);
        if (!a.is_constant()) parts.emplace_back(a.primitive_part(), i);
        c = divide_exact(c, a);
        d = divide_exact(d, a) - c.derivative(var);
    }

    // Factors independent of `var` live in the content; decompose and merge.
    if (!cont.is_constant()) {
        for (auto& [part, mult] : squarefree_decomposition(cont)) {
            auto it = std::find_if(parts.begin(), parts.end(),
                                   [&](const auto& pm) { return pm.second == mult; });
            if (it == parts.end())
                parts.emplace_back(part, mult);
            else
                it->first = (it->first * part).primitive_part();
        }
    }
    std::sort(parts.begin(), parts.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    return parts;
}

MultiPoly squarefree_part(const MultiPoly& p) {
    MultiPoly r = MultiPoly::constant(p.nvars(), Rational(1));
    for (const auto& [part, mult] : squarefree_decomposition(p)) r = r * part;
    return r.primitive_part();
}

MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, int var) {
    if (p.nvars() != q.nvars()) throw structural_error("resultant: arity mismatch");
    if (var < 0 || var >= p.nvars()) throw structural_error("resultant: variable index out of range");
    int m = p.degree_in(var), n = q.degree_in(var);
    if (p.is_zero() || q.is_zero() || m <= 0 || n <= 0)
        throw domain_error("resultant: both inputs need positive degree in the variable");

    const int size = m + n;
    std::vector<MultiPoly> pc = coeffs_in(p, var);
    std::vector<MultiPoly> qc = coeffs_in(q, var);
    std::vector<std::vector<MultiPoly>> mat(
        static_cast<size_t>(size), std::vector<MultiPoly>(static_cast<size_t>(size), MultiPoly(p.nvars())));
    for (int r = 0; r < n; ++r)
        for (int j = 0; j <= m; ++j) mat[r][r + j] = pc[static_cast<size_t>(m - j)];
    for (int r = 0; r < m; ++r)
        for (int j = 0; j <= n; ++j) mat[n + r][r + j] = qc[static_cast<size_t>(n - j)];

    // Bareiss fraction-free elimination; every division is exact.
    MultiPoly prev = MultiPoly::constant(p.nvars(), Rational(1));
    int sign = 1;
    for (int k = 0; k < size - 1; ++k) {
        if (mat[k][k].is_zero()) {
            int swap_row = -1;
            for (int i = k + 1; i < size; ++i)
                if (!mat[i][k].is_zero()) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return MultiPoly(p.nvars()); // singular: resultant 0
            std::swap(mat[static_cast<size_t>(k)], mat[static_cast<size_t>(swap_row)]);
            sign = -sign;
        }
        for (int i = k + 1; i < size; ++i) {
            for (int j = k + 1; j < size; ++j)
                mat[i][j] = divide_exact(mat[k][k] * mat[i][j] - mat[i][k] * mat[k][j], prev);
            mat[i][k] = MultiPoly(p.nvars());
        }
        prev = mat[k][k];
    }
    MultiPoly det = mat[static_cast<size_t>(size - 1)][static_cast<size_t>(size - 1)];
    return sign < 0 ? -det : det;
}

} // namespace surfparam
