#include "surfparam/curve.hpp"

#include "surfparam/absfactor.hpp"
#include "surfparam/bifactor.hpp"
#include "surfparam/grobner.hpp"
#include "surfparam/polyops.hpp"
#include "surfparam/unifactor.hpp"

#include <algorithm>
#include <map>

namespace surfparam {

namespace {

long sweep_value(int k) { return (k % 2 == 0) ? k / 2 : -(k / 2 + 1); }

// ---- local germs over a number field -------------------------------------

using NF = NumberField;
using Elem = NF::elem;

// F(u, v) around the origin: (u-exp, v-exp) -> coefficient.
using Germ = std::map<std::pair<int, int>, Elem>;

void germ_add(const NF& K, Germ& g, int i, int j, const Elem& c) {
    if (K.is_zero(c)) return;
    auto key = std::make_pair(i, j);
    auto it = g.find(key);
    if (it == g.end()) {
        g.emplace(key, c);
    } else {
        it->second = K.add(it->second, c);
        if (K.is_zero(it->second)) g.erase(it);
    }
}

std::vector<std::vector<long>> binomial_table(int n) {
    std::vector<std::vector<long>> b(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        b[static_cast<size_t>(i)].assign(static_cast<size_t>(i) + 1, 1);
        for (int j = 1; j < i; ++j)
            b[静态cast<size_t>(i)][static_cast<size_t>(j)] =
                b[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] +
                b[static_cast<size_t>(i - 1)][static_cast<size_t>(j)];
    }
    return b;
}

// Taylor shift of a rational bivariate chart polynomial to the cluster point:
// germ(u, v) = chart(X + u, Y + v) over K.
Germ germ_at(const NF& K, const MultiPoly& chart, const Elem& X, const Elem& Y) {
    int dmax = std::max(chart.total_degree(), 0);
    auto binom = binomial_table(dmax);
    std::vector<Elem> xpow{K.one()}, ypow{K.one()};
    for (int i = 1; i <= dmax; ++i) {
        xpow.push_back(K.mul(xpow.back(), X));
        ypow.push_back(K.mul(ypow.back(), Y));
    }
    Germ g;
    for (const auto& [m, c] : chart.terms()) {
        int a = m[0], b = m[1];
        Elem base = K.from_rational(c);
        for (int k = 0; k <= a; ++k) {
            Elem cx = K.mul_int(K.mul(base, xpow[static_cast<size_t>(a - k)]),
                                binom[static_cast<size_t>(a)][static_cast<size_t>(k)]);
            for (int l = 0; l <= b; ++l) {
                Elem cxy = K.mul_int(K.mul(cx, ypow[static_cast<size_t>(b - l)]),
                                     binom[static_cast<size_t>(b)][static_cast<size_t>(l)]);
                germ_add(K, g, k, l, cxy);
            }
        }
    }
    return g;
}

int germ_multiplicity(const Germ& g) {
    int m = -1;
    for (const auto& [ij, c] : g) {
        int d = ij.first + ij.second;
        if (m < 0 || d < m) m = d;
    }
    return m; // -1 for the zero germ
}

// Tangent cone T(u, v) = degree-m part; returned as theta(s) = T(1, s)
// together with e = multiplicity of the direction (0:1) (the u-power of T).
struct TangentCone {
    UP<NF> theta;
    int e;
};

TangentCone tangent_cone(const NF& K, const Germ& g, int m) {
    UP<NF> theta(static_cast<size_t>(m) + 1, K.zero());
    for (const auto& [ij, c] : g) {
        if (ij.first + ij.second != m) continue;
        theta[static_cast<size_t>(ij.second)] = c;
    }
    up_trim(K, theta);
    return TangentCone{theta, m - up_deg(theta)};
}

bool cone_is_squarefree(const NF& K, const TangentCone& tc) {
    if (tc.e >= 2) return false;
    if (up_deg(tc.theta) < 2) return true;
    return up_deg(up_gcd(K, tc.theta, up_derivative(K, tc.theta))) == 0;
}

// F(u, u*s) / u^m: (i, j) -> (i + j - m, j).
Germ blowup_chart1(const NF& K, const Germ& g, int m) {
    Germ r;
    for (const auto& [ij, c] : g) germ_add(K, r, ij.first + ij.second - m, ij.second, c);
    return r;
}

// F(r*v, v) / v^m: (i, j) -> (i, i + j - m).
Germ blowup_chart2(const NF& K, const Germ& g, int m) {
    Germ r;
    for (const auto& [ij, c] : g) germ_add(K, r, ij.first, ij.first + ij.second - m, c);
    return r;
}

// G(u, s0 + s): shift in the second variable only.
Germ germ_shift_second(const NF& K, const Germ& g, const Elem& s0) {
    int dmax = 0;
    for (const auto& [ij, c] : g) dmax = std::max(dmax, ij.second);
    auto binom = binomial_table(dmax);
    std::vector<Elem> spow{K.one()};
    for (int i = 1; i <= dmax; ++i) spow.push_back(K.mul(spow.back(), s0));
    Germ r;
    for (const auto& [ij, c] : g) {
        int b = ij.second;
        for (int l = 0; l <= b; ++l) {
            Elem cc = K.mul_int(K.mul(c, spow[static_cast<size_t>(b - l)]),
                                binom[static_cast<size_t>(b)][static_cast<size_t>(l)]);
            germ_add(K, r, ij.first, l, cc);
        }
    }
    return r;
}

Germ germ_map_field(const NF& K, const NF& L, const Elem& t_image, const Germ& g) {
    (void)K;
    Germ r;
    for (const auto& [ij, c] : g) {
        Elem m = nf_map_elem(L, t_image, c);
        if (!L.is_zero(m)) r.emplace(ij, m);
    }
    return r;
}

// Sum of m_Q(m_Q - 1)/2 over the origin and all infinitely near points,
// per point of the current conjugacy cluster.
std::optional<long> delta_rec(const NF& K, const Germ& g, int depth_left) {
    int m = germ_multiplicity(g);
    if (m <= 0) throw domain_error("delta_invariant: germ does not vanish at the point");
    if (m == 1) return 0;
    long total = static_cast<long>(m) * (m - 1) / 2;
    TangentCone tc = tangent_cone(K, g, m);
    if (cone_is_squarefree(K, tc)) return total; // ordinary: one blowup resolves it
    if (depth_left <= 0) return std::nullopt;

    Germ bl = blowup_chart1(K, g, m);
    if (up_deg(tc.theta) >= 1) {
        UP<NF> theta = tc.theta;
        UP<NF> gsq = up_gcd(K, theta, up_derivative(K, theta));
        if (up_deg(gsq) > 0) theta = up_div(K, theta, gsq);
        for (const UP<NF>& q : nf_factor_squarefree(K, theta)) {
            if (up_deg(q) == 1) {
                Elem s0 = K.neg(K.div(q[0], q[1]));
                auto sub = delta_rec(K, germ_shift_second(K, bl, s0), depth_left - 1);
                if (!sub) return std::nullopt;
                total += *sub;
            } else {
                FlattenedExtension ext = nf_flatten(K, q);
                Germ mapped = germ_map_field(K, ext.L, ext.t_image, bl);
                auto sub = delta_rec(ext.L, germ_shift_second(ext.L, mapped, ext.s_image), depth_left - 1);
                if (!sub) return std::nullopt;
                total += static_cast<long>(up_deg(q)) * *sub;
            }
        }
    }
    if (tc.e >= 1) {
        auto sub = delta_rec(K, blowup_chart2(K, g, m), depth_left - 1);
        if (!sub) return std::nullopt;
        total += *sub;
    }
    return total;
}

// ---- singular point solving ----------------------------------------------

MultiPoly chart_poly(const MultiPoly& f, int chart) {
    switch (chart) {
        case 0: return f.substitute_one_drop(2); // (x, y)
        case 1: return f.substitute_one_drop(1); // (x, z)
        case 2: return f.substitute_one_drop(0); // (y, z)
        default: throw structural_error("chart_poly: bad chart");
    }
}

// g(x, alpha - lambda*x) over K, for a 2-variable rational g.
UP<NF> restrict_to_line(const NF& K, const MultiPoly& g, const Elem& alpha, long lambda) {
    UP<NF> line{alpha, K.from_int(-lambda)}; // alpha - lambda*x as a poly in x
    up_trim(K, line);
    int dy = std::max(g.degree_in(1), 0);
    // Horner in y: collect coefficients of y^b (polys in x over Q -> over K)
    std::vector<UP<NF>> ycoeffs(static_cast<size_t>(dy) + 1);
    for (const auto& [m, c] : g.terms()) {
        auto& cf = ycoeffs[static_cast<size_t>(m[1])];
        if (static_cast<int>(cf.size()) <= m[0]) cf.resize(static_cast<size_t>(m[0]) + 1, K.zero());
        cf[static_cast<size_t>(m[0])] = K.add(cf[static_cast<size_t>(m[0])], K.from_rational(c));
    }
    UP<NF> acc;
    for (size_t b = ycoeffs.size(); b-- > 0;) {
        up_trim(K, ycoeffs[b]);
        acc = up_mul(K, acc, line);
        acc = up_add(K, acc, ycoeffs[b]);
    }
    return acc;
}

struct AffinePoint {
    NF field;
    Elem x, y;
};

// All solutions of a zero-dimensional bivariate system, grouped into
// conjugate clusters via a separating projection t = y + lambda*x.
std::vector<AffinePoint> solve_affine_clusters(const std::vector<MultiPoly>& gens) {
    // quick emptiness test
    {
        GroebnerBasis gb = buchberger(gens, MonomialOrder::make_grevlex(2));
        for (const MultiPoly& g : gb.generators)
            if (g.is_constant()) return {};
    }

    for (int sweep = 0; sweep < 400; ++sweep) {
        long lambda = sweep_value(sweep);
        // variables (x, y, t): embed, add t - y - lambda*x, eliminate x and y
        std::vector<MultiPoly> sys;
        for (const MultiPoly& g : gens) {
            MultiPoly h(3);
            for (const auto& [m, c] : g.terms()) {
                Monomial mm(3);
                mm[0] = m[0];
                mm[1] = m[1];
                h.add_term(mm, c);
            }
            sys.push_back(h);
        }
        MultiPoly link = MultiPoly::variable(3, 2) - MultiPoly::variable(3, 1) -
                         MultiPoly::variable(3, 0).scaled(Rational(lambda));
        sys.push_back(link);
        std::vector<MultiPoly> elim = eliminate(sys, {2});
        if (elim.empty())
            throw domain_error("singular_clusters: singular locus is not zero-dimensional");
        bool unit = false;
        for (const MultiPoly& g : elim)
            if (g.is_constant()) unit = true;
        if (unit) return {};

        QPoly mu = qpoly_from(elim[0]);
        QField Q;
        QPoly musq = up_gcd(Q, mu, up_derivative(Q, mu));
        if (up_deg(musq) > 0) mu = up_div(Q, mu, musq);

        std::vector<AffinePoint> points;
        bool separating = true;
        for (const auto& [minpoly, mult] : factor_univariate_q(mu).factors) {
            (void)mult;
            NF K(minpoly);
            Elem alpha = K.generator();
            UP<NF> G;
            bool first = true;
            for (const MultiPoly& g : gens) {
                UP<NF> gk = restrict_to_line(K, g, alpha, lambda);
                G = first ? gk : up_gcd(K, G, gk);
                first = false;
                if (up_deg(G) == 0) break;
            }
            if (up_is_zero(G) || up_deg(G) == 0)
                throw domain_error("singular_clusters: inconsistent projection fiber");
            UP<NF> gsq = up_gcd(K, G, up_derivative(K, G));
            if (up_deg(gsq) > 0) G = up_div(K, G, gsq);
            if (up_deg(G) != 1) {
                separating = false;
                break;
            }
            Elem x0 = K.neg(K.div(G[0], G[1]));
            Elem y0 = K.sub(alpha, K.mul_int(x0, lambda));
            points.push_back(AffinePoint{K, x0, y0});
        }
        if (separating) return points;
    }
    throw domain_error("singular_clusters: no separating projection found");
}

QPoly qpoly_from(const MultiPoly& p); // forward declared below

std::vector<MultiPoly> jacobian_restrictions(const MultiPoly& f, int chart) {
    std::vector<MultiPoly> out;
    auto drop = [&](const MultiPoly& g) {
        switch (chart) {
            case 0: return g.substitute_one_drop(2);
            case 1: return g.substitute_one_drop(1);
            default: return g.substitute_one_drop(0);
        }
    };
    out.push_back(drop(f));
    for (int v = 0; v < 3; ++v) out.push_back(drop(f.derivative(v)));
    return out;
}

} // namespace

// univariate content of a MultiPoly known to use at most variable 0
namespace {
QPoly qpoly_from(const MultiPoly& p) {
    QPoly r(static_cast<size_t>(std::max(p.degree_in(0), 0)) + 1, Rational(0));
    for (const auto& [m, c] : p.terms()) {
        for (int v = 1; v < p.nvars(); ++v)
            if (m[v] != 0) throw structural_error("qpoly_from: polynomial is not univariate in slot 0");
        r[static_cast<size_t>(m[0])] = c;
    }
    up_trim(QField{}, r);
    return r;
}
} // namespace

std::vector<std::pair<MultiPoly, int>> factor_over_rationals(const PlaneCurve& curve) {
    std::vector<std::pair<MultiPoly, int>> out;
    for (const auto& [part, mult] : squarefree_decomposition(curve.form)) {
        MultiPoly rest = part;
        // variable factors first (they block every degree-preserving chart)
        for (int v = 0; v < 3; ++v) {
            MultiPoly var = MultiPoly::variable(3, v);
            while (!rest.is_constant()) {
                auto q = try_divide(rest, var);
                if (!q) break;
                out.emplace_back(var, mult);
                rest = *q;
            }
        }
        if (rest.is_constant()) continue;
        // charts z, y, x in order; the first degree-preserving one wins
        int chart_var = -1;
        for (int v : {2, 1, 0}) {
            if (!rest.restrict_var_zero_vanishes(v)) {
                chart_var = v;
                break;
            }
        }
        if (chart_var < 0) throw domain_error("factor_over_rationals: no degree-preserving chart");
        int d = rest.total_degree();
        MultiPoly dehom = rest.substitute_one_drop(chart_var);
        for (const MultiPoly& fac : factor_bivariate_squarefree_q(dehom)) {
            MultiPoly lifted = fac.homogenize_at(chart_var, fac.total_degree());
            out.emplace_back(lifted.primitive_part(), mult);
        }
        (void)d;
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.total_degree() != b.first.total_degree())
            return a.first.total_degree() < b.first.total_degree();
        std::string sa = to_string(a.first, xyz_names());
        std::string sb = to_string(b.first, xyz_names());
        if (sa != sb) return sa < sb;
        return a.second < b.second;
    });
    return out;
}

int count_absolute_factors(const MultiPoly& f) {
    if (f.nvars() != 3) throw structural_error("count_absolute_factors: expected 3 variables");
    if (f.is_zero() || f.is_constant()) throw domain_error("count_absolute_factors: nonconstant input required");
    {
        PlaneCurve c(f);
        auto factors = factor_over_rationals(c);
        if (factors.size() != 1 || factors[0].second != 1)
            throw domain_error("count_absolute_factors: input is not irreducible over Q");
    }
    if (f.total_degree() == 1) return 1;

    // irreducible of degree >= 2: no variable divides it, so z = 1 preserves
    // the degree
    MultiPoly g = f.substitute_one_drop(2);
    int dx = g.degree_in(0), dy = g.degree_in(1);
    if (dx == 0 || dy == 0) {
        // binary form in two of the variables: splits into deg(f) conjugate
        // linear forms over C
        return f.total_degree();
    }
    return count_absolute_factors_bivariate(g);
}

std::vector<SingularCluster> singular_clusters(const MultiPoly& f) {
    if (f.nvars() != 3) throw structural_error("singular_clusters: expected 3 variables");
    if (!f.is_homogeneous() || f.is_zero()) throw domain_error("singular_clusters: homogeneous nonzero input required");
    std::vector<SingularCluster> clusters;
    if (f.total_degree() == 1) return clusters;

    auto finalize = [&](int chart, const NF& K, const Elem& X, const Elem& Y) {
        MultiPoly cp = chart_poly(f, chart);
        Germ g = germ_at(K, cp, X, Y);
        int m = germ_multiplicity(g);
        if (m < 2) throw domain_error("singular_clusters: solver returned a smooth point");
        TangentCone tc = tangent_cone(K, g, m);
        bool ordinary = cone_is_squarefree(K, tc);
        SingularCluster c{chart, K, X, Y, K.degree(), m, ordinary, std::nullopt};
        if (ordinary) c.delta_per_point = static_cast<long>(m) * (m - 1) / 2;
        clusters.push_back(std::move(c));
    };

    // chart 0: z = 1
    {
        std::vector<MultiPoly> gens = jacobian_restrictions(f, 0);
        for (const AffinePoint& pt : solve_affine_clusters(gens)) finalize(0, pt.field, pt.x, pt.y);
    }
    // chart 1: y = 1, z = 0 (points at infinity of chart 0)
    {
        QField Q;
        QPoly G;
        bool first = true;
        for (const MultiPoly& g2 : jacobian_restrictions(f, 1)) {
            QPoly gx = qpoly_from(g2.eval_var(1, Rational(0)));
            if (first) {
                G = gx;
                first = false;
            } else {
                G = up_gcd(Q, G, gx);
            }
            if (up_deg(G) == 0) break;
        }
        if (!up_is_zero(G) && up_deg(G) >= 1) {
            QPoly gsq = up_gcd(Q, G, up_derivative(Q, G));
            if (up_deg(gsq) > 0) G = up_div(Q, G, gsq);
            for (const auto& [minpoly, mult] : factor_univariate_q(G).factors) {
                (void)mult;
                NF K(minpoly);
                finalize(1, K, K.generator(), K.zero());
            }
        } else if (up_is_zero(G)) {
            throw domain_error("singular_clusters: infinitely many singular points on z = 0");
        }
    }
    // chart 2: the point (1:0:0)
    {
        bool all_zero = true;
        std::vector<Rational> origin{Rational(1), Rational(0), Rational(0)};
        if (f.evaluate(origin) != 0) all_zero = false;
        for (int v = 0; v < 3 && all_zero; ++v)
            if (f.derivative(v).evaluate(origin) != 0) all_zero = false;
        if (all_zero) {
            NF K = rational_field();
            finalize(2, K, K.zero(), K.zero());
        }
    }
    return clusters;
}

std::optional<long> delta_invariant(const SingularCluster& cluster, const MultiPoly& f, int max_blowups) {
    if (cluster.ordinary) return static_cast<long>(cluster.multiplicity) * (cluster.multiplicity - 1) / 2;
    const NF& K = cluster.field;
    Germ g = germ_at(K, chart_poly(f, cluster.chart), cluster.x, cluster.y);
    return delta_rec(K, g, max_blowups);
}

GenusReport geometric_genus(const MultiPoly& factor, int absolute_factor_count,
                            const CurveAnalysisOptions& options) {
    GenusReport report;
    int d = factor.total_degree();
    if (absolute_factor_count == 1) {
        long genus = static_cast<long>(d - 1) * (d - 2) / 2;
        bool unresolved = false;
        for (const SingularCluster& cluster : singular_clusters(factor)) {
            auto delta = delta_invariant(cluster, factor, options.max_blowups);
            if (!delta) {
                unresolved = true;
                report.notes.push_back("BLOWUP_CAP_EXCEEDED: a singular cluster was not resolved within " +
                                       std::to_string(options.max_blowups) + " quadratic transformations");
                continue;
            }
            genus -= static_cast<long>(cluster.cluster_degree) * *delta;
        }
        if (unresolved) {
            report.status = GenusStatus::Indeterminate;
            report.rationality = Rationality::Indeterminate;
            return report;
        }
        if (genus < 0)
            throw domain_error("geometric_genus: negative genus (internal error: delta sum exceeds the arithmetic genus)");
        report.status = GenusStatus::Computed;
        report.genus = static_cast<int>(genus);
        report.rationality = genus == 0 ? Rationality::Rational : Rationality::NonRational;
        return report;
    }

    int s = absolute_factor_count;
    if (s < 1 || d % s != 0)
        throw domain_error("geometric_genus: absolute factor count does not divide the degree");
    int dper = d / s;
    if (dper <= 2) {
        report.status = GenusStatus::Computed;
        report.genus = 0;
        report.rationality = Rationality::Rational;
        report.notes.push_back("CONJUGATE_RATIONAL_FAMILY: " + std::to_string(s) +
                               " conjugate absolute components of degree " + std::to_string(dper) +
                               (dper == 1 ? " (lines)" : " (conics)") + ", each rational");
        return report;
    }
    report.status = GenusStatus::Indeterminate;
    report.rationality = Rationality::Indeterminate;
    report.notes.push_back("ABSOLUTE_FACTOR_DEGREE_LIMIT: " + std::to_string(s) +
                           " conjugate absolute components of degree " + std::to_string(dper) +
                           "; genus of conjugate components of degree >= 3 is not computed "
                           "(absolute factorization over extension fields is out of scope)");
    return report;
}

GenusReport geometric_genus(const CurveComponent& component, const CurveAnalysisOptions& options) {
    return geometric_genus(component.factor, component.absolute_factor_count, options);
}

CurveComponent analyze_component(const MultiPoly& factor, int multiplicity,
                                 const CurveAnalysisOptions& options) {
    CurveComponent c{factor, multiplicity, count_absolute_factors(factor), GenusReport{}};
    c.genus = geometric_genus(factor, c.absolute_factor_count, options);
    return c;
}

std::vector<CurveComponent> analyze_curve(const PlaneCurve& curve, const CurveAnalysisOptions& options) {
    std::vector<CurveComponent> out;
    for (const auto& [factor, mult] : factor_over_rationals(curve))
        out.push_back(analyze_component(factor, mult, options));
    return out;
}

} // namespace surfparam
