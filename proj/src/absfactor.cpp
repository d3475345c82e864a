#include "surfparam/absfactor.hpp"

#include "surfparam/linalg.hpp"
#include "surfparam/polyops.hpp"

namespace surfparam {

int count_absolute_factors_bivariate(const MultiPoly& f) {
    if (f.nvars() != 2) throw structural_error("count_absolute_factors_bivariate: expected 2 variables");
    int m = f.degree_in(0);
    int n = f.degree_in(1);
    if (m < 1 || n < 1)
        throw domain_error("count_absolute_factors_bivariate: needs positive degree in both variables");
    if (!poly_gcd(f, f.derivative(0)).is_constant())
        throw domain_error("count_absolute_factors_bivariate: input must be squarefree with gcd(f, f_x) = 1");

    // Unknown layout: g-monomials x^a y^b (a < m, b <= n) first, then
    // h-monomials (a <= m, b < n). Equation rows: coefficients of
    // E = g_y*f - g*f_y - h_x*f + h*f_x, with deg_x E < 2m, deg_y E < 2n.
    const size_t g_count = static_cast<size_t>(m) * (n + 1);
    const size_t h_count = static_cast<size_t>(m + 1) * n;
    const size_t cols = g_count + h_count;
    const size_t rows = static_cast<size_t>(2 * m) * static_cast<size_t>(2 * n);

    QMatrix M(rows, cols);
    auto row_of = [&](int i, int j) { return static_cast<size_t>(i) * static_cast<size_t>(2 * n) + static_cast<size_t>(j); };

    size_t col = 0;
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b <= n; ++b, ++col) {
            for (const auto& [mm, c] : f.terms()) {
                int cdeg = mm[0], ddeg = mm[1];
                int j = b + ddeg - 1;
                if (j < 0) continue;
                long w = b - ddeg;
                if (w == 0) continue;
                M.at(row_of(a + cdeg, j), col) += c * w;
            }
        }
    }
    for (int a = 0; a <= m; ++a) {
        for (int b = 0; b < n; ++b, ++col) {
            for (const auto& [mm, c] : f.terms()) {
                int cdeg = mm[0], ddeg = mm[1];
                int i = a + cdeg - 1;
                if (i < 0) continue;
                long w = cdeg - a;
                if (w == 0) continue;
                M.at(row_of(i, b + ddeg), col) += c * w;
            }
        }
    }

    // (f_x, f_y) always solves the system, so the nullity is >= 1; a modular
    // nullity of 1 is therefore already exact.
    static const uint64_t kPrimes[] = {2147483629ull, 2147483587ull, 2147483579ull};
    for (uint64_t p : kPrimes) {
        auto nl = nullity_mod_p(M, p);
        if (!nl) continue;
        if (*nl == 1) return 1;
        break;
    }
    size_t nullity = q_nullity(M);
    if (nullity < 1 || nullity > static_cast<size_t>(f.total_degree()))
        throw domain_error("count_absolute_factors_bivariate: inconsistent solution space");
    return static_cast<int>(nullity);
}

} // namespace surfparam
