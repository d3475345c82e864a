/* polyops.hpp
 *
 * Ring-level algorithms on MultiPoly: exact division, multivariate gcd via
 * subresultant polynomial remainder sequences with content extraction, Yun
 * squarefree decomposition, and Sylvester-matrix resultants (fraction-free
 * Bareiss elimination on polynomial entries).
 */
#pragma once

#include "surfparam/multipoly.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace surfparam {

// Quotient p/q when the division is exact, std::nullopt otherwise.
std::optional<MultiPoly> try_divide(const MultiPoly& p, const MultiPoly& q);

// Exact quotient; throws domain_error when q does not divide p.
MultiPoly divide_exact(const MultiPoly& p, const MultiPoly& q);

// Normalized gcd: integer-primitive with positive canonical leading
// coefficient. gcd(0,0) = 0, gcd(p,0) = normalized p.
MultiPoly poly_gcd(const MultiPoly& p, const MultiPoly& q);

// Coefficients of p seen as a univariate polynomial in `var`; entry i is the
// coefficient of var^i (same ambient arity, var-degree 0). Zero poly -> {}.
std::vector<MultiPoly> coeffs_in(const MultiPoly& p, int var);
MultiPoly from_coeffs_in(const std::vector<MultiPoly>& cs, int var, int nvars);

// gcd of the coefficients of p in `var` (normalized).
MultiPoly content_in(const MultiPoly& p, int var);

// Pseudo-remainder: lc_var(q)^(deg_p - deg_q + 1) * p = Q*q + R with
// deg_var R < deg_var q.
MultiPoly pseudo_remainder(const MultiPoly& p, const MultiPoly& q, int var);

// Squarefree decomposition: list of (part, multiplicity), parts pairwise
// coprime, squarefree, normalized, multiplicities ascending; the product of
// part^multiplicity equals p up to a nonzero rational constant. Constant
// nonzero input yields an empty list; zero input throws.
std::vector<std::pair<MultiPoly, int>> squarefree_decomposition(const MultiPoly& p);

// Product of the distinct prime factors of p (normalized).
MultiPoly squarefree_part(const MultiPoly& p);

// Determinant of the Sylvester matrix of p and q in `var`, rows of p first.
// Requires positive degree in `var` on both sides.
MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, int var);

} // namespace surfparam
