/* absfactor.hpp
 *
 * Counting the absolutely irreducible (over C) factors of a squarefree
 * bivariate rational polynomial without constructing them, via the
 * Ruppert-Gao differential criterion: the solution space of
 *
 *   d/dy (g/f) = d/dx (h/f),   deg_x g <= m-1, deg_y g <= n,
 *                              deg_x h <= m,   deg_y h <= n-1
 *
 * has dimension equal to the number of absolute factors of f
 * (Gao, "Factoring multivariate polynomials via partial differential
 * equations", Math. Comp. 72 (2003); Ruppert, J. reine angew. Math. 369
 * (1986)). Solved as an exact rational nullity computation with a word-prime
 * certificate fast path.
 */
#pragma once

#include "surfparam/multipoly.hpp"

namespace surfparam {

// f: 2-variable squarefree polynomial, positive degree in both variables,
// no factor independent of x (gcd(f, df/dx) = 1).
int count_absolute_factors_bivariate(const MultiPoly& f);

} // namespace surfparam
