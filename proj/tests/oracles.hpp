/* oracles.hpp — test-suite oracles, independent of the library paths they
 * check: exhaustive projective point searches over small prime fields and a
 * mod-p bivariate factor counter.
 */
#pragma once

#include "surfparam/multipoly.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace oracles {

// True iff the homogeneous system has a common projective F_p-point
// (exhaustive chart-by-chart search; inputs up to 4 variables).
bool fp_projective_common_zero(const std::vector<surfparam::MultiPoly>& gens, uint64_t p);

// Number of irreducible factors of f mod p in F_p[x,y] for a squarefree
// 2-variable f; std::nullopt when p is unusable for f (degree drop,
// squarefreeness lost, denominator collision).
std::optional<int> fp_bivariate_factor_count(const surfparam::MultiPoly& f, uint64_t p);

} // namespace oracles
