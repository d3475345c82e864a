/* unifactor.hpp
 *
 * Univariate factorization over Q via Zassenhaus: reduction mod a good small
 * prime, Cantor-Zassenhaus factorization there, linear multifactor Hensel
 * lifting past the Mignotte bound, and subset recombination with exact
 * integer division tests. See Knuth TAOCP vol. 2 (4.6.2) and Geddes,
 * Czapor & Labahn, "Algorithms for Computer Algebra", ch. 8.
 */
#pragma once

#include "surfparam/fields.hpp"

#include <cstdint>
#include <vector>

namespace surfparam {

using ZPoly = std::vector<BigInt>; // dense, trimmed, c[i] = coeff of x^i

ZPoly qpoly_to_zpoly_primitive(const QPoly& f); // clears denominators, makes primitive, lc > 0
QPoly zpoly_to_qpoly(const ZPoly& f);

// Irreducible monic factors of a squarefree monic f over F_p (p odd prime).
// Deterministic for a fixed seed.
std::vector<UP<FpField>> factor_fp_squarefree(const FpField& K, const UP<FpField>& f, uint64_t seed);

// Irreducible primitive factors of a squarefree primitive f (deg >= 1) over Z.
std::vector<ZPoly> factor_squarefree_z(const ZPoly& f);

struct QFactorization {
    Rational constant;                          // f = constant * prod factor^mult
    std::vector<std::pair<QPoly, int>> factors; // monic irreducible, deterministic order
};

QFactorization factor_univariate_q(const QPoly& f); // f nonzero

bool is_irreducible_q(const QPoly& f); // deg >= 1

} // namespace surfparam
