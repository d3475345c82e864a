/* numberfield.hpp
 *
 * Univariate factorization over an algebraic number field K = Q[t]/(M) and
 * flattening of the tower K[s]/(q) back to a simple extension of Q, both via
 * Trager's norm method (squarefree norms through resultants, factorization
 * over Q, gcd pullbacks).
 */
#pragma once

#include "surfparam/fields.hpp"

#include <vector>

namespace surfparam {

// Monic irreducible factors over K of a squarefree q in K[s] (deterministic
// order).
std::vector<UP<NumberField>> nf_factor_squarefree(const NumberField& K, const UP<NumberField>& q);

// Simple-extension presentation of L = K[s]/(q), q irreducible over K:
// L = Q[theta]/(H) together with the images of K's generator t and of the
// new root s.
struct FlattenedExtension {
    NumberField L;
    NumberField::elem t_image; // K generator inside L
    NumberField::elem s_image; // class of s inside L
};

FlattenedExtension nf_flatten(const NumberField& K, const UP<NumberField>& q_irreducible);

// Image in L of a K-element under t -> t_image.
NumberField::elem nf_map_elem(const NumberField& L, const NumberField::elem& t_image,
                              const NumberField::elem& a);

// K[s]-polynomial mapped coefficientwise into L.
UP<NumberField> nf_map_poly(const NumberField& L, const NumberField::elem& t_image,
                            const UP<NumberField>& p);

} // namespace surfparam
