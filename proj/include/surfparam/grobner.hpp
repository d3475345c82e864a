/* grobner.hpp
 *
 * Buchberger's algorithm with the product and chain pair-skipping criteria,
 * reduced monic bases, normal forms, projective emptiness of homogeneous
 * ideals (pure-power leading-term test), and lex elimination.
 *
 * Everything is deterministic: pair selection uses the normal strategy
 * (smallest lcm first, ties by generator index) and reducers are chosen by
 * generator index.
 */
#pragma once

#include "surfparam/multipoly.hpp"

#include <vector>

namespace surfparam {

struct MonomialOrder {
    enum class Kind { grevlex, lex };
    Kind kind = Kind::grevlex;
    std::vector<int> perm; // priority list; perm[0] is the most significant slot

    static MonomialOrder make_grevlex(int nvars);
    static MonomialOrder make_lex(std::vector<int> priority);

    bool less(const Monomial& a, const Monomial& b) const;
    int nvars() const { return static_cast<int>(perm.size()); }
};

struct GroebnerBasis {
    MonomialOrder order;
    std::vector<MultiPoly> generators;         // reduced, monic, sorted by leading term
    std::vector<MultiPoly> original_ideal_gens;
};

// Leading term of p under `order` (throws on zero).
const std::pair<const Monomial, Rational>& leading_term(const MultiPoly& p, const MonomialOrder& order);

GroebnerBasis buchberger(const std::vector<MultiPoly>& gens, const MonomialOrder& order);

// Complete reduction of p modulo gb; the result has no term divisible by any
// basis leading term. normal_form(p, gb) == 0 iff p lies in the ideal.
MultiPoly normal_form(const MultiPoly& p, const GroebnerBasis& gb);

// True iff the projective vanishing set of the homogeneous generators is
// empty: every variable slot must show a pure power among the leading terms
// of a grevlex basis (zero-dimensional affine cone).
bool is_projectively_empty(const std::vector<MultiPoly>& gens);

// Generators of the elimination ideal in the kept variables, from a lex
// basis with the eliminated variables ranked largest.
std::vector<MultiPoly> eliminate(const std::vector<MultiPoly>& gens, const std::vector<int>& keep);

} // namespace surfparam
