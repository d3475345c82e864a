/* multipoly.hpp
 *
 * Exact multivariate polynomials over the rationals. Terms live in a map
 * ordered by descending grevlex, so iteration order, printing order and the
 * canonical leading term all coincide and every operation is deterministic.
 *
 * The zero polynomial has an empty term map; its total degree is reported as
 * the distinguished value MultiPoly::kMinusInfinity.
 */
#pragma once

#include "surfparam/monomial.hpp"
#include "surfparam/rational.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace surfparam {

class MultiPoly {
public:
    using TermMap = std::map<Monomial, Rational, GrevlexDesc>;
    static constexpr int kMinusInfinity = -1; // degree of the zero polynomial

    explicit MultiPoly(int nvars) : nvars_(nvars) {
        if (nvars < 0) throw structural_error("MultiPoly: negative variable count");
    }

    static MultiPoly constant(int nvars, const Rational& c);
    static MultiPoly variable(int nvars, int var);
    static MultiPoly term(const Monomial& m, const Rational& c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    int total_degree() const;     // kMinusInfinity for zero
    int degree_in(int var) const; // kMinusInfinity for zero

    Rational coeff(const Monomial& m) const;
    Rational constant_coeff() const { return coeff(Monomial(nvars_)); }

    // Adds c * m, erasing the term if the sum cancels.
    void add_term(const Monomial& m, const Rational& c);

    // Leading term under the canonical (grevlex) order. Zero polynomial -> throws.
    const std::pair<const Monomial, Rational>& leading_term() const;

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& q) const;
    MultiPoly operator-(const MultiPoly& q) const;
    MultiPoly operator*(const MultiPoly& q) const;
    bool operator==(const MultiPoly& q) const { return nvars_ == q.nvars_ && terms_ == q.terms_; }
    bool operator!=(const MultiPoly& q) const { return !(*this == q); }

    MultiPoly scaled(const Rational& c) const;
    MultiPoly pow(unsigned k) const;

    MultiPoly derivative(int var) const;

    bool is_homogeneous() const;

    // Appends one homogenizing variable as the LAST slot; throws on zero input.
    MultiPoly homogenize() const;

    // Substitutes 0 for the last variable and drops that slot; input must be
    // homogeneous (the last slot being the homogenizer). May return zero.
    MultiPoly restrict_to_infinity() const;

    // Substitutes 1 for `var` and drops the slot (indices above shift down).
    MultiPoly substitute_one_drop(int var) const;

    // Inserts a slot at position `var` and homogenizes to total degree d with
    // it. Inverse of substitute_one_drop on degree-preserving charts.
    MultiPoly homogenize_at(int var, int d) const;

    // Substitutes value for `var`; the slot stays (now unused).
    MultiPoly eval_var(int var, const Rational& value) const;

    Rational evaluate(std::span<const Rational> point) const;

    // Replaces variable i by images[i] (all sharing one ambient count).
    MultiPoly compose(const std::vector<MultiPoly>& images) const;

    // gcd of all (integer-normalized) coefficients with the sign of the
    // canonical leading coefficient: primitive_part() has integer coprime
    // coefficients and positive leading coefficient.
    Rational content() const;
    MultiPoly primitive_part() const;
    // Divides by the canonical leading coefficient.
    MultiPoly monic() const;

    // True for terms entirely within `vars` mask.
    bool uses_only(const std::vector<bool>& vars) const;
    bool uses_var(int var) const;

private:
    int nvars_;
    TermMap terms_;

    void check_same_vars(const MultiPoly& q) const;
};

// Canonical text: descending grevlex terms, "num/den" coefficients, explicit
// '*', '^' powers. parse_polynomial(to_string(p)) == p.
std::string to_string(const MultiPoly& p, std::span<const std::string> var_names);

// Convenience name sets.
const std::vector<std::string>& xyz_names();  // x, y, z
const std::vector<std::string>& xyzw_names(); // x, y, z, w
const std::vector<std::string>& x012_names(); // x0, x1, x2

} // namespace surfparam
