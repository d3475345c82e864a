/* curve.hpp
 *
 * Plane projective curve analysis over Q: factorization into Q-irreducible
 * components, absolute factor counting, singular point clusters grouped by
 * Galois conjugacy, delta invariants through iterated quadratic
 * transformations over the cluster fields, and the geometric genus /
 * rationality verdict.
 *
 * Conjugate singular points are never split into individual algebraic
 * numbers: a cluster carries one number field Q[t]/(M) and chart coordinates
 * expressed in it, and every local computation (multiplicity, tangent cone,
 * blowups) runs over that field, extending it only through explicit
 * irreducible factors (Trager).
 */
#pragma once

#include "surfparam/multipoly.hpp"
#include "surfparam/numberfield.hpp"

#include <optional>
#include <string>
#include <vector>

namespace surfparam {

struct PlaneCurve {
    MultiPoly form; // homogeneous, nonzero, 3 variables (x, y, z)
    int degree;

    explicit PlaneCurve(MultiPoly f) : form(std::move(f)), degree(form.total_degree()) {
        if (form.nvars() != 3) throw structural_error("PlaneCurve: expected 3 variables");
        if (form.is_zero() || form.is_constant()) throw domain_error("PlaneCurve: form must be nonconstant");
        if (!form.is_homogeneous()) throw domain_error("PlaneCurve: form must be homogeneous");
    }
};

enum class GenusStatus { Computed, Indeterminate };
enum class Rationality { Rational, NonRational, Indeterminate };

struct GenusReport {
    GenusStatus status = GenusStatus::Indeterminate;
    int genus = -1; // meaningful when status == Computed
    Rationality rationality = Rationality::Indeterminate;
    std::vector<std::string> notes;
};

// One Galois orbit of singular points. Chart conventions:
//   chart 0: z = 1, local coordinates (x, y)
//   chart 1: y = 1 (points on z = 0 off (1:0:0)), local coordinates (x, z)
//   chart 2: x = 1 (the single point (1:0:0)), local coordinates (y, z)
struct SingularCluster {
    int chart;
    NumberField field;        // Q[t]/(M), M irreducible
    NumberField::elem x;      // first chart coordinate
    NumberField::elem y;      // second chart coordinate
    int cluster_degree;       // number of conjugate points = deg M
    int multiplicity;         // common multiplicity m >= 2
    bool ordinary;            // tangent cone squarefree over the cluster field
    std::optional<long> delta_per_point; // filled for ordinary clusters; else by delta_invariant
};

struct CurveAnalysisOptions {
    int max_blowups = 24;
};

struct CurveComponent {
    MultiPoly factor; // Q-irreducible homogeneous
    int multiplicity;
    int absolute_factor_count;
    GenusReport genus;
};

// Complete factorization into Q-irreducible homogeneous factors with
// multiplicities; deterministic order (degree, then canonical text).
std::vector<std::pair<MultiPoly, int>> factor_over_rationals(const PlaneCurve& curve);

// Number of absolutely irreducible factors over C of a Q-irreducible
// homogeneous form (Ruppert-Gao on a degree-preserving chart).
int count_absolute_factors(const MultiPoly& f);

// All singular points of the projective curve f = 0 (f squarefree), grouped
// into conjugate clusters; the list is empty exactly when the curve is smooth.
std::vector<SingularCluster> singular_clusters(const MultiPoly& f);

// Per-point delta invariant of a cluster of f: m(m-1)/2 for ordinary
// clusters, otherwise accumulated over all infinitely near points through
// iterated blowups; std::nullopt when the blowup cap is exceeded.
std::optional<long> delta_invariant(const SingularCluster& cluster, const MultiPoly& f,
                                    int max_blowups = CurveAnalysisOptions{}.max_blowups);

// Geometric genus and rationality of one Q-irreducible component.
GenusReport geometric_genus(const MultiPoly& factor, int absolute_factor_count,
                            const CurveAnalysisOptions& options = {});
GenusReport geometric_genus(const CurveComponent& component,
                            const CurveAnalysisOptions& options = {});

// Full component analysis of one Q-irreducible factor.
CurveComponent analyze_component(const MultiPoly& factor, int multiplicity,
                                 const CurveAnalysisOptions& options = {});

// Factor + analyze every component of a curve.
std::vector<CurveComponent> analyze_curve(const PlaneCurve& curve,
                                          const CurveAnalysisOptions& options = {});

} // namespace surfparam
