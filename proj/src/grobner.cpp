#include "surfparam/grobner.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace surfparam {

MonomialOrder MonomialOrder::make_grevlex(int nvars) {
    MonomialOrder o;
    o.kind = Kind::grevlex;
    o.perm.resize(static_cast<size_t>(nvars));
    std::iota(o.perm.begin(), o.perm.end(), 0);
    return o;
}

MonomialOrder MonomialOrder::make_lex(std::vector<int> priority) {
    std::vector<bool> seen(priority.size(), false);
    for (int v : priority) {
        if (v < 0 || v >= static_cast<int>(priority.size()) || seen[static_cast<size_t>(v)])
            throw structural_error("MonomialOrder: priority list is not a permutation");
        seen[static_cast<size_t>(v)] = true;
    }
    MonomialOrder o;
    o.kind = Kind::lex;
    o.perm = std::move(priority);
    return o;
}

bool MonomialOrder::less(const Monomial& a, const Monomial& b) const {
    if (a.nvars() != nvars()) throw structural_error("MonomialOrder: arity mismatch");
    if (kind == Kind::lex) {
        for (int slot : perm) {
            int d = a[slot] - b[slot];
            if (d != 0) return d < 0;
        }
        return false;
    }
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    for (size_t i = perm.size(); i-- > 0;) {
        int slot = perm[i];
        int d = a[slot] - b[slot];
        if (d != 0) return d > 0;
    }
    return false;
}

const std::pair<const Monomial, Rational>& leading_term(const MultiPoly& p, const MonomialOrder& order) {
    if (p.is_zero()) throw domain_error("leading_term: zero polynomial");
    const std::pair<const Monomial, Rational>* best = nullptr;
    for (const auto& t : p.terms())
        if (!best || order.less(best->first, t.first)) best = &t;
    return *best;
}

namespace {

MultiPoly make_monic(const MultiPoly& p, const MonomialOrder& order) {
    if (p.is_zero()) return p;
    return p.scaled(1 / leading_term(p, order).second);
}

// Full reduction against a generator list (reducer chosen by index).
MultiPoly reduce_full(const MultiPoly& p, const std::vector<MultiPoly>& gens, const MonomialOrder& order) {
    MultiPoly rem(p.nvars());
    MultiPoly work = p;
    while (!work.is_zero()) {
        const auto& [lm, lc] = leading_term(work, order);
        bool reduced = false;
        for (const MultiPoly& g : gens) {
            if (g.is_zero()) continue;
            const auto& [gm, gc] = leading_term(g, order);
            if (gm.divides(lm)) {
                work = work - g.scaled(lc / gc) * MultiPoly::term(lm / gm, Rational(1));
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            MultiPoly t = MultiPoly::term(lm, lc);
            rem = rem + t;
            work = work - t;
        }
    }
    return rem;
}

} // namespace

GroebnerBasis buchberger(const std::vector<MultiPoly>& gens, const MonomialOrder& order) {
    std::vector<MultiPoly> basis;
    for (const MultiPoly& g : gens) {
        if (g.nvars() != order.nvars()) throw structural_error("buchberger: arity mismatch with order");
        if (!g.is_zero()) basis.push_back(make_monic(g, order));
    }
    if (basis.empty()) throw domain_error("buchberger: no nonzero generators");

    using Pair = std::pair<size_t, size_t>;
    std::set<Pair> pending;
    std::set<Pair> treated;
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) pending.insert({i, j});

    auto lt = [&](size_t i) -> const Monomial& { return leading_term(basis[i], order).first; };

    while (!pending.empty()) {
        // Normal strategy: smallest lcm under the order, ties by index pair.
        auto best = pending.begin();
        Monomial best_lcm = Monomial::lcm(lt(best->first), lt(best->second));
        for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
            Monomial l = Monomial::lcm(lt(it->first), lt(it->second));
            if (order.less(l, best_lcm)) {
                best = it;
                best_lcm = l;
            }
        }
        auto [i, j] = *best;
        pending.erase(best);
        treated.insert({i, j});

        // Product criterion.
        if (Monomial::lcm(lt(i), lt(j)) == lt(i) * lt(j)) continue;
        // Chain criterion.
        bool skip = false;
        for (size_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == i || k == j) continue;
            if (!lt(k).divides(best_lcm)) continue;
            Pair ik{std::min(i, k), std::max(i, k)};
            Pair jk{std::min(j, k), std::max(j, k)};
            if (treated.count(ik) && treated.count(jk)) skip = true;
        }
        if (skip) continue;

        MultiPoly spoly = basis[i] * MultiPoly::term(best_lcm / lt(i), Rational(1)) -
                          basis[j] * MultiPoly::term(best_lcm / lt(j), Rational(1));
        MultiPoly h = reduce_full(spoly, basis, order);
        if (h.is_zero()) continue;
        basis.push_back(make_monic(h, order));
        size_t n = basis.size() - 1;
        for (size_t k = 0; k < n; ++k) pending.insert({k, n});
    }

    // Minimalize: drop generators whose leading term another one divides.
    std::vector<MultiPoly> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const Monomial& mi = lt(i);
            const Monomial& mj = lt(j);
            if (mj.divides(mi) && (mi != mj || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    // Inter-reduce to the reduced basis.
    std::vector<MultiPoly> reduced(minimal.size(), MultiPoly(order.nvars()));
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<MultiPoly> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        reduced[i] = make_monic(reduce_full(minimal[i], others, order), order);
    }
    std::sort(reduced.begin(), reduced.end(), [&](const MultiPoly& a, const MultiPoly& b) {
        return order.less(leading_term(a, order).first, leading_term(b, order).first);
    });

    GroebnerBasis gb;
    gb.order = order;
    gb.generators = std::move(reduced);
    gb.original_ideal_gens = gens;
    return gb;
}

MultiPoly normal_form(const MultiPoly& p, const GroebnerBasis& gb) {
    if (p.nvars() != gb.order.nvars()) throw structural_error("normal_form: arity mismatch");
    return reduce_full(p, gb.generators, gb.order);
}

bool is_projectively_empty(const std::vector<MultiPoly>& gens) {
    std::vector<MultiPoly> nonzero;
    int nvars = -1;
    for (const MultiPoly& g : gens) {
        if (nvars < 0) nvars = g.nvars();
        if (g.nvars() != nvars) throw structural_error("is_projectively_empty: arity mismatch");
        if (!g.is_homogeneous()) throw domain_error("is_projectively_empty: non-homogeneous generator");
        if (!g.is_zero()) nonzero.push_back(g);
    }
    if (nonzero.empty()) return false; // vanishing set is all of projective space
    for (const MultiPoly& g : nonzero)
        if (g.is_constant()) return true; // unit ideal

    GroebnerBasis gb = buchberger(nonzero, MonomialOrder::make_grevlex(nvars));
    for (const MultiPoly& g : gb.generators)
        if (g.is_constant()) return true;
    // The affine cone is zero-dimensional iff every variable shows a pure
    // power among the leading terms; for homogeneous ideals a
    // zero-dimensional cone is {0}, i.e. the projective set is empty.
    for (int v = 0; v < nvars; ++v) {
        bool found = false;
        for (const MultiPoly& g : gb.generators) {
            const Monomial& m = leading_term(g, gb.order).first;
            bool pure = m[v] > 0;
            for (int u = 0; u < nvars && pure; ++u)
                if (u != v && m[u] != 0) pure = false;
            if (pure) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

std::vector<MultiPoly> eliminate(const std::vector<MultiPoly>& gens, const std::vector<int>& keep) {
    if (gens.empty()) throw domain_error("eliminate: no generators");
    int nvars = gens[0].nvars();
    std::vector<bool> kept(static_cast<size_t>(nvars), false);
    for (int v : keep) {
        if (v < 0 || v >= nvars) throw structural_error("eliminate: kept index out of range");
        kept[static_cast<size_t>(v)] = true;
    }
    std::vector<int> priority;
    for (int v = 0; v < nvars; ++v)
        if (!kept[static_cast<size_t>(v)]) priority.push_back(v);
    for (int v = 0; v < nvars; ++v)
        if (kept[static_cast<size_t>(v)]) priority.push_back(v);

    GroebnerBasis gb = buchberger(gens, MonomialOrder::make_lex(priority));
    std::vector<MultiPoly> out;
    for (const MultiPoly& g : gb.generators)
        if (g.uses_only(kept)) out.push_back(g);
    return out;
}

} // namespace surfparam
