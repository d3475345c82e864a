/* Shared helpers for the test suites: compact polynomial construction from
 * text, deterministic random polynomial generation, canonical comparison.
 */
#pragma once

#include "surfparam/multipoly.hpp"
#include "surfparam/parser.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace testutil {

using surfparam::MultiPoly;
using surfparam::Rational;

inline MultiPoly pp(const std::string& text, const std::vector<std::string>& vars) {
    return surfparam::parse_polynomial(text, vars);
}

// Over x,y (2 vars)
inline MultiPoly p2(const std::string& text) { return pp(text, {"x", "y"}); }
// Over x,y,z (3 vars)
inline MultiPoly p3(const std::string& text) { return pp(text, {"x", "y", "z"}); }
// Over x,y,z,w (4 vars)
inline MultiPoly p4(const std::string& text) { return pp(text, {"x", "y", "z", "w"}); }

// splitmix64: deterministic stream for reproducible "random" inputs.
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed) {}
    uint64_t next() {
        state += 0x9e3779b97f4a7c15ull;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    // uniform in [lo, hi]
    long range(long lo, long hi) { return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1)); }
};

// Random polynomial with all monomials of total degree <= max_deg and small
// integer coefficients (possibly zero); guaranteed nonzero.
inline MultiPoly random_poly(Rng& rng, int nvars, int max_deg, long cmax = 5) {
    MultiPoly p(nvars);
    std::vector<int> exp(static_cast<size_t>(nvars), 0);
    // iterate all exponent tuples with total degree <= max_deg
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == nvars) {
            long c = rng.range(-cmax, cmax);
            if (c != 0) {
                surfparam::Monomial m(nvars);
                for (int i = 0; i < nvars; ++i) m[i] = exp[static_cast<size_t>(i)];
                p.add_term(m, Rational(c));
            }
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            exp[static_cast<size_t>(pos)] = e;
            self(self, pos + 1, remaining - e);
        }
        exp[static_cast<size_t>(pos)] = 0;
    };
    rec(rec, 0, max_deg);
    if (p.is_zero()) p = MultiPoly::constant(nvars, Rational(1));
    return p;
}

// Random homogeneous form of exact degree d.
inline MultiPoly random_form(Rng& rng, int nvars, int d, long cmax = 5) {
    for (;;) {
        MultiPoly p(nvars);
        std::vector<int> exp(static_cast<size_t>(nvars), 0);
        auto rec = [&](auto&& self, int pos, int remaining) -> void {
            if (pos == nvars - 1) {
                exp[static_cast<size_t>(pos)] = remaining;
                long c = rng.range(-cmax, cmax);
                if (c != 0) {
                    surfparam::Monomial m(nvars);
                    for (int i = 0; i < nvars; ++i) m[i] = exp[static_cast<size_t>(i)];
                    p.add_term(m, Rational(c));
                }
                return;
            }
            for (int e = 0; e <= remaining; ++e) {
                exp[static_cast<size_t>(pos)] = e;
                self(self, pos + 1, remaining - e);
            }
            exp[static_cast<size_t>(pos)] = 0;
        };
        rec(rec, 0, d);
        if (!p.is_zero() && p.total_degree() == d) return p;
    }
}

// Equality up to a nonzero rational constant.
inline bool equal_up_to_constant(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return a.primitive_part() == b.primitive_part() ||
           a.primitive_part() == (-b).primitive_part();
}

} // namespace testutil
