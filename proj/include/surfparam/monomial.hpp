/* monomial.hpp
 *
 * Dense exponent vectors and the graded reverse lexicographic order used as
 * the canonical term order everywhere (printing, leading terms, maps).
 * Variable counts stay tiny (<= 4 ambient variables), so dense vectors win.
 */
#pragma once

#include "surfparam/rational.hpp"

#include <algorithm>
#include <initializer_list>
#include <numeric>
#include <vector>

namespace surfparam {

class Monomial {
public:
    explicit Monomial(int nvars) : e_(static_cast<size_t>(nvars), 0) {
        if (nvars < 0) throw structural_error("Monomial: negative variable count");
    }
    Monomial(std::initializer_list<int> exps) : e_(exps) {
        for (int v : e_)
            if (v < 0) throw structural_error("Monomial: negative exponent");
    }

    static Monomial unit(int nvars, int var, int power = 1) {
        Monomial m(nvars);
        if (var < 0 || var >= nvars) throw structural_error("Monomial::unit: variable index out of range");
        m.e_[static_cast<size_t>(var)] = power;
        return m;
    }

    int nvars() const { return static_cast<int>(e_.size()); }
    int operator[](int i) const { return e_[static_cast<size_t>(i)]; }
    int& operator[](int i) { return e_[static_cast<size_t>(i)]; }

    int total_degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }

    bool divides(const Monomial& other) const {
        for (size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > other.e_[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& other) const {
        Monomial r = *this;
        for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += other.e_[i];
        return r;
    }

    // Exact quotient; caller guarantees other.divides(*this).
    Monomial operator/(const Monomial& other) const {
        Monomial r = *this;
        for (size_t i = 0; i < e_.size(); ++i) r.e_[i] -= other.e_[i];
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r = a;
        for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
        return r;
    }

    bool is_one() const {
        return std::all_of(e_.begin(), e_.end(), [](int v) { return v == 0; });
    }

    bool operator==(const Monomial& other) const { return e_ == other.e_; }
    bool operator!=(const Monomial& other) const { return !(*this == other); }

    const std::vector<int>& exponents() const { return e_; }

private:
    std::vector<int> e_;
};

// a < b in grevlex: lower total degree, or on ties the LAST nonzero entry of
// a-b is positive. Variables are ranked x0 > x1 > ... (slot order).
inline bool grevlex_less(const Monomial& a, const Monomial& b) {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    for (int i = a.nvars() - 1; i >= 0; --i) {
        int d = a[i] - b[i];
        if (d != 0) return d > 0;
    }
    return false;
}

// Descending grevlex: map iteration starts at the leading monomial.
struct GrevlexDesc {
    bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_less(b, a); }
};

} // namespace surfparam
