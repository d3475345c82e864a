#include "surfparam/multipoly.hpp"

#include <sstream>

namespace surfparam {

MultiPoly MultiPoly::constant(int nvars, const Rational& c) {
    MultiPoly p(nvars);
    p.add_term(Monomial(nvars), c);
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int var) {
    MultiPoly p(nvars);
    p.add_term(Monomial::unit(nvars, var), Rational(1));
    return p;
}

MultiPoly MultiPoly::term(const Monomial& m, const Rational& c) {
    MultiPoly p(m.nvars());
    p.add_term(m, c);
    return p;
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return kMinusInfinity;
    // Leading grevlex term has maximal total degree.
    return terms_.begin()->first.total_degree();
}

int MultiPoly::degree_in(int var) const {
    if (var < 0 || var >= nvars_) throw structural_error("degree_in: variable index out of range");
    if (terms_.empty()) return kMinusInfinity;
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
    return d;
}

Rational MultiPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
    if (m.nvars() != nvars_) throw structural_error("add_term: monomial arity mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

const std::pair<const Monomial, Rational>& MultiPoly::leading_term() const {
    if (terms_.empty()) throw domain_error("leading_term: zero polynomial");
    return *terms_.begin();
}

void MultiPoly::check_same_vars(const MultiPoly& q) const {
    if (nvars_ != q.nvars_) throw structural_error("polynomial arity mismatch");
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& q) const {
    check_same_vars(q);
    MultiPoly r = *this;
    for (const auto& [m, c] : q.terms_) r.add_term(m, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& q) const {
    check_same_vars(q);
    MultiPoly r = *this;
    for (const auto& [m, c] : q.terms_) r.add_term(m, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& q) const {
    check_same_vars(q);
    MultiPoly r(nvars_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : q.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
    MultiPoly r(nvars_);
    if (c == 0) return r;
    for (const auto& [m, co] : terms_) r.terms_.emplace(m, co * c);
    return r;
}

MultiPoly MultiPoly::pow(unsigned k) const {
    MultiPoly r = constant(nvars_, Rational(1));
    MultiPoly base = *this;
    while (k > 0) {
        if (k & 1u) r = r * base;
        k >>= 1u;
        if (k > 0) base = base * base;
    }
    return r;
}

MultiPoly MultiPoly::derivative(int var) const {
    if (var < 0 || var >= nvars_) throw structural_error("derivative: variable index out of range");
    MultiPoly r(nvars_);
    for (const auto& [m, c] : terms_) {
        int e = m[var];
        if (e == 0) continue;
        Monomial mm = m;
        mm[var] = e - 1;
        r.add_term(mm, c * e);
    }
    return r;
}

bool MultiPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.total_degree();
    for (const auto& [m, c] : terms_)
        if (m.total_degree() != d) return false;
    return true;
}

MultiPoly MultiPoly::homogenize() const {
    if (is_zero()) throw domain_error("homogenize: zero polynomial");
    int d = total_degree();
    MultiPoly r(nvars_ + 1);
    for (const auto& [m, c] : terms_) {
        Monomial mm(nvars_ + 1);
        for (int i = 0; i < nvars_; ++i) mm[i] = m[i];
        mm[nvars_] = d - m.total_degree();
        r.add_term(mm, c);
    }
    return r;
}

MultiPoly MultiPoly::restrict_to_infinity() const {
    if (!is_homogeneous()) throw domain_error("restrict_to_infinity: non-homogeneous input");
    if (nvars_ < 1) throw structural_error("restrict_to_infinity: no variables");
    MultiPoly r(nvars_ - 1);
    for (const auto& [m, c] : terms_) {
        if (m[nvars_ - 1] != 0) continue;
        Monomial mm(nvars_ - 1);
        for (int i = 0; i + 1 < nvars_; ++i) mm[i] = m[i];
        r.add_term(mm, c);
    }
    return r;
}

MultiPoly MultiPoly::substitute_one_drop(int var) const {
    if (var < 0 || var >= nvars_) throw structural_error("substitute_one_drop: variable index out of range");
    MultiPoly r(nvars_ - 1);
    for (const auto& [m, c] : terms_) {
        Monomial mm(nvars_ - 1);
        int j = 0;
        for (int i = 0; i < nvars_; ++i) {
            if (i == var) continue;
            mm[j++] = m[i];
        }
        r.add_term(mm, c);
    }
    return r;
}

MultiPoly MultiPoly::homogenize_at(int var, int d) const {
    if (var < 0 || var > nvars_) throw structural_error("homogenize_at: position out of range");
    MultiPoly r(nvars_ + 1);
    for (const auto& [m, c] : terms_) {
        int td = m.total_degree();
        if (td > d) throw domain_error("homogenize_at: target degree below term degree");
        Monomial mm(nvars_ + 1);
        int j = 0;
        for (int i = 0; i < nvars_ + 1; ++i) {
            if (i == var) {
                mm[i] = d - td;
            } else {
                mm[i] = m[j++];
            }
        }
        r.add_term(mm, c);
    }
    return r;
}

MultiPoly MultiPoly::eval_var(int var, const Rational& value) const {
    if (var < 0 || var >= nvars_) throw structural_error("eval_var: variable index out of range");
    MultiPoly r(nvars_);
    for (const auto& [m, c] : terms_) {
        Rational cc = c;
        int e = m[var];
        for (int i = 0; i < e; ++i) cc *= value;
        Monomial mm = m;
        mm[var] = 0;
        r.add_term(mm, cc);
    }
    return r;
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
    if (static_cast<int>(point.size()) != nvars_) throw structural_error("evaluate: point arity mismatch");
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < nvars_; ++i)
            for (int e = 0; e < m[i]; ++e) t *= point[i];
        acc += t;
    }
    return acc;
}

MultiPoly MultiPoly::compose(const std::vector<MultiPoly>& images) const {
    if (static_cast<int>(images.size()) != nvars_) throw structural_error("compose: image count mismatch");
    int out_vars = images.empty() ? 0 : images[0].nvars();
    for (const auto& g : images)
        if (g.nvars() != out_vars) throw structural_error("compose: image arity mismatch");
    MultiPoly r(out_vars);
    for (const auto& [m, c] : terms_) {
        MultiPoly t = MultiPoly::constant(out_vars, c);
        for (int i = 0; i < nvars_; ++i)
            if (m[i] > 0) t = t * images[static_cast<size_t>(i)].pow(static_cast<unsigned>(m[i]));
        r = r + t;
    }
    return r;
}

Rational MultiPoly::content() const {
    if (terms_.empty()) return Rational(0);
    // gcd of numerators over lcm of denominators, signed by the leading term.
    BigInt num_gcd(0), den_lcm(1);
    for (const auto& [m, c] : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rational g = rat(num_gcd, den_lcm);
    if (terms_.begin()->second < 0) g = -g;
    return g;
}

MultiPoly MultiPoly::primitive_part() const {
    if (terms_.empty()) return *this;
    Rational g = content();
    MultiPoly r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c / g);
    return r;
}

MultiPoly MultiPoly::monic() const {
    if (terms_.empty()) return *this;
    Rational lc = terms_.begin()->second;
    MultiPoly r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c / lc);
    return r;
}

bool MultiPoly::uses_only(const std::vector<bool>& vars) const {
    for (const auto& [m, c] : terms_)
        for (int i = 0; i < nvars_; ++i)
            if (m[i] > 0 && !vars[static_cast<size_t>(i)]) return false;
    return true;
}

bool MultiPoly::uses_var(int var) const {
    for (const auto& [m, c] : terms_)
        if (m[var] > 0) return true;
    return false;
}

std::string to_string(const MultiPoly& p, std::span<const std::string> var_names) {
    if (static_cast<int>(var_names.size()) != p.nvars())
        throw structural_error("to_string: variable name count mismatch");
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool need_star = false;
        if (a != 1 || m.is_one()) {
            out << rat_to_string(a);
            need_star = true;
        }
        for (int i = 0; i < p.nvars(); ++i) {
            if (m[i] == 0) continue;
            if (need_star) out << "*";
            out << var_names[static_cast<size_t>(i)];
            if (m[i] > 1) out << "^" << m[i];
            need_star = true;
        }
    }
    return out.str();
}

const std::vector<std::string>& xyz_names() {
    static const std::vector<std::string> names{"x", "y", "z"};
    return names;
}

const std::vector<std::string>& xyzw_names() {
    static const std::vector<std::string> names{"x", "y", "z", "w"};
    return names;
}

const std::vector<std::string>& x012_names() {
    static const std::vector<std::string> names{"x0", "x1", "x2"};
    return names;
}

} // namespace surfparam
