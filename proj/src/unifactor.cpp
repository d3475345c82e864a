#include "surfparam/unifactor.hpp"

#include <algorithm>
#include <numeric>

namespace surfparam {

namespace {

// Deterministic splitmix64 stream for equal-degree splitting.
struct Rng {
    uint64_t state;
    uint64_t next() {
        state += 0x9e3779b97f4a7c15ull;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
};

void equal_degree_split(const FpField& K, const UP<FpField>& f, int d, Rng& rng,
                        std::vector<UP<FpField>>& out) {
    int n = up_deg(f);
    if (n == d) {
        out.push_back(f);
        return;
    }
    BigInt pd;
    mpz_pow_ui(pd.get_mpz_t(), K.p.get_mpz_t(), static_cast<unsigned long>(d));
    BigInt e = (pd - 1) / 2;
    for (;;) {
        UP<FpField> a(static_cast<size_t>(n), K.zero());
        for (auto& c : a) c = K.reduce(BigInt(static_cast<unsigned long>(rng.next() % 0xffffffffull)));
        up_trim(K, a);
        if (up_deg(a) < 1) continue;
        UP<FpField> g = up_gcd(K, a, f);
        if (up_deg(g) >= 1 && up_deg(g) < n) {
            equal_degree_split(K, g, d, rng, out);
            equal_degree_split(K, up_div(K, f, g), d, rng, out);
            return;
        }
        UP<FpField> b = up_pow_mod(K, a, e, f);
        b = up_sub(K, b, up_const(K, K.one()));
        g = up_gcd(K, b, f);
        if (up_deg(g) >= 1 && up_deg(g) < n) {
            equal_degree_split(K, g, d, rng, out);
            equal_degree_split(K, up_div(K, f, g), d, rng, out);
            return;
        }
    }
}

// Deterministic order: by degree, then coefficient vectors.
template <class P>
void sort_polys(std::vector<P>& v) {
    std::sort(v.begin(), v.end(), [](const P& a, const P& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        for (size_t i = a.size(); i-- > 0;) {
            if (a[i] != b[i]) return a[i] < b[i];
        }
        return false;
    });
}

BigInt zpoly_content(const ZPoly& f) {
    BigInt g(0);
    for (const BigInt& c : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

void ztrim(ZPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

// Exact division over Z with fail-fast divisibility checks.
bool z_try_divide(const ZPoly& f, const ZPoly& g, ZPoly* quotient) {
    if (g.empty()) throw domain_error("z_try_divide: division by zero");
    ZPoly r = f;
    ztrim(r);
    if (r.empty()) {
        if (quotient) quotient->clear();
        return true;
    }
    int dg = static_cast<int>(g.size()) - 1;
    int dr = static_cast<int>(r.size()) - 1;
    if (dr < dg) return false;
    ZPoly q(static_cast<size_t>(dr - dg) + 1, BigInt(0));
    while (static_cast<int>(r.size()) - 1 >= dg && !r.empty()) {
        BigInt c, rem;
        mpz_tdiv_qr(c.get_mpz_t(), rem.get_mpz_t(), r.back().get_mpz_t(), g.back().get_mpz_t());
        if (rem != 0) return false;
        int d = static_cast<int>(r.size()) - 1 - dg;
        q[static_cast<size_t>(d)] = c;
        for (int i = 0; i <= dg; ++i) r[static_cast<size_t>(d + i)] -= c * g[static_cast<size_t>(i)];
        ztrim(r);
    }
    if (!r.empty()) return false;
    if (quotient) *quotient = q;
    return true;
}

// ceil(sqrt(sum c_i^2)) * 2^deg * |lc|: safe coefficient bound for
// lc-adjusted factors (Mignotte).
BigInt mignotte_bound(const ZPoly& f) {
    BigInt s(0);
    for (const BigInt& c : f) s += c * c;
    BigInt n2;
    mpz_sqrt(n2.get_mpz_t(), s.get_mpz_t());
    n2 += 1;
    BigInt b = n2;
    mpz_mul_2exp(b.get_mpz_t(), b.get_mpz_t(), f.size() - 1);
    BigInt lc = f.back();
    mpz_abs(lc.get_mpz_t(), lc.get_mpz_t());
    return b * lc;
}

UP<FpField> zpoly_mod(const FpField& K, const ZPoly& f) {
    UP<FpField> r(f.size());
    for (size_t i = 0; i < f.size(); ++i) r[i] = K.reduce(f[i]);
    up_trim(K, r);
    return r;
}

ZPoly symmetric_rep(const std::vector<BigInt>& f, const BigInt& m) {
    ZPoly r = f;
    BigInt half = m / 2;
    for (BigInt& c : r)
        if (c > half) c -= m;
    ztrim(r);
    return r;
}

} // namespace

ZPoly qpoly_to_zpoly_primitive(const QPoly& f) {
    BigInt den(1);
    for (const Rational& c : f) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    ZPoly z(f.size());
    for (size_t i = 0; i < f.size(); ++i) {
        Rational c = f[i] * Rational(den);
        z[i] = c.get_num();
    }
    ztrim(z);
    if (z.empty()) return z;
    BigInt cont = zpoly_content(z);
    if (z.back() < 0) cont = -cont;
    for (BigInt& c : z) c /= cont;
    return z;
}

QPoly zpoly_to_qpoly(const ZPoly& f) {
    QPoly r(f.size());
    for (size_t i = 0; i < f.size(); ++i) r[i] = Rational(f[i]);
    return r;
}

std::vector<UP<FpField>> factor_fp_squarefree(const FpField& K, const UP<FpField>& f_in, uint64_t seed) {
    UP<FpField> f = up_monic(K, f_in);
    std::vector<UP<FpField>> out;
    if (up_deg(f) < 1) return out;
    Rng rng{seed ^ 0xa0761d6478bd642full};

    // Distinct-degree splitting: gcd with x^(p^d) - x collects the degree-d part.
    UP<FpField> h = up_x(K);
    UP<FpField> rest = f;
    for (int d = 1; 2 * d <= up_deg(rest); ++d) {
        h = up_pow_mod(K, h, K.p, rest);
        UP<FpField> g = up_gcd(K, up_sub(K, h, up_x(K)), rest);
        if (up_deg(g) >= 1) {
            equal_degree_split(K, g, d, rng, out);
            rest = up_div(K, rest, g);
            h = up_mod(K, h, rest);
        }
    }
    if (up_deg(rest) >= 1) out.push_back(rest);
    sort_polys(out);
    return out;
}

std::vector<ZPoly> factor_squarefree_z(const ZPoly& f_in) {
    ZPoly f = f_in;
    ztrim(f);
    int n = static_cast<int>(f.size()) - 1;
    if (n < 1) return {};
    if (n == 1) return {f};

    // Pick, among the first few usable primes, the one giving fewest modular
    // factors; determinism comes from the fixed prime sequence and seed.
    static const unsigned long kPrimes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31,
                                            37, 41, 43, 47, 53, 59, 61, 67, 71, 73};
    struct Choice {
        FpField K;
        std::vector<UP<FpField>> factors;
    };
    std::vector<Choice> choices;
    for (unsigned long p : kPrimes) {
        FpField K{BigInt(p)};
        if (K.reduce(f.back()) == 0) continue;
        UP<FpField> fp = zpoly_mod(K, f);
        if (up_deg(fp) != n) continue;
        UP<FpField> g = up_gcd(K, fp, up_derivative(K, fp));
        if (up_deg(g) != 0) continue; // not squarefree mod p
        choices.push_back({K, factor_fp_squarefree(K, fp, 0x5eedu + p)});
        if (choices.size() == 3) break;
    }
    if (choices.empty()) throw domain_error("factor_squarefree_z: no usable prime found (input not squarefree?)");
    const Choice* best = &choices[0];
    for (const Choice& c : choices)
        if (c.factors.size() < best->factors.size()) best = &c;
    if (best->factors.size() == 1) return {f};

    const FpField& Kp = best->K;
    const BigInt& p = Kp.p;

    // Bezout data mod p for the multifactor linear lift: sigma_i * (U/u_i) ≡ 1 (mod u_i).
    const std::vector<UP<FpField>>& base = best->factors;
    size_t r = base.size();
    std::vector<UP<FpField>> sigma(r);
    for (size_t i = 0; i < r; ++i) {
        UP<FpField> cof = up_const(Kp, Kp.one());
        for (size_t j = 0; j < r; ++j)
            if (j != i) cof = up_mod(Kp, up_mul(Kp, cof, base[j]), base[i]);
        auto [g, s, t] = up_xgcd(Kp, cof, base[i]);
        if (up_deg(g) != 0) throw domain_error("factor_squarefree_z: modular factors not coprime");
        sigma[i] = s;
    }

    BigInt bound = 2 * mignotte_bound(f) + 1;
    BigInt modulus = p;
    std::vector<ZPoly> lifted(r);
    for (size_t i = 0; i < r; ++i) {
        lifted[i] = ZPoly(base[i].begin(), base[i].end());
    }

    // Linear Hensel: after each step f ≡ lc * prod(lifted) (mod modulus * p).
    while (modulus < bound) {
        BigInt next = modulus * p;
        FpField Kn{next};
        BigInt lc_inv;
        mpz_invert(lc_inv.get_mpz_t(), f.back().get_mpz_t(), next.get_mpz_t());
        UP<FpField> target(f.size());
        for (size_t i = 0; i < f.size(); ++i) target[i] = Kn.reduce(f[i] * lc_inv);
        up_trim(Kn, target);
        UP<FpField> prod = up_const(Kn, Kn.one());
        for (size_t i = 0; i < r; ++i) {
            UP<FpField> gi(lifted[i].size());
            for (size_t j = 0; j < lifted[i].size(); ++j) gi[j] = Kn.reduce(lifted[i][j]);
            prod = up_mul(Kn, prod, gi);
        }
        UP<FpField> err = up_sub(Kn, target, prod);
        UP<FpField> c(err.size());
        for (size_t i = 0; i < err.size(); ++i) {
            BigInt q = err[i] / modulus; // exact: error divisible by current modulus
            c[i] = Kp.reduce(q);
        }
        up_trim(Kp, c);
        for (size_t i = 0; i < r; ++i) {
            UP<FpField> delta = up_mod(Kp, up_mul(Kp, sigma[i], c), base[i]);
            for (size_t j = 0; j < delta.size(); ++j) {
                if (j >= lifted[i].size()) lifted[i].resize(j + 1, BigInt(0));
                lifted[i][j] += modulus * delta[j];
            }
        }
        modulus = next;
    }

    // Subset recombination with the leading-coefficient trick.
    std::vector<ZPoly> result;
    std::vector<size_t> live(r);
    std::iota(live.begin(), live.end(), 0);
    ZPoly remaining = f;
    FpField Km{modulus};

    auto try_subset = [&](const std::vector<size_t>& subset) -> bool {
        std::vector<BigInt> prod{Km.reduce(remaining.back())};
        for (size_t idx : subset) {
            std::vector<BigInt> next(prod.size() + lifted[idx].size() - 1, BigInt(0));
            for (size_t i = 0; i < prod.size(); ++i)
                for (size_t j = 0; j < lifted[idx].size(); ++j)
                    next[i + j] = Km.reduce(next[i + j] + prod[i] * lifted[idx][j]);
            prod = std::move(next);
        }
        ZPoly cand = symmetric_rep(prod, modulus);
        if (cand.empty()) return false;
        BigInt cont = zpoly_content(cand);
        if (cand.back() < 0) cont = -cont;
        for (BigInt& c : cand) c /= cont;
        ZPoly quot;
        if (!z_try_divide(remaining, cand, &quot)) return false;
        result.push_back(cand);
        BigInt qc = zpoly_content(quot);
        if (quot.back() < 0) qc = -qc;
        for (BigInt& c : quot) c /= qc;
        remaining = quot;
        return true;
    };

    for (size_t take = 1; take <= live.size() && 2 * take <= live.size() + 1;) {
        // Enumerate size-`take` index subsets of `live` in lexicographic order.
        std::vector<size_t> pick(take);
        std::iota(pick.begin(), pick.end(), 0);
        bool found = false;
        for (;;) {
            std::vector<size_t> subset(take);
            for (size_t i = 0; i < take; ++i) subset[i] = live[pick[i]];
            if (try_subset(subset)) {
                std::vector<size_t> rest;
                for (size_t v : live)
                    if (std::find(subset.begin(), subset.end(), v) == subset.end()) rest.push_back(v);
                live = rest;
                found = true;
                break;
            }
            // next combination
            int i = static_cast<int>(take) - 1;
            while (i >= 0 && pick[static_cast<size_t>(i)] == live.size() - take + static_cast<size_t>(i)) --i;
            if (i < 0) break;
            ++pick[static_cast<size_t>(i)];
            for (size_t j = static_cast<size_t>(i) + 1; j < take; ++j) pick[j] = pick[j - 1] + 1;
        }
        if (!found) ++take;
        if (live.empty()) break;
    }
    if (!live.empty()) {
        BigInt cont = zpoly_content(remaining);
        if (remaining.back() < 0) cont = -cont;
        for (BigInt& c : remaining) c /= cont;
        result.push_back(remaining);
    }
    sort_polys(result);
    return result;
}

QFactorization factor_univariate_q(const QPoly& f_in) {
    QField Q;
    QPoly f = f_in;
    up_trim(Q, f);
    if (f.empty()) throw domain_error("factor_univariate_q: zero polynomial");
    QFactorization out;
    out.constant = f.back();
    if (up_deg(f) == 0) return out;

    // Univariate Yun decomposition, then Zassenhaus per squarefree part.
    QPoly g = up_gcd(Q, f, up_derivative(Q, f));
    QPoly c = up_div(Q, f, g);
    QPoly d = up_sub(Q, up_div(Q, up_derivative(Q, f), g), up_derivative(Q, c));
    for (int mult = 1; up_deg(c) > 0; ++mult) {
        QPoly a = up_gcd(Q, c, d);
        if (up_deg(a) > 0) {
            ZPoly az = qpoly_to_zpoly_primitive(a);
            for (const ZPoly& fac : factor_squarefree_z(az)) {
                QPoly qf = up_monic(Q, zpoly_to_qpoly(fac));
                out.factors.emplace_back(qf, mult);
            }
        }
        c = up_div(Q, c, a);
        d = up_sub(Q, up_div(Q, d, a), up_derivative(Q, c));
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        if (a.second != b.second) return a.second < b.second;
        for (size_t i = a.first.size(); i-- > 0;)
            if (a.first[i] != b.first[i]) return a.first[i] < b.first[i];
        return false;
    });
    return out;
}

bool is_irreducible_q(const QPoly& f) {
    QFactorization fac = factor_univariate_q(f);
    return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

} // namespace surfparam
