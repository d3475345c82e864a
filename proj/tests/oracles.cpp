#include "oracles.hpp"

#include "surfparam/bifactor.hpp"
#include "surfparam/unifactor.hpp"

#include <algorithm>

namespace oracles {

using namespace surfparam;

namespace {

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = (a * r) % p; // p < 2^31: products fit in 64 bits
        a = (a * a) % p;
        e >>= 1;
    }
    return r;
}

struct FpTerm {
    uint64_t coeff;
    std::vector<int> exp;
};

std::vector<FpTerm> reduce_poly(const MultiPoly& f, uint64_t p) {
    std::vector<FpTerm> terms;
    for (const auto& [m, c] : f.terms()) {
        uint64_t den = mpz_fdiv_ui(c.get_den().get_mpz_t(), p);
        if (den == 0) throw domain_error("oracle: denominator vanishes mod p");
        uint64_t num = mpz_fdiv_ui(c.get_num().get_mpz_t(), p);
        uint64_t v = (num * powmod_u64(den, p - 2, p)) % p;
        if (v == 0) continue;
        terms.push_back({v, m.exponents()});
    }
    return terms;
}

} // namespace

bool fp_projective_common_zero(const std::vector<MultiPoly>& gens, uint64_t p) {
    if (gens.empty()) return true;
    int n = gens[0].nvars();
    std::vector<std::vector<FpTerm>> sys;
    for (const MultiPoly& g : gens)
        if (!g.is_zero()) sys.push_back(reduce_poly(g, p));
    if (sys.empty()) return true;
    for (const auto& s : sys)
        if (s.empty()) continue; // generator vanishes identically mod p
    int maxdeg = 0;
    for (const MultiPoly& g : gens) maxdeg = std::max(maxdeg, std::max(g.total_degree(), 0));

    std::vector<uint64_t> pt(static_cast<size_t>(n), 0);
    // power tables for the outer variables
    std::vector<std::vector<uint64_t>> pw(static_cast<size_t>(n),
                                          std::vector<uint64_t>(static_cast<size_t>(maxdeg) + 1, 1));

    auto set_powers = [&](int var, uint64_t v) {
        auto& t = pw[static_cast<size_t>(var)];
        t[0] = 1;
        for (size_t e = 1; e < t.size(); ++e) t[e] = (t[e - 1] * v) % p;
    };

    for (int lead = 0; lead < n; ++lead) {
        // chart: pt[0..lead-1] = 0, pt[lead] = 1, the rest range over F_p
        for (int i = 0; i < lead; ++i) set_powers(i, 0);
        set_powers(lead, 1);
        std::vector<int> freev;
        for (int i = lead + 1; i < n; ++i) freev.push_back(i);

        if (freev.empty()) {
            bool all_zero = true;
            for (const auto& s : sys) {
                uint64_t acc = 0;
                for (const FpTerm& t : s) {
                    uint64_t v = t.coeff;
                    for (int i = 0; i < n; ++i)
                        if (t.exp[static_cast<size_t>(i)] > 0)
                            v = (v * pw[static_cast<size_t>(i)][static_cast<size_t>(t.exp[static_cast<size_t>(i)])]) % p;
                    acc = (acc + v) % p;
                }
                if (acc != 0) {
                    all_zero = false;
                    break;
                }
            }
            if (all_zero) return true;
            continue;
        }

        int inner = freev.back();
        std::vector<int> outer(freev.begin(), freev.end() - 1);
        std::vector<uint64_t> assign(outer.size(), 0);

        // per-system univariate coefficient buffers in the inner variable
        std::vector<std::vector<uint64_t>> uni(sys.size(),
                                               std::vector<uint64_t>(static_cast<size_t>(maxdeg) + 1, 0));
        for (;;) {
            for (size_t i = 0; i < outer.size(); ++i)
                set_powers(outer[i], assign[i]);
            for (size_t s = 0; s < sys.size(); ++s) {
                std::fill(uni[s].begin(), uni[s].end(), 0);
                for (const FpTerm& t : sys[s]) {
                    uint64_t v = t.coeff;
                    bool dead = false;
                    for (int i = 0; i < n && !dead; ++i) {
                        if (i == inner || t.exp[static_cast<size_t>(i)] == 0) continue;
                        uint64_t f = pw[static_cast<size_t>(i)][static_cast<size_t>(t.exp[static_cast<size_t>(i)])];
                        if (f == 0) dead = true;
                        v = (v * f) % p;
                    }
                    if (!dead) {
                        size_t e = static_cast<size_t>(t.exp[static_cast<size_t>(inner)]);
                        uni[s][e] = (uni[s][e] + v) % p;
                    }
                }
            }
            for (uint64_t xv = 0; xv < p; ++xv) {
                // Horner on the first system entry as a filter
                uint64_t acc = 0;
                for (size_t e = uni[0].size(); e-- > 0;) acc = (acc * xv + uni[0][e]) % p;
                if (acc != 0) continue;
                bool all_zero = true;
                for (size_t s = 1; s < sys.size() && all_zero; ++s) {
                    uint64_t a2 = 0;
                    for (size_t e = uni[s].size(); e-- > 0;) a2 = (a2 * xv + uni[s][e]) % p;
                    if (a2 != 0) all_zero = false;
                }
                if (all_zero) return true;
            }
            // advance outer assignment
            size_t pos = 0;
            while (pos < assign.size()) {
                if (++assign[pos] < p) break;
                assign[pos] = 0;
                ++pos;
            }
            if (pos == assign.size()) break;
        }
    }
    return false;
}

std::optional<int> fp_bivariate_factor_count(const MultiPoly& f, uint64_t p) {
    if (f.nvars() != 2) throw structural_error("fp_bivariate_factor_count: expected 2 variables");
    FpField K{BigInt(static_cast<unsigned long>(p))};

    BiPoly<FpField> g;
    try {
        for (const auto& [m, c] : f.terms()) {
            uint64_t den = mpz_fdiv_ui(c.get_den().get_mpz_t(), p);
            if (den == 0) return std::nullopt;
            size_t i = static_cast<size_t>(m[0]);
            size_t j = static_cast<size_t>(m[1]);
            if (g.size() <= i) g.resize(i + 1);
            if (g[i].size() <= j) g[i].resize(j + 1, K.zero());
            BigInt num = K.reduce(c.get_num());
            BigInt v = K.mul(num, K.inv(K.reduce(c.get_den())));
            g[i][j] = K.add(g[i][j], v);
        }
    } catch (const domain_error&) {
        return std::nullopt;
    }
    bi_trim(K, g);
    if (bi_xdeg(g) != f.degree_in(0) || bi_ydeg(g) != f.degree_in(1)) return std::nullopt;

    // univariate content in x must be trivial for the monicization path
    if (bi_xdeg(g) < 1) return std::nullopt;
    UP<FpField> contx = g[0];
    for (size_t i = 1; i < g.size(); ++i) contx = up_gcd(K, contx, g[i]);
    if (up_deg(contx) > 0) return std::nullopt; // keep the oracle simple: skip such primes

    // monicize in x
    int d = bi_xdeg(g);
    UP<FpField> lead = g.back();
    BiPoly<FpField> gm(g.size());
    for (int i = 0; i <= d; ++i) {
        UP<FpField> gi = g[static_cast<size_t>(i)];
        for (int k = 0; k < d - 1 - i; ++k) gi = up_mul(K, gi, lead);
        gm[static_cast<size_t>(i)] = gi;
    }
    bi_trim(K, gm);

    for (uint64_t y0v = 0; y0v < p; ++y0v) {
        BigInt y0(static_cast<unsigned long>(y0v));
        UP<FpField> u = bi_eval_y(K, gm, y0);
        if (up_deg(u) != d) return std::nullopt; // cannot happen: monic
        if (up_deg(up_gcd(K, u, up_derivative(K, u))) != 0) continue;

        std::vector<UP<FpField>> base = factor_fp_squarefree(K, u, 0xfeed + p);
        if (base.size() == 1) return 1;

        BiPoly<FpField> gs = bi_shift_y(K, gm, y0);
        int yprec = bi_ydeg(gm) + 1;
        std::vector<BiPoly<FpField>> lifted = hensel_lift_bivariate(K, gs, base, yprec);
        auto accept = [&](const BiPoly<FpField>& cand) -> std::optional<BiPoly<FpField>> {
            auto [quot, rem] = bi_divrem_monic(K, gs, cand);
            (void)quot;
            if (!rem.empty()) return std::nullopt;
            return cand;
        };
        std::vector<BiPoly<FpField>> parts = recombine_factors<FpField>(K, gs, lifted, yprec, accept);
        return static_cast<int>(parts.size());
    }
    return std::nullopt; // no squarefree evaluation value mod p
}

} // namespace oracles
