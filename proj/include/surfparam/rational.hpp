/* rational.hpp
 *
 * Exact coefficient arithmetic for the whole library: arbitrary-precision
 * rationals (GMP mpq, always canonical: gcd(|num|,den)=1, den >= 1, zero
 * stored as 0/1) plus the error types shared by every module.
 */
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace surfparam {

using BigInt = mpz_class;
using Rational = mpq_class;

// Structural misuse of an API (variable-count mismatch, bad index, ...).
class structural_error : public std::invalid_argument {
public:
    explicit structural_error(const std::string& what) : std::invalid_argument(what) {}
};

// Input outside an operation's mathematical domain (zero polynomial, ...).
class domain_error : public std::domain_error {
public:
    explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational rat(const BigInt& num, const BigInt& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// Canonical text form: "num" when den == 1, else "num/den".
inline std::string rat_to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

} // namespace surfparam
