/* linalg.hpp
 *
 * Small dense exact linear algebra over Q (Gaussian elimination with full
 * normalization) plus a word-sized mod-p nullity fast path used to certify
 * kernel dimensions cheaply.
 */
#pragma once

#include "surfparam/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace surfparam {

class QMatrix {
public:
    QMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Rational& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
    const Rational& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

    static QMatrix identity(size_t n) {
        QMatrix m(n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

private:
    size_t rows_, cols_;
    std::vector<Rational> a_;
};

size_t q_rank(QMatrix m);
inline size_t q_nullity(const QMatrix& m) { return m.cols() - q_rank(m); }

Rational q_det(QMatrix m);
std::optional<QMatrix> q_inverse(const QMatrix& m);

// Nullity of m mod p (p an odd word prime). Returns std::nullopt when some
// denominator vanishes mod p (bad prime for this matrix).
std::optional<size_t> nullity_mod_p(const QMatrix& m, uint64_t p);

} // namespace surfparam
