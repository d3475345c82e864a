#include "surfparam/linalg.hpp"

namespace surfparam {

size_t q_rank(QMatrix m) {
    size_t rank = 0;
    for (size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        size_t pivot = rank;
        while (pivot < m.rows() && m.at(pivot, col) == 0) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != rank)
            for (size_t c = col; c < m.cols(); ++c) std::swap(m.at(pivot, c), m.at(rank, c));
        Rational inv = 1 / m.at(rank, col);
        for (size_t c = col; c < m.cols(); ++c) m.at(rank, c) *= inv;
        for (size_t r = 0; r < m.rows(); ++r) {
            if (r == rank || m.at(r, col) == 0) continue;
            Rational f = m.at(r, col);
            for (size_t c = col; c < m.cols(); ++c) m.at(r, c) -= f * m.at(rank, c);
        }
        ++rank;
    }
    return rank;
}

Rational q_det(QMatrix m) {
    if (m.rows() != m.cols()) throw structural_error("q_det: non-square matrix");
    Rational det(1);
    size_t n = m.rows();
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && m.at(pivot, col) == 0) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != col) {
            for (size_t c = col; c < n; ++c) std::swap(m.at(pivot, c), m.at(col, c));
            det = -det;
        }
        det *= m.at(col, col);
        Rational inv = 1 / m.at(col, col);
        for (size_t r = col + 1; r < n; ++r) {
            if (m.at(r, col) == 0) continue;
            Rational f = m.at(r, col) * inv;
            for (size_t c = col; c < n; ++c) m.at(r, c) -= f * m.at(col, c);
        }
    }
    return det;
}

std::optional<QMatrix> q_inverse(const QMatrix& m) {
    if (m.rows() != m.cols()) throw structural_error("q_inverse: non-square matrix");
    size_t n = m.rows();
    QMatrix aug(n, 2 * n);
    for (size_t r = 0; r < n; ++r) {
        for (size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, n + r) = 1;
    }
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && aug.at(pivot, col) == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        if (pivot != col)
            for (size_t c = 0; c < 2 * n; ++c) std::swap(aug.at(pivot, c), aug.at(col, c));
        Rational inv = 1 / aug.at(col, col);
        for (size_t c = 0; c < 2 * n; ++c) aug.at(col, c) *= inv;
        for (size_t r = 0; r < n; ++r) {
            if (r == col || aug.at(r, col) == 0) continue;
            Rational f = aug.at(r, col);
            for (size_t c = 0; c < 2 * n; ++c) aug.at(r, c) -= f * aug.at(col, c);
        }
    }
    QMatrix out(n, n);
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c) out.at(r, c) = aug.at(r, n + c);
    return out;
}

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

} // namespace

std::optional<size_t> nullity_mod_p(const QMatrix& m, uint64_t p) {
    std::vector<uint64_t> a(m.rows() * m.cols());
    for (size_t r = 0; r < m.rows(); ++r) {
        for (size_t c = 0; c < m.cols(); ++c) {
            const Rational& q = m.at(r, c);
            uint64_t den = mpz_fdiv_ui(q.get_den().get_mpz_t(), p);
            if (den == 0) return std::nullopt;
            uint64_t num = mpz_fdiv_ui(q.get_num().get_mpz_t(), p);
            a[r * m.cols() + c] = mulmod(num, powmod(den, p - 2, p), p);
        }
    }
    size_t rank = 0;
    for (size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        size_t pivot = rank;
        while (pivot < m.rows() && a[pivot * m.cols() + col] == 0) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != rank)
            for (size_t c = col; c < m.cols(); ++c)
                std::swap(a[pivot * m.cols() + c], a[rank * m.cols() + c]);
        uint64_t inv = powmod(a[rank * m.cols() + col], p - 2, p);
        for (size_t r = rank + 1; r < m.rows(); ++r) {
            uint64_t f = mulmod(a[r * m.cols() + col], inv, p);
            if (f == 0) continue;
            for (size_t c = col; c < m.cols(); ++c) {
                uint64_t sub = mulmod(f, a[rank * m.cols() + c], p);
                uint64_t& cell = a[r * m.cols() + c];
                cell = (cell >= sub) ? cell - sub : cell + p - sub;
            }
        }
        ++rank;
    }
    return m.cols() - rank;
}

} // namespace surfparam
