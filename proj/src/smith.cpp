#include "nexus/smith.hpp"

#include "nexus/errors.hpp"

#include <utility>

namespace nexus {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<mpz_class> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows * cols) throw DomainError("matrix entry count does not match its shape");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DomainError("ragged matrix literal");
        for (long v : r) a_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix product shape mismatch");
    IntMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += a(i, k) * b(k, j);
        }
    return r;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix difference shape mismatch");
    IntMatrix r = a;
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= b.a_[i];
    return r;
}

IntMatrix IntMatrix::power(std::size_t e) const {
    if (!square()) throw DomainError("power of a non-square matrix");
    IntMatrix result = identity(rows_);
    IntMatrix base = *this;
    while (e > 0) {
        if (e & 1u) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

std::vector<mpz_class> SmithForm::torsion() const {
    std::vector<mpz_class> t;
    for (const auto& d : invariantFactors)
        if (d > 1) t.push_back(d);
    return t;
}

SmithForm smithNormalForm(IntMatrix m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    SmithForm out;
    std::size_t t = 0;
    while (t < rows && t < cols) {
        // pivot: smallest nonzero magnitude in the trailing block
        std::size_t pr = rows, pc = cols;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (m(i, j) != 0 && (pr == rows || abs(m(i, j)) < abs(m(pr, pc)))) {
                    pr = i;
                    pc = j;
                }
        if (pr == rows) break;
        for (std::size_t j = 0; j < cols; ++j) std::swap(m(t, j), m(pr, j));
        for (std::size_t i = 0; i < rows; ++i) std::swap(m(i, t), m(i, pc));

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (m(i, t) == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), m(i, t).get_mpz_t(), m(t, t).get_mpz_t());
                for (std::size_t j = t; j < cols; ++j) m(i, j) -= q * m(t, j);
                if (m(i, t) != 0) {
                    for (std::size_t j = t; j < cols; ++j) std::swap(m(t, j), m(i, j));
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (m(t, j) == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), m(t, j).get_mpz_t(), m(t, t).get_mpz_t());
                for (std::size_t i = t; i < rows; ++i) m(i, j) -= q * m(i, t);
                if (m(t, j) != 0) {
                    for (std::size_t i = t; i < rows; ++i) std::swap(m(i, t), m(i, j));
                    clean = false;
                }
            }
            if (!clean) continue;
            // the pivot must divide the whole trailing block
            for (std::size_t i = t + 1; i < rows && clean; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (!mpz_divisible_p(m(i, j).get_mpz_t(), m(t, t).get_mpz_t())) {
                        for (std::size_t c = t; c < cols; ++c) m(t, c) += m(i, c);
                        clean = false;
                        break;
                    }
        }
        out.invariantFactors.push_back(abs(m(t, t)));
        ++t;
    }
    return out;
}

std::size_t kernelRank(const IntMatrix& m) { return m.cols() - smithNormalForm(m).rank(); }

IntMatrix blockCyclic(const IntMatrix& tau, std::size_t k) {
    if (!tau.square()) throw DomainError("tau must be square");
    if (k == 0) throw DomainError("cycle length must be positive");
    const std::size_t m = tau.rows();
    IntMatrix big(k * m, k * m);
    for (std::size_t block = 0; block < k; ++block) {
        std::size_t source = (block + k - 1) % k;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) big(block * m + i, source * m + j) = tau(i, j);
    }
    return big;
}

}  // namespace nexus
