#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace nexus {

/// Dense integer matrix, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<mpz_class> entries);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }
    mpz_class& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const mpz_class& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
    IntMatrix power(std::size_t e) const;

    bool operator==(const IntMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<mpz_class> a_;
};

/// Invariant factors d_1 | d_2 | ... (all positive) of an integer matrix.
struct SmithForm {
    std::vector<mpz_class> invariantFactors;

    std::size_t rank() const noexcept { return invariantFactors.size(); }
    /// Invariant factors greater than one.
    std::vector<mpz_class> torsion() const;
};

/// Smith normal form by unimodular row and column operations.
SmithForm smithNormalForm(IntMatrix m);

/// Rank of the integer kernel {v in Z^cols : M v = 0}.
std::size_t kernelRank(const IntMatrix& m);

/// The block-cyclic operator (v_1, ..., v_k) -> (tau v_k, tau v_1, ..., tau v_{k-1})
/// on (Z^m)^k.
IntMatrix blockCyclic(const IntMatrix& tau, std::size_t k);

}  // namespace nexus
