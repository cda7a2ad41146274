#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nexus {

/// Exponent vector with a cached total degree.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t varCount) : exps_(varCount, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exps);

    static Monomial variable(std::size_t varCount, std::size_t index, std::uint32_t power = 1);

    std::size_t varCount() const noexcept { return exps_.size(); }
    std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
    std::uint64_t degree() const noexcept { return degree_; }
    std::span<const std::uint32_t> exponents() const noexcept { return exps_; }
    bool isOne() const noexcept { return degree_ == 0; }

    Monomial operator*(const Monomial& other) const;
    /// True when `this` divides `other`.
    bool divides(const Monomial& other) const;
    /// Exact quotient; the caller guarantees `divisor.divides(*this)`.
    Monomial operator/(const Monomial& divisor) const;
    Monomial lcm(const Monomial& other) const;
    bool coprime(const Monomial& other) const;

    /// Copy with the variable at `index` removed.
    Monomial dropVariable(std::size_t index) const;
    /// Copy with `count` zero exponents inserted at the front.
    Monomial prependVariables(std::size_t count) const;

    bool operator==(const Monomial& other) const noexcept { return exps_ == other.exps_; }

private:
    std::vector<std::uint32_t> exps_;
    std::uint64_t degree_ = 0;
};

/// Graded lexicographic comparison: higher total degree first, then lexicographic
/// with variable 0 most significant. Canonical print/equality order.
std::strong_ordering grlexCompare(const Monomial& a, const Monomial& b);

struct GrlexDescending {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlexCompare(a, b) > 0; }
};

/// Square rational matrix, row-major.
class QMatrix {
public:
    QMatrix() = default;
    explicit QMatrix(std::size_t n) : n_(n), a_(n * n) {}
    QMatrix(std::size_t n, std::vector<mpq_class> entries);

    static QMatrix identity(std::size_t n);

    std::size_t size() const noexcept { return n_; }
    mpq_class& operator()(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
    const mpq_class& operator()(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }

    mpq_class determinant() const;
    /// Throws DomainError when singular.
    QMatrix inverse() const;

    bool operator==(const QMatrix&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<mpq_class> a_;
};

/// Exact multivariate polynomial over Q with a fixed number of variables.
/// Terms are kept in graded-lex descending order with no zero coefficients.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, mpq_class, GrlexDescending>;

    MultiPoly() = default;
    explicit MultiPoly(std::size_t varCount) : varCount_(varCount) {}

    static MultiPoly constant(std::size_t varCount, const mpq_class& c);
    static MultiPoly variable(std::size_t varCount, std::size_t index);
    static MultiPoly term(const Monomial& m, const mpq_class& c);

    std::size_t varCount() const noexcept { return varCount_; }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t termCount() const noexcept { return terms_.size(); }
    bool isZero() const noexcept { return terms_.empty(); }
    bool isConstant() const;
    /// Total degree; -1 for the zero polynomial.
    std::int64_t degree() const;
    mpq_class coefficient(const Monomial& m) const;
    /// Value at the origin.
    mpq_class constantTerm() const;

    /// Adds c*m, dropping the term if it cancels.
    void addTerm(const Monomial& m, const mpq_class& c);

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const mpq_class& c);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(MultiPoly a, const mpq_class& c) { return a *= c; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly operator-() const;
    MultiPoly pow(std::uint32_t e) const;

    /// Same polynomial viewed with `count` new leading variables.
    MultiPoly prependVariables(std::size_t count) const;

    bool operator==(const MultiPoly& o) const;

private:
    void requireSameRing(const MultiPoly& o) const;

    std::size_t varCount_ = 0;
    TermMap terms_;
};

/// Parses `text` over the named variables. Accepts + - * / ^ and parentheses;
/// '/' only by nonzero constants, '^' only by nonnegative integer literals.
/// Throws ParseError on syntax errors and unknown identifiers.
MultiPoly parse(std::string_view text, std::span<const std::string> vars);

/// Canonical text form, graded-lex descending. `parse(print(f)) == f`.
std::string print(const MultiPoly& f, std::span<const std::string> vars);

/// Formal partial derivative with respect to variable `i`.
MultiPoly partial(const MultiPoly& f, std::size_t i);

/// f(M z): substitutes variable i by sum_j M(i,j) z_j. M must be invertible.
MultiPoly linearChange(const MultiPoly& f, const QMatrix& m);

/// Sets variable 0 to zero and drops it.
MultiPoly restrictFirstVar(const MultiPoly& f);

/// Value of f at a rational point.
mpq_class evaluate(const MultiPoly& f, std::span<const mpq_class> point);

/// Default variable names x0, x1, ...
std::vector<std::string> defaultVariableNames(std::size_t count);

}  // namespace nexus
