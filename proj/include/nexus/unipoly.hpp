#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace nexus {

/// Univariate polynomial in Z[t], lowest degree first.
/// The zero polynomial has no coefficients; otherwise the last one is nonzero.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<mpz_class> coeffs);
    UniPoly(std::initializer_list<long> coeffs);

    static UniPoly constant(const mpz_class& c);
    /// t^d - 1
    static UniPoly unityMinusOne(std::uint64_t d);

    const std::vector<mpz_class>& coeffs() const noexcept { return coeffs_; }
    bool isZero() const noexcept { return coeffs_.empty(); }
    /// -1 for zero.
    std::int64_t degree() const noexcept { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
    const mpz_class& leading() const { return coeffs_.back(); }
    mpz_class coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : mpz_class(0); }
    mpz_class content() const;

    UniPoly operator-() const;
    bool operator==(const UniPoly&) const = default;

    /// "t^2 - t + 1"
    std::string toString(const std::string& var = "t") const;

private:
    void trim();
    std::vector<mpz_class> coeffs_;
};

UniPoly uniMul(const UniPoly& a, const UniPoly& b);
UniPoly uniAdd(const UniPoly& a, const UniPoly& b);
UniPoly uniSub(const UniPoly& a, const UniPoly& b);
/// Exact quotient a / b in Z[t]; throws DomainError when b does not divide a.
UniPoly uniDivExact(const UniPoly& a, const UniPoly& b);
/// gcd over Q, returned as a primitive integer polynomial with positive leading
/// coefficient. gcd(0, 0) = 0.
UniPoly uniGcd(const UniPoly& a, const UniPoly& b);
/// True when a == b or a == -b.
bool equalUpToSign(const UniPoly& a, const UniPoly& b);

}  // namespace nexus
