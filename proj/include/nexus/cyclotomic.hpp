#pragma once

#include "nexus/unipoly.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nexus {

/// A product of cyclotomic polynomials  prod_k Phi_k^{c_k}, stored as k -> c_k
/// with every stored exponent positive. The empty product is the constant 1.
class CycloProduct {
public:
    using FactorMap = std::map<std::uint64_t, std::uint64_t>;

    CycloProduct() = default;
    /// Zero exponents are dropped; k = 0 is rejected.
    explicit CycloProduct(const FactorMap& factors);
    CycloProduct(std::initializer_list<std::pair<const std::uint64_t, std::uint64_t>> factors);

    const FactorMap& factors() const noexcept { return factors_; }
    bool isOne() const noexcept { return factors_.empty(); }
    std::uint64_t exponent(std::uint64_t k) const;
    /// sum_k c_k * phi(k)
    std::uint64_t degree() const;

    /// "Phi_1^2 * Phi_3"; "1" for the empty product.
    std::string toString() const;
    /// Inverse of toString; throws ParseError.
    static CycloProduct parse(std::string_view text);

    bool operator==(const CycloProduct&) const = default;

private:
    FactorMap factors_;
};

/// Coefficients of homogeneous monodromy formula: char = (t-1)^a0 * ((t^d-1)/(t-1))^b0.
struct HomogeneousExponents {
    std::int64_t a0 = 0;
    std::int64_t b0 = 0;
};

std::uint64_t eulerPhi(std::uint64_t k);
/// Moebius function; values up to the cache bound are memoized.
int mobius(std::uint64_t k);
/// Changes the Moebius cache bound (default 10^4); clears the cache.
void setMobiusCacheBound(std::uint64_t bound);
std::vector<std::uint64_t> divisors(std::uint64_t d);

/// k-th cyclotomic polynomial, via exact division of t^k - 1 by Phi_j for proper divisors j.
UniPoly cyclotomic(std::uint64_t k);
/// t^d - 1 = prod_{k | d} Phi_k.
CycloProduct factorUnity(std::uint64_t d);

/// (a0, b0) with b0 = ((d-1)^n - (-1)^n) / d and a0 = b0 + (-1)^n.
HomogeneousExponents homogeneousExponents(std::uint64_t n, std::uint64_t d);
/// Characteristic polynomial of the Milnor monodromy of a homogeneous isolated
/// singularity of degree d in n variables: Phi_1^{a0} * prod_{k|d, k>1} Phi_k^{b0}.
CycloProduct homogeneousChar(std::uint64_t n, std::uint64_t d);

CycloProduct gcd(const CycloProduct& a, const CycloProduct& b);
CycloProduct product(std::span<const CycloProduct> factors);
CycloProduct operator*(const CycloProduct& a, const CycloProduct& b);
/// Exponent-wise a <= b.
bool divides(const CycloProduct& a, const CycloProduct& b);
/// Sum of all roots with multiplicity: sum_k c_k * mobius(k).
std::int64_t trace(const CycloProduct& a);
UniPoly expand(const CycloProduct& a);

}  // namespace nexus
