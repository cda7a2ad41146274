#pragma once

#include "nexus/polynomial.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

namespace nexus {

/// Monomial order for computations in the local ring at the origin.
///
/// Variables [0, globalBlock) form an elimination block ordered globally
/// (graded lex) and compared first. The remaining variables are ordered by
/// negative degree, ties broken lexicographically with lower indices more
/// significant; with `globalTail` they are ordered by graded lex instead.
/// The default is a local order, where 1 is the largest monomial.
struct LocalTermOrder {
    std::size_t globalBlock = 0;
    bool globalTail = false;

    std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
    bool isGlobal() const noexcept { return globalTail; }
    bool operator==(const LocalTermOrder&) const = default;
};

/// Hard caps on standard-basis work. Exceeding any of them raises ResourceLimitError.
struct ResourceBudget {
    std::uint64_t maxPairs = 100000;
    std::uint64_t maxMonomials = 1000000;
    std::uint64_t maxReductions = 10000000;
    std::uint64_t maxCoefficientBits = 200000;
};

/// Finite generating set of an ideal of Q[x]_(x). Generators are stored nonzero and
/// primitive (integer coefficients, content 1, positive leading coefficient in
/// graded-lex order). An empty generator list presents the zero ideal.
class IdealPresentation {
public:
    IdealPresentation() = default;
    IdealPresentation(std::size_t varCount, std::vector<MultiPoly> generators);

    static IdealPresentation unit(std::size_t varCount);

    std::size_t varCount() const noexcept { return varCount_; }
    const std::vector<MultiPoly>& generators() const noexcept { return gens_; }
    bool isZero() const noexcept { return gens_.empty(); }

private:
    std::size_t varCount_ = 0;
    std::vector<MultiPoly> gens_;
};

/// Standard basis with respect to a LocalTermOrder; `staircase` lists the
/// minimal generators of the leading ideal, aligned with `basis`.
struct StandardBasis {
    std::vector<MultiPoly> basis;
    LocalTermOrder order;
    std::vector<Monomial> staircase;

    bool containsUnit() const;
};

/// Result of a colength computation; `value` is empty when the quotient is
/// infinite-dimensional.
struct Colength {
    std::optional<std::uint64_t> value;

    bool finite() const noexcept { return value.has_value(); }
    static Colength infinite() { return {}; }
    static Colength of(std::uint64_t v) { return {v}; }
    bool operator==(const Colength&) const = default;
};

/// Scales f to a primitive integer polynomial with positive leading coefficient.
MultiPoly primitivePart(const MultiPoly& f);

/// Mora weak normal form of f with respect to G. The result r satisfies
/// u*f = sum a_i g_i + r for a unit u; r is zero iff f lies in the local ideal
/// when G is a standard basis. Returned in primitive form.
MultiPoly moraReduce(const MultiPoly& f, const std::vector<MultiPoly>& G, const LocalTermOrder& order,
                     const ResourceBudget& budget = {});

/// For the plain local order the basis comes from a graded Gröbner basis of the
/// homogenized generators, dehomogenized. Other orders run Mora completion.
StandardBasis standardBasis(const IdealPresentation& ideal, const LocalTermOrder& order,
                            const ResourceBudget& budget = {});

/// Number of standard monomials under a monomial staircase in `varCount`
/// variables; infinite when some variable has no pure power in the staircase.
Colength staircaseColength(const std::vector<Monomial>& staircase, std::size_t varCount,
                           const ResourceBudget& budget = {});

/// dim_Q Q[x]_(x) / I.
Colength colength(const IdealPresentation& ideal, const ResourceBudget& budget = {});

IdealPresentation idealSum(const IdealPresentation& a, const IdealPresentation& b);
IdealPresentation idealSum(const IdealPresentation& a, const MultiPoly& g);

// Intersections, quotients and saturations commute with localization, so the
// next four are computed in Q[x] with global elimination orders. The results
// present the corresponding ideals of Q[x]_(x) as well.

/// I ∩ (g), by tag-variable elimination.
IdealPresentation intersectPrincipal(const IdealPresentation& ideal, const MultiPoly& g,
                                     const ResourceBudget& budget = {});

/// (I : g): generators of I ∩ (g), each divided by g.
IdealPresentation idealQuotientElem(const IdealPresentation& ideal, const MultiPoly& g,
                                    const ResourceBudget& budget = {});

/// (I : g^∞) by iterating idealQuotientElem until the chain stabilizes in the
/// local ring. Returned generators are a local standard basis of the saturation.
IdealPresentation saturateElem(const IdealPresentation& ideal, const MultiPoly& g,
                               const ResourceBudget& budget = {});

/// (I : g^∞) computed independently as (I + (1 - t g)) ∩ Q[x].
IdealPresentation saturateByTagVariable(const IdealPresentation& ideal, const MultiPoly& g,
                                        const ResourceBudget& budget = {});

/// Membership of f in the local ideal.
bool contains(const IdealPresentation& ideal, const MultiPoly& f, const ResourceBudget& budget = {});
/// J ⊆ I in the local ring, decided by comparing the leading ideals of I and I + J.
bool contains(const IdealPresentation& ideal, const IdealPresentation& sub, const ResourceBudget& budget = {});
bool sameIdeal(const IdealPresentation& a, const IdealPresentation& b, const ResourceBudget& budget = {});

}  // namespace nexus
