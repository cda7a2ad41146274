#pragma once

#include "nexus/cyclotomic.hpp"
#include "nexus/le_numbers.hpp"
#include "nexus/smith.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nexus {

/// Data attached to one component ν of the critical locus.
struct ComponentData {
    std::uint64_t k = 1;                    // (ν · V(z0))_0: points of ν on a nearby hyperplane
    std::uint64_t mu = 1;                   // transverse Milnor number at each of those points
    std::optional<std::uint64_t> d;         // local homogeneous degree, if f_t is homogeneous there
    std::optional<CycloProduct> charH;      // characteristic polynomial of the transverse monodromy
    std::optional<IntMatrix> tau;           // fractional monodromy, mu x mu
    std::optional<std::uint64_t> fixedRank; // rank of ker(id - vertical monodromy)

    bool operator==(const ComponentData&) const = default;
};

/// Numerical data around a singularity with one-dimensional critical locus.
struct SingularSetup {
    std::uint64_t n = 1;  // f lives on C^{n+1}
    std::uint64_t mu0 = 0;
    std::optional<CycloProduct> charH0;
    std::optional<std::uint64_t> d0;
    std::vector<ComponentData> components;
    std::optional<std::uint64_t> lambda0;
    std::optional<std::uint64_t> omega;

    bool operator==(const SingularSetup&) const = default;
};

/// Fills derived fields (charH from degrees, fixedRank from tau) and rejects
/// inconsistent data with InconsistentInputError.
SingularSetup resolve(const SingularSetup& setup);

std::uint64_t lambda1FromComponents(const SingularSetup& setup);

/// gcd(charH0, prod_ν charH_ν), one factor per component; empty when any input
/// polynomial is unavailable.
std::optional<CycloProduct> divisibilityBound(const SingularSetup& setup);

/// min(mu0, lambda1, sum mu_ν, sum fixedRank_ν when every fixedRank is known).
std::uint64_t rankBound(const SingularSetup& setup);

struct CyclicKernel {
    std::size_t rank = 0;          // common value of both computations
    bool verified = false;
    std::vector<mpz_class> torsion;  // torsion of coker(id - λ), diagnostic only
};

/// Rank of ker(id - λ) for the block-cyclic λ built from tau, checked against
/// rank of ker(id - tau^k). Throws InvariantViolation if they differ.
CyclicKernel cyclicKernelRank(const IntMatrix& tau, std::uint64_t k);

enum class Application1Verdict { NonSplitting, NotApplicable };

struct Application1Result {
    Application1Verdict verdict = Application1Verdict::NotApplicable;
    std::vector<std::string> conclusions;
    std::vector<std::string> warnings;
};

/// Non-splitting test: mu0 == lambda1 forces a single smooth transverse component.
/// Throws InconsistentInputError when mu0 < lambda1.
Application1Result application1(std::uint64_t mu0, std::uint64_t lambda1);

struct Application2Result {
    std::uint64_t defect = 0;  // mu0 - lambda1
    /// Feasible s = (|Σf| · V(z0))_0 under the hypothesis rank H^{n-1}(F) = lambda1.
    std::vector<std::uint64_t> feasibleS;
    std::vector<std::string> notes;
};

/// Consequences of rank H^{n-1}(F) = lambda1: every k_ν = 1 and
/// 1 <= s, s - 1 <= mu0 - lambda1, s = 1 only when mu0 == lambda1.
/// When n and charH0 are supplied, s - 1 = mu0 - lambda1 > 0 is kept only if
/// charH0 has at least mu0 - lambda1 roots equal to (-1)^{n+1}.
Application2Result application2(std::uint64_t mu0, std::uint64_t lambda1, std::optional<std::uint64_t> n = {},
                                const std::optional<CycloProduct>& charH0 = {});

/// Each characteristic polynomial whose trace differs from (-1)^n, named.
std::vector<std::string> acampoValidate(const SingularSetup& setup);

struct Finding {
    std::string tag;
    std::string text;
    bool operator==(const Finding&) const = default;
};

/// Admissible exponent of Phi_k in the characteristic polynomial of m_{n-1}.
struct ExponentCeiling {
    std::uint64_t k = 1;
    std::uint64_t fromH0 = 0;
    std::uint64_t fromComponents = 0;
    std::uint64_t ceiling = 0;
    bool operator==(const ExponentCeiling&) const = default;
};

struct ConstraintReport {
    std::uint64_t n = 1;
    std::uint64_t mu0 = 0;
    std::uint64_t lambda1 = 0;
    std::optional<CycloProduct> divisorBound;
    std::uint64_t rankBound = 0;
    std::vector<std::uint64_t> feasibleS;
    std::optional<std::uint64_t> componentS;  // sum of k_ν when components are supplied
    Application1Verdict application1 = Application1Verdict::NotApplicable;
    std::vector<Finding> verdicts;
    std::vector<std::string> acampoViolations;
    std::vector<ExponentCeiling> exponentCeilings;
    std::vector<std::string> warnings;

    bool operator==(const ConstraintReport&) const = default;
};

ConstraintReport fullReport(const SingularSetup& setup, const std::optional<LeInvariants>& le = {});

std::string toString(Application1Verdict v);
Application1Verdict application1VerdictFromString(const std::string& s);

}  // namespace nexus
