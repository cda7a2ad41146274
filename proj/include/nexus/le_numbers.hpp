#pragma once

#include "nexus/local_algebra.hpp"
#include "nexus/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace nexus {

/// A function f on C^{n+1} written in coordinates where the linear form z0 is
/// variable 0. `change` maps slice coordinates back to the input coordinates:
/// x = change * w, so f_slice(w) = f_input(change * w).
struct SliceSetup {
    MultiPoly f;
    std::size_t n = 0;
    std::vector<mpq_class> z0;  // coefficients of z0 in the input coordinates
    QMatrix change;
};

/// Rewrites f so that the linear form `z0` (coefficients in f's coordinates)
/// becomes variable 0. The remaining slice variables are the input variables
/// with the first one carrying a nonzero z0-coefficient removed.
/// Throws DomainError if z0 is zero or the origin is not a critical point of f.
SliceSetup makeSlice(const MultiPoly& f, std::span<const mpq_class> z0);

/// Lê numbers and companions of f with respect to z0 at the origin.
/// Infinite colengths are kept as such; `genericityOk` is true exactly when
/// mu0, omega and lambda1 are all finite.
struct LeInvariants {
    Colength mu0;
    Colength lambda0;
    Colength lambda1;
    Colength omega;
    bool genericityOk = false;
    std::vector<std::string> warnings;
};

/// Milnor number of f0 = f restricted to V(z0); infinite when z0 is not generic
/// enough for f0 to have an isolated critical point.
Colength mu0(const SliceSetup& s, const ResourceBudget& budget = {});

/// The ideal (∂f/∂z1, ..., ∂f/∂zn) of partials in the non-z0 directions.
IdealPresentation relativeJacobian(const SliceSetup& s);

/// Relative polar curve: the relative Jacobian ideal saturated by f, which strips
/// every component lying inside V(f) and in particular the critical locus.
IdealPresentation polarIdeal(const SliceSetup& s, const ResourceBudget& budget = {});

/// (Γ · V(∂f/∂z0))_0 as a colength; throws GenericityError when infinite.
std::uint64_t lambda0(const SliceSetup& s, const ResourceBudget& budget = {});
/// (Γ · V(f))_0 as a colength; checks omega >= lambda0 with equality only at zero
/// and throws InvariantViolation otherwise, GenericityError when infinite.
std::uint64_t omega(const SliceSetup& s, const ResourceBudget& budget = {});
/// colength(J + (z0)) - colength(Γ + (z0)); throws GenericityError when either is infinite.
std::uint64_t lambda1(const SliceSetup& s, const ResourceBudget& budget = {});

LeInvariants computeAll(const SliceSetup& s, const ResourceBudget& budget = {});

/// Throws InvariantViolation unless omega >= lambda0 with equality only when both vanish.
void checkOmegaLambda0(std::uint64_t omega, std::uint64_t lambda0);

/// Chosen slice together with its invariants.
struct SliceChoice {
    SliceSetup slice;
    LeInvariants invariants;
    std::size_t candidatesTried = 0;
};

/// Uses `z0` when given. Otherwise tries the coordinate forms in order, then
/// pseudo-random forms with coefficients in [-5, 5] drawn from `seed`, and keeps
/// the first candidate passing the finiteness checks. Throws GenericityError if
/// an explicit z0 fails or no candidate passes within `maxRandomCandidates`.
SliceChoice chooseSlice(const MultiPoly& f, const std::optional<std::vector<mpq_class>>& z0, std::uint64_t seed,
                        const ResourceBudget& budget = {}, std::size_t maxRandomCandidates = 32);

/// Pseudo-random z0 candidates used by chooseSlice, exposed for reproducibility tests.
std::vector<std::vector<mpq_class>> randomLinearForms(std::size_t varCount, std::size_t count, std::uint64_t seed);

}  // namespace nexus
