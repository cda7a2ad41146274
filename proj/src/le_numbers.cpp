#include "nexus/le_numbers.hpp"

#include "nexus/errors.hpp"

#include <random>

namespace nexus {

namespace {

constexpr const char* kLengthWarning =
    "intersection numbers are computed as colengths (length equals multiplicity when the "
    "polar curve is Cohen-Macaulay)";
constexpr const char* kGenericityWarning =
    "only the finiteness conditions on z0 are verified; full genericity is not certified";

void requireCriticalOrigin(const MultiPoly& f) {
    for (const auto& [m, c] : f.terms()) {
        if (m.degree() == 0) throw DomainError("f does not vanish at the origin");
        if (m.degree() == 1) throw DomainError("the origin is not a critical point of f");
    }
}

std::string colengthText(const Colength& c) { return c.finite() ? std::to_string(*c.value) : "INFINITE"; }

}  // namespace

SliceSetup makeSlice(const MultiPoly& f, std::span<const mpq_class> z0) {
    const std::size_t dim = f.varCount();
    if (dim < 2) throw DomainError("f needs at least two variables");
    if (z0.size() != dim) throw DomainError("z0 must have one coefficient per variable");
    requireCriticalOrigin(f);

    std::size_t pivot = dim;
    for (std::size_t i = 0; i < dim; ++i)
        if (z0[i] != 0) {
            pivot = i;
            break;
        }
    if (pivot == dim) throw DomainError("z0 must be a nonzero linear form");

    QMatrix m(dim);
    std::size_t slot = 1;
    for (std::size_t i = 0; i < dim; ++i) {
        if (i == pivot) continue;
        m(i, slot) = 1;
        m(pivot, slot) = -z0[i] / z0[pivot];
        ++slot;
    }
    m(pivot, 0) = 1 / z0[pivot];

    SliceSetup s;
    s.f = linearChange(f, m);
    s.n = dim - 1;
    s.z0.assign(z0.begin(), z0.end());
    s.change = std::move(m);
    return s;
}

Colength mu0(const SliceSetup& s, const ResourceBudget& budget) {
    MultiPoly f0 = restrictFirstVar(s.f);
    std::vector<MultiPoly> partials;
    for (std::size_t i = 0; i < f0.varCount(); ++i) partials.push_back(partial(f0, i));
    return colength(IdealPresentation(f0.varCount(), std::move(partials)), budget);
}

IdealPresentation relativeJacobian(const SliceSetup& s) {
    std::vector<MultiPoly> partials;
    for (std::size_t i = 1; i < s.f.varCount(); ++i) partials.push_back(partial(s.f, i));
    return IdealPresentation(s.f.varCount(), std::move(partials));
}

IdealPresentation polarIdeal(const SliceSetup& s, const ResourceBudget& budget) {
    return saturateElem(relativeJacobian(s), s.f, budget);
}

void checkOmegaLambda0(std::uint64_t omega, std::uint64_t lambda0) {
    if (omega < lambda0)
        throw InvariantViolation("omega < lambda0 (" + std::to_string(omega) + " < " + std::to_string(lambda0) + ")");
    if (omega == lambda0 && omega != 0)
        throw InvariantViolation("omega == lambda0 == " + std::to_string(omega) + " but equality requires both zero");
}

namespace {

struct PolarData {
    IdealPresentation polar;
    Colength lambda0;
    Colength omega;
    Colength jacobianOnHyperplane;
    Colength polarOnHyperplane;
};

PolarData polarData(const SliceSetup& s, const ResourceBudget& budget) {
    PolarData d;
    d.polar = polarIdeal(s, budget);
    const std::size_t dim = s.f.varCount();
    const MultiPoly z0 = MultiPoly::variable(dim, 0);
    d.lambda0 = colength(idealSum(d.polar, partial(s.f, 0)), budget);
    d.omega = colength(idealSum(d.polar, s.f), budget);
    d.jacobianOnHyperplane = colength(idealSum(relativeJacobian(s), z0), budget);
    d.polarOnHyperplane = colength(idealSum(d.polar, z0), budget);
    return d;
}

Colength lambda1From(const PolarData& d) {
    if (!d.jacobianOnHyperplane.finite() || !d.polarOnHyperplane.finite()) return Colength::infinite();
    if (*d.jacobianOnHyperplane.value < *d.polarOnHyperplane.value)
        throw InvariantViolation("lambda1 colength difference is negative");
    return Colength::of(*d.jacobianOnHyperplane.value - *d.polarOnHyperplane.value);
}

}  // namespace

std::uint64_t lambda0(const SliceSetup& s, const ResourceBudget& budget) {
    IdealPresentation polar = polarIdeal(s, budget);
    Colength c = colength(idealSum(polar, partial(s.f, 0)), budget);
    if (!c.finite()) throw GenericityError("lambda0 is infinite: z0 is not generic");
    return *c.value;
}

std::uint64_t omega(const SliceSetup& s, const ResourceBudget& budget) {
    PolarData d = polarData(s, budget);
    if (!d.omega.finite() || !d.lambda0.finite()) throw GenericityError("omega is infinite: z0 is not generic");
    checkOmegaLambda0(*d.omega.value, *d.lambda0.value);
    return *d.omega.value;
}

std::uint64_t lambda1(const SliceSetup& s, const ResourceBudget& budget) {
    Colength c = lambda1From(polarData(s, budget));
    if (!c.finite()) throw GenericityError("lambda1 colength is infinite: z0 is not generic");
    return *c.value;
}

LeInvariants computeAll(const SliceSetup& s, const ResourceBudget& budget) {
    LeInvariants le;
    le.mu0 = mu0(s, budget);
    if (!le.mu0.finite()) {
        le.lambda0 = le.lambda1 = le.omega = Colength::infinite();
        le.warnings.push_back("mu0 is infinite: f restricted to V(z0) has a non-isolated critical point");
        return le;
    }
    PolarData d = polarData(s, budget);
    le.lambda0 = d.lambda0;
    le.omega = d.omega;
    le.lambda1 = lambda1From(d);
    le.genericityOk = le.omega.finite() && le.lambda1.finite();
    if (!le.omega.finite()) le.warnings.push_back("omega is infinite: z0 is not generic");
    if (!le.lambda1.finite()) le.warnings.push_back("lambda1 is infinite: z0 is not generic");
    if (le.genericityOk && !le.lambda0.finite()) {
        le.genericityOk = false;
        le.warnings.push_back("lambda0 is infinite: z0 is not generic");
    }
    if (le.genericityOk) {
        checkOmegaLambda0(*le.omega.value, *le.lambda0.value);
        // ranks along both short exact sequences through the nexus must agree
        if (*le.mu0.value + *le.lambda0.value != *le.lambda1.value + *le.omega.value)
            le.warnings.push_back("rank balance mu0 + lambda0 = lambda1 + omega fails (" + colengthText(le.mu0) +
                                  " + " + colengthText(le.lambda0) + " vs " + colengthText(le.lambda1) + " + " +
                                  colengthText(le.omega) + "); z0 may not be generic");
    }
    le.warnings.push_back(kLengthWarning);
    le.warnings.push_back(kGenericityWarning);
    return le;
}

std::vector<std::vector<mpq_class>> randomLinearForms(std::size_t varCount, std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::vector<mpq_class>> out;
    while (out.size() < count) {
        std::vector<mpq_class> form(varCount);
        bool nonzero = false;
        for (auto& c : form) {
            c = static_cast<long>(rng() % 11) - 5;
            nonzero = nonzero || c != 0;
        }
        if (nonzero) out.push_back(std::move(form));
    }
    return out;
}

SliceChoice chooseSlice(const MultiPoly& f, const std::optional<std::vector<mpq_class>>& z0, std::uint64_t seed,
                        const ResourceBudget& budget, std::size_t maxRandomCandidates) {
    if (z0) {
        SliceChoice c{makeSlice(f, *z0), {}, 1};
        c.invariants = computeAll(c.slice, budget);
        if (!c.invariants.genericityOk) throw GenericityError("the supplied z0 fails the genericity checks");
        return c;
    }
    requireCriticalOrigin(f);
    const std::size_t dim = f.varCount();
    std::vector<std::vector<mpq_class>> candidates;
    for (std::size_t i = 0; i < dim; ++i) {
        std::vector<mpq_class> e(dim, 0);
        e[i] = 1;
        candidates.push_back(std::move(e));
    }
    for (auto& form : randomLinearForms(dim, maxRandomCandidates, seed)) candidates.push_back(std::move(form));

    std::size_t tried = 0;
    for (const auto& form : candidates) {
        ++tried;
        SliceChoice c{makeSlice(f, form), {}, tried};
        c.invariants = computeAll(c.slice, budget);
        if (c.invariants.genericityOk) return c;
    }
    throw GenericityError("no candidate z0 passed the genericity checks after " + std::to_string(tried) +
                          " attempts");
}

}  // namespace nexus
