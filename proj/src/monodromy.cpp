#include "nexus/monodromy.hpp"

#include "nexus/errors.hpp"

#include <algorithm>

namespace nexus {

namespace {

std::string describeComponent(std::size_t index) { return "component " + std::to_string(index); }

CycloProduct resolveChar(const std::optional<std::uint64_t>& degree, const std::optional<CycloProduct>& given,
                         std::uint64_t n, const std::string& who) {
    if (degree) {
        if (*degree < 2) throw InconsistentInputError(who + ": homogeneous degree must be at least 2");
        CycloProduct fromDegree = homogeneousChar(n, *degree);
        if (given && !(*given == fromDegree))
            throw InconsistentInputError(who + ": characteristic polynomial " + given->toString() +
                                         " disagrees with the homogeneous degree " + std::to_string(*degree) +
                                         " (expected " + fromDegree.toString() + ")");
        return fromDegree;
    }
    return *given;
}

}  // namespace

SingularSetup resolve(const SingularSetup& in) {
    SingularSetup s = in;
    if (s.n < 1) throw InconsistentInputError("n must be at least 1");
    if (s.d0 || s.charH0) {
        s.charH0 = resolveChar(s.d0, s.charH0, s.n, "h0");
        if (s.charH0->degree() != s.mu0)
            throw InconsistentInputError("h0: characteristic polynomial has degree " +
                                         std::to_string(s.charH0->degree()) + " but mu0 = " + std::to_string(s.mu0));
    }
    for (std::size_t i = 0; i < s.components.size(); ++i) {
        auto& c = s.components[i];
        const std::string who = describeComponent(i);
        if (c.k < 1) throw InconsistentInputError(who + ": k must be positive");
        if (c.mu < 1) throw InconsistentInputError(who + ": mu must be positive");
        if (c.d || c.charH) {
            c.charH = resolveChar(c.d, c.charH, s.n, who);
            if (c.charH->degree() != c.mu)
                throw InconsistentInputError(who + ": characteristic polynomial has degree " +
                                             std::to_string(c.charH->degree()) + " but mu = " + std::to_string(c.mu));
        }
        if (c.tau) {
            if (c.tau->rows() != c.mu || !c.tau->square())
                throw InconsistentInputError(who + ": tau must be a mu x mu matrix");
            std::uint64_t fromTau = cyclicKernelRank(*c.tau, c.k).rank;
            if (c.fixedRank && *c.fixedRank != fromTau)
                throw InconsistentInputError(who + ": fixedRank " + std::to_string(*c.fixedRank) +
                                             " disagrees with rank ker(id - tau^k) = " + std::to_string(fromTau));
            c.fixedRank = fromTau;
        }
        if (c.fixedRank && *c.fixedRank > c.mu) throw InconsistentInputError(who + ": fixedRank exceeds mu");
    }
    if (s.lambda0 && s.omega) {
        try {
            checkOmegaLambda0(*s.omega, *s.lambda0);
        } catch (const InvariantViolation& e) {
            throw InconsistentInputError(std::string("supplied omega/lambda0: ") + e.what());
        }
    }
    return s;
}

std::uint64_t lambda1FromComponents(const SingularSetup& setup) {
    std::uint64_t sum = 0;
    for (const auto& c : setup.components) sum += c.k * c.mu;
    return sum;
}

std::optional<CycloProduct> divisibilityBound(const SingularSetup& in) {
    SingularSetup s = resolve(in);
    if (!s.charH0) return std::nullopt;
    std::vector<CycloProduct> factors;
    for (const auto& c : s.components) {
        if (!c.charH) return std::nullopt;
        factors.push_back(*c.charH);
    }
    CycloProduct prod = product(factors);
    CycloProduct bound = gcd(*s.charH0, prod);
    if (!divides(bound, *s.charH0) || !divides(bound, prod))
        throw InvariantViolation("divisibility bound does not divide its inputs");
    return bound;
}

std::uint64_t rankBound(const SingularSetup& in) {
    SingularSetup s = resolve(in);
    std::uint64_t muSum = 0;
    std::uint64_t fixedSum = 0;
    bool allFixed = !s.components.empty();
    for (const auto& c : s.components) {
        muSum += c.mu;
        if (c.fixedRank)
            fixedSum += *c.fixedRank;
        else
            allFixed = false;
    }
    std::uint64_t bound = std::min({s.mu0, lambda1FromComponents(s), muSum});
    if (allFixed) bound = std::min(bound, fixedSum);
    return bound;
}

CyclicKernel cyclicKernelRank(const IntMatrix& tau, std::uint64_t k) {
    if (!tau.square()) throw DomainError("tau must be square");
    if (k < 1) throw DomainError("k must be positive");
    const IntMatrix lambda = blockCyclic(tau, k);
    const SmithForm cyclic = smithNormalForm(IntMatrix::identity(lambda.rows()) - lambda);
    const std::size_t viaCycle = lambda.cols() - cyclic.rank();
    const std::size_t viaPower = kernelRank(IntMatrix::identity(tau.rows()) - tau.power(k));
    if (viaCycle != viaPower)
        throw InvariantViolation("rank ker(id - lambda) = " + std::to_string(viaCycle) +
                                 " but rank ker(id - tau^k) = " + std::to_string(viaPower));
    return {viaCycle, true, cyclic.torsion()};
}

Application1Result application1(std::uint64_t mu0, std::uint64_t lambda1) {
    if (mu0 < lambda1)
        throw InconsistentInputError("mu0 < lambda1 (" + std::to_string(mu0) + " < " + std::to_string(lambda1) +
                                     ") is impossible");
    Application1Result r;
    if (mu0 != lambda1) return r;
    r.verdict = Application1Verdict::NonSplitting;
    r.conclusions = {
        "s = 1: the critical locus is a single smooth component met transversely by V(z0)",
        "omega = lambda0 = 0",
        "reduced H^n(F; Z) = 0",
        "reduced H^{n-1}(F; Z) is isomorphic to Z^" + std::to_string(mu0),
    };
    if (mu0 == 0) r.warnings.push_back("mu0 = lambda1 = 0: f0 is smooth at the origin, the verdict is degenerate");
    return r;
}

Application2Result application2(std::uint64_t mu0, std::uint64_t lambda1, std::optional<std::uint64_t> n,
                                const std::optional<CycloProduct>& charH0) {
    if (mu0 < lambda1) throw DomainError("application2 requires mu0 >= lambda1");
    Application2Result r;
    r.defect = mu0 - lambda1;
    r.notes.push_back("if rank H^{n-1}(F) = lambda1 then every component is smooth and transverse to V(z0) (k = 1)");
    if (r.defect == 0) {
        r.feasibleS = {1};
        return r;
    }
    for (std::uint64_t s = 2; s <= r.defect + 1; ++s) r.feasibleS.push_back(s);
    r.notes.push_back("s = " + std::to_string(r.defect + 1) + " forces h0 to have " + std::to_string(r.defect) +
                      " eigenvalues equal to (-1)^{n+1}");
    if (n && charH0) {
        const std::uint64_t k = (*n % 2 == 0) ? 2 : 1;  // (-1)^{n+1} is a root of Phi_k
        if (charH0->exponent(k) < r.defect) {
            r.feasibleS.pop_back();
            r.notes.push_back("h0 has only " + std::to_string(charH0->exponent(k)) + " eigenvalues equal to " +
                              (k == 1 ? "1" : "-1") + ", so s = " + std::to_string(r.defect + 1) + " is excluded");
        }
    }
    return r;
}

std::vector<std::string> acampoValidate(const SingularSetup& in) {
    SingularSetup s = resolve(in);
    const std::int64_t expected = (s.n % 2 == 0) ? 1 : -1;
    std::vector<std::string> violations;
    auto check = [&](const CycloProduct& p, const std::string& who) {
        if (p.isOne()) return;
        std::int64_t t = trace(p);
        if (t != expected)
            violations.push_back(who + ": trace of " + p.toString() + " is " + std::to_string(t) + ", expected " +
                                 std::to_string(expected));
    };
    if (s.charH0) check(*s.charH0, "h0");
    for (std::size_t i = 0; i < s.components.size(); ++i)
        if (s.components[i].charH) check(*s.components[i].charH, describeComponent(i));
    return violations;
}

ConstraintReport fullReport(const SingularSetup& in, const std::optional<LeInvariants>& le) {
    SingularSetup s = resolve(in);
    ConstraintReport r;
    r.n = s.n;
    r.mu0 = s.mu0;
    r.lambda1 = lambda1FromComponents(s);
    if (s.components.empty()) r.warnings.push_back("no components: critical locus data missing");

    std::optional<std::uint64_t> lambda0 = s.lambda0;
    std::optional<std::uint64_t> omega = s.omega;
    if (le) {
        if (le->mu0.finite() && *le->mu0.value != s.mu0)
            throw InconsistentInputError("mu0 from the polynomial (" + std::to_string(*le->mu0.value) +
                                         ") differs from the setup (" + std::to_string(s.mu0) + ")");
        if (!le->lambda1.finite() || *le->lambda1.value != r.lambda1)
            throw InconsistentInputError("lambda1 from the polynomial differs from the component sum " +
                                         std::to_string(r.lambda1));
        if (le->lambda0.finite()) lambda0 = *le->lambda0.value;
        if (le->omega.finite()) omega = *le->omega.value;
        r.warnings.insert(r.warnings.end(), le->warnings.begin(), le->warnings.end());
    }
    if (lambda0 && omega) {
        checkOmegaLambda0(*omega, *lambda0);
        r.verdicts.push_back({"OMEGA_LAMBDA0", "omega = " + std::to_string(*omega) + " >= lambda0 = " +
                                                   std::to_string(*lambda0) + ", equality only at zero"});
        if (s.mu0 + *lambda0 != r.lambda1 + *omega)
            r.warnings.push_back("rank balance mu0 + lambda0 = lambda1 + omega fails");
    }

    r.divisorBound = divisibilityBound(s);
    r.rankBound = rankBound(s);
    if (r.divisorBound)
        r.verdicts.push_back({"MAIN_THEOREM", "char of m_{n-1} divides " + r.divisorBound->toString() +
                                                  " (expanded: " + expand(*r.divisorBound).toString() + ")"});
    else
        r.verdicts.push_back({"MAIN_THEOREM", "divisibility bound unknown: a characteristic polynomial is missing"});
    r.verdicts.push_back({"RANK", "rank H^{n-1}(F) <= " + std::to_string(r.rankBound)});

    Application1Result a1 = application1(s.mu0, r.lambda1);
    r.application1 = a1.verdict;
    r.warnings.insert(r.warnings.end(), a1.warnings.begin(), a1.warnings.end());
    if (a1.verdict == Application1Verdict::NonSplitting) {
        for (const auto& c : a1.conclusions) r.verdicts.push_back({"APPLICATION_1", c});
        if ((lambda0 && *lambda0 != 0) || (omega && *omega != 0))
            throw InconsistentInputError("mu0 = lambda1 forces omega = lambda0 = 0");
        if (!s.components.empty()) {
            if (s.components.size() != 1 || s.components[0].k != 1)
                throw InconsistentInputError("mu0 = lambda1 forces a single component with k = 1");
            r.warnings.push_back("non-splitting conclusion agrees with the supplied data: one component, k = 1");
        }
    } else {
        r.verdicts.push_back({"APPLICATION_1", "not applicable: mu0 != lambda1"});
    }

    Application2Result a2 = application2(s.mu0, r.lambda1, s.n, s.charH0);
    r.feasibleS = a2.feasibleS;
    for (const auto& note : a2.notes) r.verdicts.push_back({"APPLICATION_2", note});
    if (!s.components.empty()) {
        std::uint64_t sum = 0;
        bool allTransverse = true;
        for (const auto& c : s.components) {
            sum += c.k;
            allTransverse = allTransverse && c.k == 1;
        }
        r.componentS = sum;
        bool feasible = std::find(r.feasibleS.begin(), r.feasibleS.end(), sum) != r.feasibleS.end();
        if (!allTransverse || !feasible)
            r.verdicts.push_back({"RANK_BELOW_LAMBDA1",
                                  "component data (s = " + std::to_string(sum) +
                                      (allTransverse ? "" : ", some k > 1") +
                                      ") is incompatible with rank H^{n-1}(F) = lambda1, so the rank is < " +
                                      std::to_string(r.lambda1)});
    }

    r.acampoViolations = acampoValidate(s);
    return r;
}

std::string toString(Application1Verdict v) {
    return v == Application1Verdict::NonSplitting ? "NON_SPLITTING" : "NOT_APPLICABLE";
}

Application1Verdict application1VerdictFromString(const std::string& s) {
    if (s == "NON_SPLITTING") return Application1Verdict::NonSplitting;
    if (s == "NOT_APPLICABLE") return Application1Verdict::NotApplicable;
    throw DomainError("unknown Application 1 verdict '" + s + "'");
}

}  // namespace nexus
