#include "nexus/errors.hpp"
#include "nexus/monodromy.hpp"
#include "nexus/smith.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <algorithm>
#include <random>

using namespace nexus;

namespace {

SingularSetup xyzSetup() {
    SingularSetup s;
    s.n = 2;
    s.mu0 = 4;
    s.d0 = 3;
    for (int i = 0; i < 3; ++i) {
        ComponentData c;
        c.d = 2;
        s.components.push_back(c);
    }
    return s;
}

bool hasTag(const ConstraintReport& r, const std::string& tag) {
    return std::any_of(r.verdicts.begin(), r.verdicts.end(), [&](const Finding& f) { return f.tag == tag; });
}

}  // namespace

TEST_CASE("Smith normal form of small matrices") {
    auto s = smithNormalForm(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
    CHECK(s.invariantFactors == std::vector<mpz_class>{2, 6, 12});
    CHECK(s.torsion() == std::vector<mpz_class>{2, 6, 12});
    CHECK(smithNormalForm(IntMatrix{{0, 0}, {0, 0}}).rank() == 0);
    CHECK(smithNormalForm(IntMatrix{{1, 2, 3}}).invariantFactors == std::vector<mpz_class>{1});
    CHECK(kernelRank(IntMatrix{{1, 2, 3}, {2, 4, 6}}) == 2);
}

TEST_CASE("property: Smith rank equals rational rank and factors form a divisor chain") {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 100; ++trial) {
        auto m = oracle::randomMatrix(rng, 1 + trial % 5, -4, 4);
        auto s = smithNormalForm(m);
        CHECK(s.rank() == oracle::rationalRank(m));
        for (std::size_t i = 0; i + 1 < s.invariantFactors.size(); ++i) {
            CHECK(s.invariantFactors[i] > 0);
            CHECK(s.invariantFactors[i + 1] % s.invariantFactors[i] == 0);
        }
        if (s.rank() == m.rows()) {
            mpz_class prod = 1;
            for (const auto& d : s.invariantFactors) prod *= d;
            QMatrix q(m.rows());
            for (std::size_t r = 0; r < m.rows(); ++r)
                for (std::size_t c = 0; c < m.cols(); ++c) q(r, c) = m(r, c);
            CHECK(abs(q.determinant()) == mpq_class(prod));
        }
    }
}

TEST_CASE("block cyclic operator") {
    IntMatrix tau{{0, 1}, {1, 0}};
    auto lam = blockCyclic(tau, 3);
    CHECK(lam.rows() == 6);
    auto cube = lam.power(3);
    for (std::size_t r = 0; r < 6; ++r)
        for (std::size_t c = 0; c < 6; ++c)
            CHECK(cube(r, c) == (r / 2 == c / 2 ? tau.power(3)(r % 2, c % 2) : mpz_class(0)));
    auto ck = cyclicKernelRank(tau, 2);
    CHECK(ck.verified);
    CHECK(ck.rank == 2);
    CHECK(cyclicKernelRank(IntMatrix{{-1}}, 1).rank == 0);
    CHECK(cyclicKernelRank(IntMatrix{{-1}}, 2).rank == 1);
    CHECK_THROWS_AS(cyclicKernelRank(IntMatrix{{1, 0}}, 1), DomainError);
}

TEST_CASE("property: cyclic kernel lemma on random matrices") {
    std::mt19937_64 rng(52);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t m = 1 + trial % 4;
        const std::size_t k = 1 + (trial / 4) % 4;
        auto tau = oracle::randomMatrix(rng, m, -2, 2);
        auto lam = blockCyclic(tau, k);
        const auto viaCycle = kernelRank(IntMatrix::identity(m * k) - lam);
        const auto viaPower = kernelRank(IntMatrix::identity(m) - tau.power(k));
        CHECK(viaCycle == viaPower);
        CHECK(viaPower == m - oracle::rationalRank(IntMatrix::identity(m) - tau.power(k)));
        CHECK(cyclicKernelRank(tau, k).rank == viaPower);
    }
}

TEST_CASE("resolve derives and validates component data") {
    auto s = resolve(xyzSetup());
    CHECK(*s.charH0 == (CycloProduct{{1, 2}, {3, 1}}));
    CHECK(*s.components[0].charH == CycloProduct{{1, 1}});

    auto bad = xyzSetup();
    bad.components[0].charH = CycloProduct{{2, 1}};
    CHECK_THROWS_AS(resolve(bad), InconsistentInputError);

    auto wrongDegree = xyzSetup();
    wrongDegree.components[0].mu = 2;
    CHECK_THROWS_AS(resolve(wrongDegree), InconsistentInputError);

    SingularSetup withTau;
    withTau.n = 2;
    withTau.mu0 = 3;
    ComponentData c;
    c.mu = 2;
    c.k = 2;
    c.tau = IntMatrix{{0, 1}, {1, 0}};
    withTau.components.push_back(c);
    CHECK(*resolve(withTau).components[0].fixedRank == 2);
    withTau.components[0].fixedRank = 1;
    CHECK_THROWS_AS(resolve(withTau), InconsistentInputError);

    auto badOmega = xyzSetup();
    badOmega.lambda0 = 2;
    badOmega.omega = 2;
    CHECK_THROWS_AS(resolve(badOmega), InconsistentInputError);
}

TEST_CASE("divisibility and rank bounds for xyz") {
    auto s = xyzSetup();
    CHECK(lambda1FromComponents(s) == 3);
    CHECK(*divisibilityBound(s) == CycloProduct{{1, 2}});
    CHECK(rankBound(s) == 3);
    auto partial = s;
    partial.d0.reset();
    CHECK_FALSE(divisibilityBound(partial).has_value());
    s.components[0].fixedRank = 0;
    s.components[1].fixedRank = 1;
    s.components[2].fixedRank = 1;
    CHECK(rankBound(s) == 2);
}

TEST_CASE("application 1") {
    auto r = application1(1, 1);
    CHECK(toString(r.verdict) == "NON_SPLITTING");
    CHECK(r.conclusions.size() == 4);
    CHECK(toString(application1(4, 3).verdict) == "NOT_APPLICABLE");
    CHECK_THROWS_AS(application1(2, 3), InconsistentInputError);
    CHECK_FALSE(application1(0, 0).warnings.empty());
}

TEST_CASE("application 2 case table") {
    CHECK(application2(5, 5).feasibleS == std::vector<std::uint64_t>{1});
    CHECK(application2(5, 4).feasibleS == std::vector<std::uint64_t>{2});
    CHECK(application2(9, 6).feasibleS == std::vector<std::uint64_t>{2, 3, 4});
    CHECK(application2(9, 6, 2, CycloProduct{{1, 3}, {2, 2}, {4, 2}}).feasibleS == std::vector<std::uint64_t>{2, 3});
    CHECK(application2(9, 6, 2, CycloProduct{{1, 3}, {2, 3}}).feasibleS == std::vector<std::uint64_t>{2, 3, 4});
    CHECK(application2(4, 3, 3, CycloProduct{{1, 1}}).feasibleS == std::vector<std::uint64_t>{2});
    CHECK_THROWS_AS(application2(1, 2), DomainError);
}

TEST_CASE("A'Campo trace check") {
    auto s = xyzSetup();
    CHECK(acampoValidate(s).empty());
    s.charH0 = CycloProduct{{1, 1}, {2, 1}, {3, 1}};
    s.d0.reset();
    CHECK(acampoValidate(s).size() == 1);
}

TEST_CASE("full report for xyz") {
    auto r = fullReport(xyzSetup());
    CHECK(r.lambda1 == 3);
    CHECK(*r.divisorBound == CycloProduct{{1, 2}});
    CHECK(r.rankBound == 3);
    CHECK(toString(r.application1) == "NOT_APPLICABLE");
    CHECK(r.feasibleS.empty());
    CHECK(*r.componentS == 3);
    CHECK(hasTag(r, "MAIN_THEOREM"));
    CHECK(hasTag(r, "RANK_BELOW_LAMBDA1"));
    CHECK(r.acampoViolations.empty());
}

TEST_CASE("full report consistency checks") {
    SingularSetup cyl;
    cyl.n = 2;
    cyl.mu0 = 1;
    ComponentData c;
    c.d = 2;
    cyl.components.push_back(c);
    auto r = fullReport(cyl);
    CHECK(toString(r.application1) == "NON_SPLITTING");
    CHECK(r.feasibleS == std::vector<std::uint64_t>{1});
    CHECK_FALSE(hasTag(r, "RANK_BELOW_LAMBDA1"));

    cyl.components[0].k = 1;
    cyl.components.push_back(ComponentData{});
    cyl.components.back().mu = 0;
    CHECK_THROWS_AS(fullReport(cyl), InconsistentInputError);

    SingularSetup empty;
    empty.n = 2;
    empty.mu0 = 2;
    auto e = fullReport(empty);
    CHECK(std::find(e.warnings.begin(), e.warnings.end(), "no components: critical locus data missing") !=
          e.warnings.end());
    CHECK_FALSE(e.divisorBound.has_value());
}

TEST_CASE("verdict names round trip") {
    for (auto v : {Application1Verdict::NonSplitting, Application1Verdict::NotApplicable})
        CHECK(toString(application1VerdictFromString(toString(v))) == toString(v));
    CHECK_THROWS_AS(application1VerdictFromString("MAYBE"), DomainError);
}
