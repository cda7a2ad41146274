#include "nexus/cyclotomic.hpp"
#include "nexus/errors.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <random>

using namespace nexus;

TEST_CASE("cyclotomic polynomials match the root product") {
    for (std::uint64_t k = 1; k <= 40; ++k) {
        auto expected = oracle::cyclotomicByRoots(k);
        UniPoly phi = cyclotomic(k);
        REQUIRE(phi.coeffs().size() == expected.size());
        for (std::size_t i = 0; i < expected.size(); ++i) CHECK(phi.coeff(i) == expected[i]);
        CHECK(static_cast<std::uint64_t>(phi.degree()) == eulerPhi(k));
    }
    CHECK(cyclotomic(6).toString() == "t^2 - t + 1");
    CHECK(cyclotomic(1).toString() == "t - 1");
}

TEST_CASE("number theory helpers") {
    for (std::uint64_t k = 1; k <= 500; ++k) CHECK(mobius(k) == oracle::mobiusByTrialDivision(k));
    setMobiusCacheBound(10);
    CHECK(mobius(30) == -1);
    CHECK(mobius(210) == 1);
    setMobiusCacheBound(10000);
    CHECK(divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
    CHECK(eulerPhi(1) == 1);
    CHECK(eulerPhi(36) == 12);
}

TEST_CASE("factorUnity expands to t^d - 1") {
    for (std::uint64_t d = 1; d <= 30; ++d) CHECK(expand(factorUnity(d)) == UniPoly::unityMinusOne(d));
}

TEST_CASE("homogeneous formula") {
    auto e = homogeneousExponents(2, 3);
    CHECK(e.b0 == 1);
    CHECK(e.a0 == 2);
    CHECK(homogeneousChar(2, 3) == CycloProduct{{1, 2}, {3, 1}});
    CHECK(homogeneousChar(2, 2) == CycloProduct{{1, 1}});
    CHECK(homogeneousChar(1, 2) == CycloProduct{{2, 1}});
    CHECK_THROWS_AS(homogeneousChar(2, 1), DomainError);
    CHECK_THROWS_AS(homogeneousChar(0, 3), DomainError);
    for (std::uint64_t n = 1; n <= 4; ++n)
        for (std::uint64_t d = 2; d <= 9; ++d) {
            auto h = homogeneousChar(n, d);
            std::uint64_t expectedDegree = 1;
            for (std::uint64_t i = 0; i < n; ++i) expectedDegree *= d - 1;
            CHECK(h.degree() == expectedDegree);
            CHECK(static_cast<std::uint64_t>(expand(h).degree()) == expectedDegree);
            CHECK(trace(h) == (n % 2 ? -1 : 1));
        }
}

TEST_CASE("CycloProduct text round trip") {
    CycloProduct p{{1, 2}, {3, 1}, {12, 4}};
    CHECK(p.toString() == "Phi_1^2 * Phi_3 * Phi_12^4");
    CHECK(CycloProduct::parse(p.toString()) == p);
    CHECK(CycloProduct().toString() == "1");
    CHECK(CycloProduct::parse("1").isOne());
    CHECK(CycloProduct{{5, 0}}.isOne());
    CHECK_THROWS(CycloProduct{{0, 1}});
    CHECK_THROWS_AS(CycloProduct::parse("Phi_0"), ParseError);
    CHECK_THROWS_AS(CycloProduct::parse("Phi_2 *"), ParseError);
}

TEST_CASE("unipoly arithmetic") {
    UniPoly a{-1, 0, 1};  // t^2 - 1
    UniPoly b{-1, 1};
    CHECK(uniDivExact(a, b) == UniPoly{1, 1});
    CHECK_THROWS_AS(uniDivExact(a, UniPoly{1, 0, 1}), DomainError);
    CHECK(uniGcd(a, UniPoly{1, -2, 1}) == UniPoly{-1, 1});
    CHECK(uniGcd(UniPoly{}, UniPoly{}).isZero());
    CHECK(uniGcd(UniPoly{2, 2}, UniPoly{}) == UniPoly{1, 1});
    CHECK(equalUpToSign(a, -a));
    CHECK(UniPoly{1, -1, 0, 1}.toString() == "t^3 - t + 1");
}

namespace {
CycloProduct randomProduct(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> k(1, 12), e(0, 3), count(0, 4);
    CycloProduct::FactorMap f;
    for (std::uint64_t i = count(rng); i > 0; --i) f[k(rng)] += e(rng);
    for (auto& [key, v] : f) v = std::min<std::uint64_t>(v, 3);
    return CycloProduct(f);
}
}  // namespace

TEST_CASE("property: gcd and product commute with expansion") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 200; ++trial) {
        auto a = randomProduct(rng);
        auto b = randomProduct(rng);
        CHECK(equalUpToSign(expand(gcd(a, b)), uniGcd(expand(a), expand(b))));
        CHECK(expand(a * b) == uniMul(expand(a), expand(b)));
        CHECK(trace(a * b) == trace(a) + trace(b));
        CHECK(divides(gcd(a, b), a));
        CHECK(divides(gcd(a, b), b));
        CHECK(gcd(a, b) == gcd(b, a));
        CHECK(gcd(a, a) == a);
    }
}
