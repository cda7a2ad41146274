#include "nexus/arrangements.hpp"
#include "nexus/errors.hpp"
#include "nexus/le_numbers.hpp"

#include "doctest.h"

#include <algorithm>
#include <random>

using namespace nexus;

namespace {

CentralArrangement3 planes(std::initializer_list<std::array<long, 3>> normals) {
    std::vector<QVector3> v;
    for (const auto& n : normals) v.push_back({n[0], n[1], n[2]});
    return CentralArrangement3(std::move(v));
}

std::uint64_t choose2(std::uint64_t m) { return m * (m - 1) / 2; }

}  // namespace

TEST_CASE("construction rejects degenerate input") {
    CHECK_THROWS_AS(planes({{1, 0, 0}}), DomainError);
    CHECK_THROWS_AS(planes({{1, 0, 0}, {0, 0, 0}}), DomainError);
    CHECK_THROWS_AS(planes({{1, 2, 3}, {-2, -4, -6}}), DomainError);
}

TEST_CASE("coordinate planes give the xyz report") {
    auto arr = planes({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    auto pts = multiplePoints(arr);
    REQUIRE(pts.size() == 3);
    for (const auto& p : pts) CHECK(p.multiplicity == 2);
    const std::vector<std::string> xyz{"x", "y", "z"};
    CHECK(arrangementPolynomial(arr) == parse("x*y*z", xyz));
    CHECK_FALSE(isGenericHyperplane(arr, {1, 0, 0}));
    CHECK(isGenericHyperplane(arr, {1, 1, 1}));
    CHECK_THROWS_AS(toSetup(arr, QVector3{1, 0, 0}), GenericityError);

    auto r = arrangementReport(arr);
    CHECK(r.mu0 == 4);
    CHECK(r.lambda1 == 3);
    CHECK(*r.divisorBound == CycloProduct{{1, 2}});
    CHECK(r.rankBound == 3);
}

TEST_CASE("pencil reaches the non-splitting equality") {
    auto arr = planes({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}});
    auto pts = multiplePoints(arr);
    REQUIRE(pts.size() == 1);
    CHECK(pts[0].multiplicity == 3);
    CHECK(pts[0].line == ZVector3{0, 0, 1});
    auto r = arrangementReport(arr);
    CHECK(r.mu0 == r.lambda1);
    CHECK(toString(r.application1) == "NON_SPLITTING");
    CHECK(r.feasibleS == std::vector<std::uint64_t>{1});
}

TEST_CASE("generic arrangement of four planes") {
    auto arr = planes({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}});
    CHECK(multiplePoints(arr).size() == 6);
    auto r = arrangementReport(arr);
    CHECK(r.mu0 == 9);
    CHECK(r.lambda1 == 6);
    CHECK(*r.divisorBound == CycloProduct{{1, 3}});
    CHECK(r.rankBound == 6);
    REQUIRE(r.exponentCeilings.size() == 3);
    CHECK(r.exponentCeilings[0].k == 1);
    CHECK(r.exponentCeilings[0].ceiling == 3);
    CHECK(r.exponentCeilings[1].ceiling == 0);
}

TEST_CASE("arrangement lambda1 agrees with the polynomial computation") {
    auto arr = planes({{1, 0, 0}, {0, 1, 0}, {1, 1, 1}});
    auto setup = toSetup(arr);
    const std::vector<mpq_class> z0(setup.z0.begin(), setup.z0.end());
    auto le = computeAll(makeSlice(arrangementPolynomial(arr), z0));
    REQUIRE(le.genericityOk);
    CHECK(*le.lambda1.value == lambda1FromComponents(setup.setup));
    CHECK(*le.mu0.value == setup.setup.mu0);
}

TEST_CASE("property: pair accounting and order independence") {
    std::mt19937_64 rng(61);
    std::uniform_int_distribution<long> entry(-2, 2);
    std::uniform_int_distribution<std::size_t> size(2, 8);
    int built = 0;
    while (built < 100) {
        const std::size_t d = size(rng);
        std::vector<QVector3> normals;
        for (std::size_t i = 0; i < d; ++i) normals.push_back({entry(rng), entry(rng), mpq_class(entry(rng), 2)});
        std::optional<CentralArrangement3> arr;
        try {
            arr.emplace(normals);
        } catch (const DomainError&) {
            continue;
        }
        ++built;
        auto pts = multiplePoints(*arr);
        std::uint64_t pairs = 0;
        for (const auto& p : pts) pairs += choose2(p.multiplicity);
        CHECK(pairs == choose2(d));

        std::vector<QVector3> shuffled = normals;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        auto again = multiplePoints(CentralArrangement3(shuffled));
        REQUIRE(again.size() == pts.size());
        for (std::size_t i = 0; i < pts.size(); ++i) {
            CHECK(again[i].line == pts[i].line);
            CHECK(again[i].multiplicity == pts[i].multiplicity);
        }
    }
}
