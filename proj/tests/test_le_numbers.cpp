#include "nexus/errors.hpp"
#include "nexus/le_numbers.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <random>

using namespace nexus;

namespace {

const std::vector<std::string> xyz{"x", "y", "z"};

std::vector<mpq_class> form(std::initializer_list<long> c) { return {c.begin(), c.end()}; }

LeInvariants invariantsOf(const char* f, std::vector<mpq_class> z0, const std::vector<std::string>& vars = xyz) {
    return computeAll(makeSlice(parse(f, vars), z0));
}

void checkOmegaLambda0Relation(const LeInvariants& le) {
    REQUIRE(le.omega.finite());
    REQUIRE(le.lambda0.finite());
    CHECK(*le.omega.value >= *le.lambda0.value);
    CHECK((*le.omega.value == *le.lambda0.value) == (*le.omega.value == 0));
}

}  // namespace

TEST_CASE("makeSlice puts z0 first") {
    auto s = makeSlice(parse("x*y*z", xyz), form({0, 1, 0}));
    CHECK(s.n == 2);
    CHECK(linearChange(s.f, s.change.inverse()) == parse("x*y*z", xyz));
    CHECK_THROWS_AS(makeSlice(parse("x*y + 1", xyz), form({1, 0, 0})), DomainError);
    CHECK_THROWS_AS(makeSlice(parse("x + y*z", xyz), form({1, 0, 0})), DomainError);
    CHECK_THROWS_AS(makeSlice(parse("x*y*z", xyz), form({0, 0, 0})), DomainError);
}

TEST_CASE("cylinder over a node") {
    const std::vector<std::string> zxy{"z", "x", "y"};
    auto le = invariantsOf("x^2 + y^2", form({1, 0, 0}), zxy);
    CHECK(le.genericityOk);
    CHECK(le.mu0 == Colength::of(1));
    CHECK(le.lambda0 == Colength::of(0));
    CHECK(le.lambda1 == Colength::of(1));
    CHECK(le.omega == Colength::of(0));
    checkOmegaLambda0Relation(le);
}

TEST_CASE("coordinate hyperplane on the normal crossing xyz is not generic") {
    auto le = invariantsOf("x*y*z", form({1, 0, 0}));
    CHECK_FALSE(le.genericityOk);
    CHECK_FALSE(le.mu0.finite());
    CHECK_THROWS_AS(chooseSlice(parse("x*y*z", xyz), form({1, 0, 0}), 0), GenericityError);
}

TEST_CASE("xyz with a generic hyperplane") {
    auto le = invariantsOf("x*y*z", form({1, 1, 1}));
    CHECK(le.genericityOk);
    CHECK(le.mu0 == Colength::of(4));
    CHECK(le.lambda0 == Colength::of(2));
    CHECK(le.lambda1 == Colength::of(3));
    CHECK(le.omega == Colength::of(3));
    checkOmegaLambda0Relation(le);
    auto s = makeSlice(parse("x*y*z", xyz), form({1, 1, 1}));
    CHECK(lambda0(s) == 2);
    CHECK(omega(s) == 3);
    CHECK(lambda1(s) == 3);
}

TEST_CASE("chooseSlice is deterministic for a seed") {
    auto f = parse("x*y*z", xyz);
    auto a = chooseSlice(f, std::nullopt, 7);
    auto b = chooseSlice(f, std::nullopt, 7);
    CHECK(a.slice.z0 == b.slice.z0);
    CHECK(a.invariants.lambda1 == Colength::of(3));
    CHECK(a.candidatesTried > 3);
    CHECK(randomLinearForms(3, 5, 9) == randomLinearForms(3, 5, 9));
}

TEST_CASE("isolated singularities have no critical curve") {
    auto le = invariantsOf("x^2 + y^2 + z^2", form({1, 1, 0}));
    CHECK(le.genericityOk);
    CHECK(le.mu0 == Colength::of(1));
    CHECK(le.lambda1 == Colength::of(0));
    // lambda0 is the colength of the full Jacobian ideal, i.e. mu(f)
    CHECK(le.lambda0 == Colength::of(1));
    checkOmegaLambda0Relation(le);
}

TEST_CASE("Whitney umbrella") {
    auto le = invariantsOf("x^2 - y^2*z", form({0, 0, 1}));
    if (le.genericityOk) checkOmegaLambda0Relation(le);
    auto chosen = chooseSlice(parse("x^2 - y^2*z", xyz), std::nullopt, 0);
    checkOmegaLambda0Relation(chosen.invariants);
    CHECK(chosen.invariants.lambda1.finite());
}

TEST_CASE("property: rank balance and lambda1 invariance over generic slices") {
    const char* corpus[] = {"x*y*z", "x^2*y + y^2*z", "x^3 + y^3 + x*y*z", "x*y*(x+y+z)", "y^2 - x^3 + x*z^2"};
    for (const char* text : corpus) {
        CAPTURE(text);
        auto f = parse(text, xyz);
        std::optional<Colength> firstLambda1;
        int generic = 0;
        for (const auto& z0 : randomLinearForms(3, 4, 100)) {
            const auto le = computeAll(makeSlice(f, z0));
            if (!le.genericityOk) continue;
            ++generic;
            checkOmegaLambda0Relation(le);
            CHECK(*le.mu0.value + *le.lambda0.value == *le.lambda1.value + *le.omega.value);
            if (!firstLambda1) firstLambda1 = le.lambda1;
            CHECK(le.lambda1 == *firstLambda1);
        }
        CHECK(generic >= 3);
    }
}
