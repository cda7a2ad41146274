#include "nexus/errors.hpp"
#include "nexus/local_algebra.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <random>

using namespace nexus;

namespace {

const std::vector<std::string> xyz{"x", "y", "z"};

IdealPresentation ideal(std::initializer_list<const char*> gens, const std::vector<std::string>& vars = xyz) {
    std::vector<MultiPoly> g;
    for (const char* s : gens) g.push_back(parse(s, vars));
    return IdealPresentation(vars.size(), std::move(g));
}

IdealPresentation jacobian(const MultiPoly& f) {
    std::vector<MultiPoly> g;
    for (std::size_t i = 0; i < f.varCount(); ++i) g.push_back(partial(f, i));
    return IdealPresentation(f.varCount(), std::move(g));
}

Monomial mono(std::vector<std::uint32_t> e) { return Monomial(std::move(e)); }

std::pair<Monomial, mpq_class> leadingTerm(const MultiPoly& f, const LocalTermOrder& order) {
    auto best = f.terms().begin();
    for (auto it = f.terms().begin(); it != f.terms().end(); ++it)
        if (order.compare(it->first, best->first) > 0) best = it;
    return *best;
}

MultiPoly monomialTimes(const Monomial& m, const mpq_class& c, const MultiPoly& f) {
    MultiPoly scale(f.varCount());
    scale.addTerm(m, c);
    return scale * f;
}

}  // namespace

TEST_CASE("local order puts lower degree first") {
    LocalTermOrder ord;
    CHECK(ord.compare(mono({0, 0, 0}), mono({1, 0, 0})) > 0);
    CHECK(ord.compare(mono({1, 0, 0}), mono({0, 1, 0})) > 0);
    CHECK(ord.compare(mono({0, 1, 0}), mono({2, 0, 0})) > 0);
    LocalTermOrder mixed{1};
    CHECK(mixed.compare(mono({1, 2, 0}), mono({0, 0, 0})) > 0);
}

TEST_CASE("units at the origin are absorbed") {
    CHECK(colength(ideal({"x + x^2", "y"}, {"x", "y"})) == Colength::of(1));
    CHECK(colength(ideal({"1 + x"})) == Colength::of(0));
    CHECK(standardBasis(ideal({"1 - x*y"}), LocalTermOrder{}).containsUnit());
    CHECK(colength(ideal({"x*(1+y)", "y^2", "z"})) == Colength::of(2));
}

TEST_CASE("zero and non-isolated ideals have infinite colength") {
    CHECK_FALSE(colength(IdealPresentation(2, {})).finite());
    CHECK_FALSE(colength(ideal({"x", "y"})).finite());
    CHECK(colength(IdealPresentation::unit(3)) == Colength::of(0));
}

TEST_CASE("Milnor numbers of Brieskorn curves") {
    const std::vector<std::string> vars{"x", "y"};
    for (int a = 2; a <= 5; ++a)
        for (int b = 2; b <= 5; ++b) {
            auto f = parse("x^" + std::to_string(a) + " + y^" + std::to_string(b), vars);
            CHECK(colength(jacobian(f)) == Colength::of(std::uint64_t((a - 1) * (b - 1))));
        }
    CHECK(colength(jacobian(parse("x^2 + y^2 + z^2", xyz))) == Colength::of(1));
    CHECK(colength(jacobian(parse("x^3 + y^3 + z^3", xyz))) == Colength::of(8));
    // E6, E8 and a non-quasihomogeneous germ
    CHECK(colength(jacobian(parse("x^3 + y^4", vars))) == Colength::of(6));
    CHECK(colength(jacobian(parse("x^3 + y^5", vars))) == Colength::of(8));
    CHECK(colength(jacobian(parse("x^4 + y^4 + x^2*y^2", vars))) == Colength::of(9));
}

TEST_CASE("staircase colength agrees with brute-force enumeration") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<std::uint32_t> e(0, 4), pure(1, 5);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 2 + trial % 2;
        std::vector<Monomial> gens;
        std::uint32_t bound = 0;
        for (std::size_t i = 0; i < n; ++i) {
            std::uint32_t p = pure(rng);
            bound += p;
            gens.push_back(Monomial::variable(n, i, p));
        }
        for (int extra = 0; extra < 3; ++extra) {
            std::vector<std::uint32_t> ex(n);
            for (auto& v : ex) v = e(rng);
            Monomial m(ex);
            if (!m.isOne()) gens.push_back(m);
        }
        auto c = staircaseColength(gens, n);
        REQUIRE(c.finite());
        CHECK(*c.value == oracle::standardMonomialsUpTo(gens, n, bound));
    }
    CHECK_FALSE(staircaseColength({mono({2, 0}), mono({1, 1})}, 2).finite());
}

TEST_CASE("standard basis leading ideal matches colength oracle") {
    auto I = ideal({"x^2 + y^3", "x*y + z^2", "z^3 + x"});
    auto sb = standardBasis(I, LocalTermOrder{});
    auto c = staircaseColength(sb.staircase, 3);
    REQUIRE(c.finite());
    CHECK(*c.value == oracle::standardMonomialsUpTo(sb.staircase, 3, 12));
    for (const auto& g : I.generators()) CHECK(moraReduce(g, sb.basis, sb.order).isZero());
}

TEST_CASE("membership and ideal equality") {
    auto I = ideal({"x", "y^2"});
    CHECK(contains(I, parse("x*(1+z) + y^3", xyz)));
    CHECK_FALSE(contains(I, parse("y", xyz)));
    CHECK(sameIdeal(ideal({"x*(1 + y)", "y^2"}), I));
    CHECK_FALSE(sameIdeal(ideal({"x", "y"}), I));
    CHECK_THROWS_AS(moraReduce(parse("x", xyz), {}, LocalTermOrder{}), DomainError);
}

TEST_CASE("quotient and intersection") {
    auto I = ideal({"x*y", "x*z"});
    auto g = parse("x", xyz);
    CHECK(sameIdeal(idealQuotientElem(I, g), ideal({"y", "z"})));
    CHECK(sameIdeal(intersectPrincipal(ideal({"y"}), g), ideal({"x*y"})));
    CHECK(sameIdeal(saturateElem(ideal({"x^2*y", "x^3"}), g), IdealPresentation::unit(3)));
    CHECK(sameIdeal(saturateElem(ideal({"x^2*y"}), g), ideal({"y"})));
    // a unit multiplier does not change the quotient
    CHECK(sameIdeal(idealQuotientElem(I, parse("x + x*y", xyz)), ideal({"y", "z"})));
}

TEST_CASE("resource budget is enforced") {
    ResourceBudget tiny;
    tiny.maxPairs = 1;
    CHECK_THROWS_AS(standardBasis(ideal({"x^3 + y^2*z", "y^3 + x*z^2", "z^3 + x^2*y"}), LocalTermOrder{}, tiny),
                    ResourceLimitError);
    ResourceBudget box;
    box.maxMonomials = 10;
    CHECK_THROWS_AS(colength(ideal({"x^5", "y^5", "z^5"}), box), ResourceLimitError);
}

TEST_CASE("property: saturation is idempotent and both routes agree") {
    std::mt19937_64 rng(41);
    int checked = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 2 + trial % 2;
        std::vector<MultiPoly> gens;
        for (int i = 0; i < 2; ++i) gens.push_back(oracle::randomPoly(rng, n, 3, 3));
        auto g = oracle::randomPoly(rng, n, 2, 2);
        if (g.isZero()) g = MultiPoly::variable(n, 0);
        IdealPresentation I(n, gens);
        auto once = saturateElem(I, g);
        auto twice = saturateElem(once, g);
        CHECK(sameIdeal(once, twice));
        CHECK(sameIdeal(once, saturateByTagVariable(I, g)));
        CHECK(contains(once, I));
        ++checked;
    }
    CHECK(checked == 50);
}

TEST_CASE("property: S-polynomials of a standard basis reduce to zero") {
    std::mt19937_64 rng(43);
    const LocalTermOrder order{};
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 2 + trial % 2;
        std::vector<MultiPoly> gens;
        for (std::size_t i = 0; i < n; ++i) gens.push_back(oracle::randomPoly(rng, n, 3, 3));
        auto sb = standardBasis(IdealPresentation(n, gens), order);
        for (const auto& g : gens)
            if (!g.isZero()) CHECK(moraReduce(g, sb.basis, order).isZero());
        for (std::size_t i = 0; i < sb.basis.size(); ++i)
            for (std::size_t j = i + 1; j < sb.basis.size(); ++j) {
                auto [mi, ci] = leadingTerm(sb.basis[i], order);
                auto [mj, cj] = leadingTerm(sb.basis[j], order);
                const Monomial l = mi.lcm(mj);
                auto s = monomialTimes(l / mi, 1 / ci, sb.basis[i]) - monomialTimes(l / mj, 1 / cj, sb.basis[j]);
                if (!s.isZero()) CHECK(moraReduce(s, sb.basis, order).isZero());
            }
    }
}

TEST_CASE("property: colength is invariant under linear coordinate change") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<long> entry(-2, 2);
    const std::vector<std::string> vars{"x", "y"};
    const auto I = ideal({"x^2 + y^3", "x*y^2"}, vars);
    const auto base = colength(I);
    REQUIRE(base.finite());
    int done = 0;
    while (done < 15) {
        QMatrix m(2);
        for (std::size_t r = 0; r < 2; ++r)
            for (std::size_t c = 0; c < 2; ++c) m(r, c) = entry(rng);
        if (m.determinant() == 0) continue;
        std::vector<MultiPoly> moved;
        for (const auto& g : I.generators()) moved.push_back(linearChange(g, m));
        CHECK(colength(IdealPresentation(2, moved)) == base);
        ++done;
    }
}
