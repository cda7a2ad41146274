#include "nexus/local_algebra.hpp"

#include "nexus/errors.hpp"

#include <algorithm>
#include <numeric>

namespace nexus {

// ---------------------------------------------------------------- order

std::strong_ordering LocalTermOrder::compare(const Monomial& a, const Monomial& b) const {
    auto ea = a.exponents();
    auto eb = b.exponents();
    const std::size_t n = ea.size();
    const std::size_t g = std::min(globalBlock, n);
    if (g > 0) {
        std::uint64_t da = 0, db = 0;
        for (std::size_t i = 0; i < g; ++i) {
            da += ea[i];
            db += eb[i];
        }
        if (auto c = da <=> db; c != 0) return c;
        for (std::size_t i = 0; i < g; ++i)
            if (auto c = ea[i] <=> eb[i]; c != 0) return c;
    }
    std::uint64_t da = 0, db = 0;
    for (std::size_t i = g; i < n; ++i) {
        da += ea[i];
        db += eb[i];
    }
    if (auto c = globalTail ? da <=> db : db <=> da; c != 0) return c;
    for (std::size_t i = g; i < n; ++i)
        if (auto c = ea[i] <=> eb[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

namespace {

// ---------------------------------------------------------------- working polynomials

struct Term {
    Monomial m;
    mpz_class c;
};

/// Integer polynomial with terms sorted descending in the active order.
using Work = std::vector<Term>;

struct Elem {
    Work poly;
    std::uint64_t ecart = 0;
    // Tracked relation: poly = unit * f - sum_i cof[i] * g_i. Empty when untracked.
    Work unit;
    std::vector<Work> cof;
};

mpz_class content(const Work& w) {
    mpz_class g = 0;
    for (const auto& t : w) {
        g = gcd(g, t.c);
        if (g == 1) break;
    }
    return g;
}

std::uint64_t ecartOf(const Work& w) {
    if (w.empty()) return 0;
    std::uint64_t top = 0;
    for (const auto& t : w) top = std::max(top, t.m.degree());
    return top - w.front().m.degree();
}

class Engine {
public:
    Engine(const LocalTermOrder& order, const ResourceBudget& budget) : order_(order), budget_(budget) {}

    void sort(Work& w) const {
        std::sort(w.begin(), w.end(), [&](const Term& a, const Term& b) { return order_.compare(a.m, b.m) > 0; });
    }

    Work toWork(const MultiPoly& f) const {
        mpz_class den = 1;
        for (const auto& [m, c] : f.terms()) den = lcm(den, mpz_class(c.get_den()));
        Work w;
        w.reserve(f.termCount());
        for (const auto& [m, c] : f.terms()) w.push_back({m, mpz_class(c * den)});
        sort(w);
        normalize(w);
        return w;
    }

    static MultiPoly fromWork(const Work& w, std::size_t varCount) {
        MultiPoly f(varCount);
        for (const auto& t : w) f.addTerm(t.m, mpq_class(t.c));
        return f;
    }

    /// Divides by content and makes the leading coefficient positive.
    static void normalize(Work& w) {
        if (w.empty()) return;
        mpz_class g = content(w);
        if (w.front().c < 0) g = -g;
        if (g != 1)
            for (auto& t : w) t.c /= g;
    }

    bool isLocal() const noexcept { return order_.globalBlock == 0 && !order_.globalTail; }

    /// alpha * p - beta * q * r, with q a monomial.
    Work combine(const mpz_class& alpha, const Work& p, const mpz_class& beta, const Monomial& q,
                 const Work& r) const {
        Work out;
        out.reserve(p.size() + r.size());
        std::size_t i = 0, j = 0;
        while (i < p.size() || j < r.size()) {
            if (j == r.size()) {
                out.push_back({p[i].m, alpha * p[i].c});
                ++i;
                continue;
            }
            Monomial rm = r[j].m * q;
            if (i == p.size()) {
                out.push_back({std::move(rm), -beta * r[j].c});
                ++j;
                continue;
            }
            auto cmp = order_.compare(p[i].m, rm);
            if (cmp > 0) {
                out.push_back({p[i].m, alpha * p[i].c});
                ++i;
            } else if (cmp < 0) {
                out.push_back({std::move(rm), -beta * r[j].c});
                ++j;
            } else {
                mpz_class c = alpha * p[i].c - beta * r[j].c;
                if (c != 0) out.push_back({std::move(rm), std::move(c)});
                ++i;
                ++j;
            }
        }
        if (out.size() > budget_.maxMonomials)
            throw ResourceLimitError("standard basis: polynomial exceeds the monomial budget");
        for (const auto& t : out)
            if (mpz_sizeinbase(t.c.get_mpz_t(), 2) > budget_.maxCoefficientBits)
                throw ResourceLimitError("standard basis: coefficient exceeds the size budget");
        return out;
    }

    /// One reduction step h <- alpha*h - beta*q*e cancelling the leading term of h.
    void reduceBy(Elem& h, const Elem& e, bool tracked) {
        if (++reductions_ > budget_.maxReductions)
            throw ResourceLimitError("standard basis: reduction step budget exceeded");
        const Term& lh = h.poly.front();
        const Term& le = e.poly.front();
        mpz_class g = gcd(lh.c, le.c);
        mpz_class alpha = le.c / g;
        mpz_class beta = lh.c / g;
        Monomial q = lh.m / le.m;
        h.poly = combine(alpha, h.poly, beta, q, e.poly);
        if (tracked) {
            h.unit = combine(alpha, h.unit, beta, q, e.unit);
            for (std::size_t i = 0; i < h.cof.size(); ++i) h.cof[i] = combine(alpha, h.cof[i], beta, q, e.cof[i]);
            mpz_class common = content(h.poly);
            common = gcd(common, content(h.unit));
            for (const auto& c : h.cof) common = gcd(common, content(c));
            if (common > 1) {
                auto divide = [&](Work& w) {
                    for (auto& t : w) t.c /= common;
                };
                divide(h.poly);
                divide(h.unit);
                for (auto& c : h.cof) divide(c);
            }
        } else {
            normalize(h.poly);
        }
        h.ecart = ecartOf(h.poly);
    }

    /// Mora's weak normal form: reducers are chosen with minimal ecart and the
    /// current polynomial joins the reducer set whenever it has smaller ecart than
    /// the chosen reducer.
    Elem normalForm(Elem h, std::vector<Elem> reducers, bool tracked) {
        while (!h.poly.empty()) {
            const Monomial& lead = h.poly.front().m;
            std::size_t best = reducers.size();
            for (std::size_t i = 0; i < reducers.size(); ++i) {
                if (!reducers[i].poly.front().m.divides(lead)) continue;
                if (best == reducers.size() || reducers[i].ecart < reducers[best].ecart) best = i;
            }
            if (best == reducers.size()) break;
            if (!order_.isGlobal() && reducers[best].ecart > h.ecart) reducers.push_back(h);
            reduceBy(h, reducers[best], tracked);
        }
        return h;
    }

    Work spoly(const Work& a, const Work& b) {
        const Term& la = a.front();
        const Term& lb = b.front();
        Monomial l = la.m.lcm(lb.m);
        mpz_class g = gcd(la.c, lb.c);
        Work left = combine(0, Work{}, -(lb.c / g), l / la.m, a);
        return combine(1, left, la.c / g, l / lb.m, b);
    }

    std::vector<Work> standardBasis(std::vector<Work> gens) {
        std::vector<Elem> basis;
        struct Pair {
            std::size_t i, j;
            std::uint64_t degree;
            std::uint64_t seq;
        };
        std::vector<Pair> pairs;
        std::uint64_t seq = 0;
        std::uint64_t processed = 0;

        auto addElement = [&](Work w) {
            std::size_t idx = basis.size();
            for (std::size_t i = 0; i < idx; ++i) {
                const Monomial& a = basis[i].poly.front().m;
                const Monomial& b = w.front().m;
                if (a.coprime(b)) continue;  // product criterion
                pairs.push_back({i, idx, a.lcm(b).degree(), seq++});
            }
            Elem e;
            e.ecart = ecartOf(w);
            e.poly = std::move(w);
            basis.push_back(std::move(e));
            std::uint64_t total = 0;
            for (const auto& b : basis) total += b.poly.size();
            if (total > budget_.maxMonomials)
                throw ResourceLimitError("standard basis: total monomial budget exceeded");
        };

        for (auto& g : gens) {
            if (g.empty()) continue;
            if (g.front().m.isOne()) return {Work{{g.front().m, 1}}};
            addElement(std::move(g));
        }

        while (!pairs.empty()) {
            auto it = std::min_element(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
                return a.degree != b.degree ? a.degree < b.degree : a.seq < b.seq;
            });
            Pair p = *it;
            pairs.erase(it);
            if (++processed > budget_.maxPairs)
                throw ResourceLimitError("standard basis: pair budget exceeded");
            Elem s;
            s.poly = spoly(basis[p.i].poly, basis[p.j].poly);
            normalize(s.poly);
            s.ecart = ecartOf(s.poly);
            Elem h = normalForm(std::move(s), basis, false);
            if (h.poly.empty()) continue;
            normalize(h.poly);
            if (h.poly.front().m.isOne()) return {Work{{h.poly.front().m, 1}}};
            addElement(std::move(h.poly));
        }

        // drop elements whose leading monomial is redundant
        std::vector<Work> out;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            const Monomial& mi = basis[i].poly.front().m;
            bool redundant = false;
            for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
                if (j == i) continue;
                const Monomial& mj = basis[j].poly.front().m;
                if (mj.divides(mi) && (!(mj == mi) || j < i)) redundant = true;
            }
            if (!redundant) out.push_back(basis[i].poly);
        }
        return out;
    }

    Elem elem(Work w) const {
        Elem e;
        e.ecart = ecartOf(w);
        e.poly = std::move(w);
        return e;
    }

private:
    const LocalTermOrder& order_;
    const ResourceBudget& budget_;
    std::uint64_t reductions_ = 0;
};

std::vector<Work> toWorks(const Engine& engine, const std::vector<MultiPoly>& polys) {
    std::vector<Work> out;
    out.reserve(polys.size());
    for (const auto& p : polys) out.push_back(engine.toWork(p));
    return out;
}

void requireRing(const IdealPresentation& ideal, const MultiPoly& g) {
    if (g.varCount() != ideal.varCount()) throw DomainError("polynomial and ideal live in different rings");
}

/// Gröbner basis for a global order with variable 0 eliminated first; keeps the
/// elements free of variable 0, with that variable dropped.
IdealPresentation eliminateTag(const IdealPresentation& tagged, const ResourceBudget& budget) {
    const LocalTermOrder elimination{1, true};
    Engine engine(elimination, budget);
    const std::size_t n = tagged.varCount() - 1;
    std::vector<MultiPoly> kept;
    for (const auto& w : engine.standardBasis(toWorks(engine, tagged.generators()))) {
        if (w.front().m[0] != 0) continue;
        MultiPoly h(n);
        for (const auto& t : w) h.addTerm(t.m.dropVariable(0), mpq_class(t.c));
        kept.push_back(std::move(h));
    }
    return IdealPresentation(n, std::move(kept));
}


/// Local standard basis from a Gröbner basis of the homogenized ideal. The
/// homogenizing variable comes first and the order on the homogenized ring is
/// graded, with larger powers of it winning ties; setting it to one then yields a
/// standard basis for the negative degree order.
std::vector<Work> localBasisByHomogenizing(const IdealPresentation& ideal, const LocalTermOrder& order,
                                           const ResourceBudget& budget) {
    const std::size_t n = ideal.varCount();
    const LocalTermOrder graded{n + 1, true};
    Engine homogeneous(graded, budget);
    std::vector<Work> gens;
    for (const auto& f : ideal.generators()) {
        Work w = homogeneous.toWork(f);
        if (w.empty()) continue;
        std::uint64_t top = 0;
        for (const auto& t : w) top = std::max(top, t.m.degree());
        for (auto& t : w) {
            std::vector<std::uint32_t> e{static_cast<std::uint32_t>(top - t.m.degree())};
            auto rest = t.m.exponents();
            e.insert(e.end(), rest.begin(), rest.end());
            t.m = Monomial(std::move(e));
        }
        homogeneous.sort(w);
        gens.push_back(std::move(w));
    }

    Engine local(order, budget);
    std::vector<Work> found;
    for (const auto& w : homogeneous.standardBasis(std::move(gens))) {
        Work d;
        d.reserve(w.size());
        for (const auto& t : w) d.push_back({t.m.dropVariable(0), t.c});
        local.sort(d);
        Engine::normalize(d);
        if (d.front().m.isOne()) return {Work{{d.front().m, 1}}};
        found.push_back(std::move(d));
    }
    std::sort(found.begin(), found.end(), [&](const Work& a, const Work& b) {
        if (auto c = a.front().m.degree() <=> b.front().m.degree(); c != 0) return c < 0;
        return a.size() < b.size();
    });
    std::vector<Work> out;
    for (auto& w : found)
        if (std::none_of(out.begin(), out.end(), [&](const Work& b) { return b.front().m.divides(w.front().m); }))
            out.push_back(std::move(w));
    return out;
}

}  // namespace

// ---------------------------------------------------------------- public API

MultiPoly primitivePart(const MultiPoly& f) {
    if (f.isZero()) return f;
    mpz_class den = 1;
    mpz_class num = 0;
    for (const auto& [m, c] : f.terms()) {
        den = lcm(den, mpz_class(c.get_den()));
        num = gcd(num, mpz_class(c.get_num()));
    }
    mpq_class scale(den, num);
    scale.canonicalize();
    if (f.terms().begin()->second < 0) scale = -scale;
    return f * scale;
}

IdealPresentation::IdealPresentation(std::size_t varCount, std::vector<MultiPoly> generators)
    : varCount_(varCount) {
    for (auto& g : generators) {
        if (g.varCount() != varCount) throw DomainError("ideal generator has the wrong variable count");
        if (g.isZero()) continue;
        gens_.push_back(primitivePart(g));
    }
}

IdealPresentation IdealPresentation::unit(std::size_t varCount) {
    return IdealPresentation(varCount, {MultiPoly::constant(varCount, 1)});
}

bool StandardBasis::containsUnit() const {
    return std::any_of(staircase.begin(), staircase.end(), [](const Monomial& m) { return m.isOne(); });
}

MultiPoly moraReduce(const MultiPoly& f, const std::vector<MultiPoly>& G, const LocalTermOrder& order,
                     const ResourceBudget& budget) {
    if (G.empty()) throw DomainError("moraReduce needs a nonempty divisor list");
    Engine engine(order, budget);
    std::vector<Elem> reducers;
    for (const auto& g : G) {
        if (g.varCount() != f.varCount()) throw DomainError("moraReduce: variable count mismatch");
        Work w = engine.toWork(g);
        if (!w.empty()) reducers.push_back(engine.elem(std::move(w)));
    }
    Elem h = engine.normalForm(engine.elem(engine.toWork(f)), std::move(reducers), false);
    return primitivePart(Engine::fromWork(h.poly, f.varCount()));
}

StandardBasis standardBasis(const IdealPresentation& ideal, const LocalTermOrder& order,
                            const ResourceBudget& budget) {
    Engine engine(order, budget);
    auto basis = engine.isLocal() ? localBasisByHomogenizing(ideal, order, budget)
                                  : engine.standardBasis(toWorks(engine, ideal.generators()));
    StandardBasis out;
    out.order = order;
    for (const auto& w : basis) {
        out.staircase.push_back(w.front().m);
        out.basis.push_back(Engine::fromWork(w, ideal.varCount()));
    }
    return out;
}

Colength staircaseColength(const std::vector<Monomial>& staircase, std::size_t varCount,
                           const ResourceBudget& budget) {
    for (const auto& m : staircase)
        if (m.isOne()) return Colength::of(0);
    std::vector<std::uint32_t> bound(varCount, 0);
    for (std::size_t i = 0; i < varCount; ++i) {
        for (const auto& m : staircase) {
            if (m.varCount() != varCount) throw DomainError("staircase monomial has the wrong variable count");
            if (m.degree() == m[i] && (bound[i] == 0 || m[i] < bound[i])) bound[i] = m[i];
        }
        if (bound[i] == 0) return Colength::infinite();
    }
    mpz_class box = 1;
    for (auto b : bound) box *= b;
    if (box > budget.maxMonomials) throw ResourceLimitError("colength: staircase box exceeds the monomial budget");

    std::uint64_t count = 0;
    std::vector<std::uint32_t> e(varCount, 0);
    for (;;) {
        Monomial m(e);
        bool standard = std::none_of(staircase.begin(), staircase.end(),
                                     [&](const Monomial& s) { return s.divides(m); });
        if (standard) ++count;
        std::size_t i = 0;
        while (i < varCount && ++e[i] == bound[i]) e[i++] = 0;
        if (i == varCount) break;
    }
    return Colength::of(count);
}

Colength colength(const IdealPresentation& ideal, const ResourceBudget& budget) {
    StandardBasis sb = standardBasis(ideal, LocalTermOrder{}, budget);
    return staircaseColength(sb.staircase, ideal.varCount(), budget);
}

IdealPresentation idealSum(const IdealPresentation& a, const IdealPresentation& b) {
    if (a.varCount() != b.varCount()) throw DomainError("idealSum: variable count mismatch");
    std::vector<MultiPoly> gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return IdealPresentation(a.varCount(), std::move(gens));
}

IdealPresentation idealSum(const IdealPresentation& a, const MultiPoly& g) {
    requireRing(a, g);
    return idealSum(a, IdealPresentation(a.varCount(), {g}));
}

IdealPresentation intersectPrincipal(const IdealPresentation& ideal, const MultiPoly& g,
                                     const ResourceBudget& budget) {
    requireRing(ideal, g);
    const std::size_t n = ideal.varCount();
    if (g.isZero()) return IdealPresentation(n, {});
    const MultiPoly tag = MultiPoly::variable(n + 1, 0);
    std::vector<MultiPoly> gens;
    for (const auto& f : ideal.generators()) gens.push_back(tag * f.prependVariables(1));
    gens.push_back((MultiPoly::constant(n + 1, 1) - tag) * g.prependVariables(1));

    return eliminateTag(IdealPresentation(n + 1, std::move(gens)), budget);
}

IdealPresentation idealQuotientElem(const IdealPresentation& ideal, const MultiPoly& g,
                                    const ResourceBudget& budget) {
    requireRing(ideal, g);
    if (g.isZero()) throw DomainError("idealQuotientElem: quotient by zero");
    const std::size_t n = ideal.varCount();
    IdealPresentation meet = intersectPrincipal(ideal, g, budget);

    const LocalTermOrder global{0, true};
    Engine engine(global, budget);
    Elem divisor = engine.elem(engine.toWork(g));
    divisor.cof = {Work{{Monomial(n), -1}}};  // g = 0*h - (-1)*g

    std::vector<MultiPoly> quotients;
    for (const auto& h : meet.generators()) {
        Elem cur = engine.elem(engine.toWork(h));
        cur.unit = Work{{Monomial(n), 1}};
        cur.cof = {Work{}};
        Elem r = engine.normalForm(std::move(cur), {divisor}, true);
        if (!r.poly.empty())
            throw InvariantViolation("idealQuotientElem: element of I ∩ (g) is not divisible by g");
        if (r.unit.size() != 1 || !r.unit.front().m.isOne())
            throw InvariantViolation("idealQuotientElem: division multiplier is not a constant");
        quotients.push_back(Engine::fromWork(r.cof[0], n));
    }
    return IdealPresentation(n, std::move(quotients));
}

IdealPresentation saturateElem(const IdealPresentation& ideal, const MultiPoly& g, const ResourceBudget& budget) {
    requireRing(ideal, g);
    if (g.isZero()) throw DomainError("saturateElem: saturation by zero");
    IdealPresentation current = ideal;
    for (std::uint64_t round = 0;; ++round) {
        if (round > budget.maxPairs) throw ResourceLimitError("saturateElem: quotient chain did not stabilize");
        IdealPresentation next = idealQuotientElem(current, g, budget);
        if (contains(current, next, budget)) break;
        current = std::move(next);
    }
    StandardBasis sb = standardBasis(current, LocalTermOrder{}, budget);
    return IdealPresentation(ideal.varCount(), sb.basis);
}

IdealPresentation saturateByTagVariable(const IdealPresentation& ideal, const MultiPoly& g,
                                        const ResourceBudget& budget) {
    requireRing(ideal, g);
    if (g.isZero()) throw DomainError("saturateByTagVariable: saturation by zero");
    const std::size_t n = ideal.varCount();
    const MultiPoly tag = MultiPoly::variable(n + 1, 0);
    std::vector<MultiPoly> gens;
    for (const auto& f : ideal.generators()) gens.push_back(f.prependVariables(1));
    gens.push_back(MultiPoly::constant(n + 1, 1) - tag * g.prependVariables(1));
    return eliminateTag(IdealPresentation(n + 1, std::move(gens)), budget);
}

bool contains(const IdealPresentation& ideal, const MultiPoly& f, const ResourceBudget& budget) {
    requireRing(ideal, f);
    return contains(ideal, IdealPresentation(ideal.varCount(), {f}), budget);
}

bool contains(const IdealPresentation& ideal, const IdealPresentation& sub, const ResourceBudget& budget) {
    if (ideal.varCount() != sub.varCount()) throw DomainError("contains: variable count mismatch");
    if (sub.isZero()) return true;
    if (ideal.isZero()) return false;
    // Locally J ⊆ I exactly when I + J and I share a leading ideal.
    const auto mine = standardBasis(ideal, LocalTermOrder{}, budget).staircase;
    const auto both = standardBasis(idealSum(ideal, sub), LocalTermOrder{}, budget).staircase;
    return std::all_of(both.begin(), both.end(), [&](const Monomial& m) {
        return std::any_of(mine.begin(), mine.end(), [&](const Monomial& s) { return s.divides(m); });
    });
}

bool sameIdeal(const IdealPresentation& a, const IdealPresentation& b, const ResourceBudget& budget) {
    return contains(a, b, budget) && contains(b, a, budget);
}

}  // namespace nexus
