#include "nexus/arrangements.hpp"

#include "nexus/errors.hpp"
#include "nexus/le_numbers.hpp"

#include <algorithm>
#include <map>

namespace nexus {

namespace {

QVector3 cross(const QVector3& a, const QVector3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

bool isZero(const QVector3& v) { return v[0] == 0 && v[1] == 0 && v[2] == 0; }

mpq_class dot(const QVector3& a, const ZVector3& b) {
    return a[0] * mpq_class(b[0]) + a[1] * mpq_class(b[1]) + a[2] * mpq_class(b[2]);
}

}  // namespace

CentralArrangement3::CentralArrangement3(std::vector<QVector3> normals) : normals_(std::move(normals)) {
    if (normals_.size() < 2) throw DomainError("an arrangement needs at least two planes");
    for (std::size_t i = 0; i < normals_.size(); ++i) {
        if (isZero(normals_[i])) throw DomainError("plane " + std::to_string(i) + " has a zero normal");
        for (std::size_t j = 0; j < i; ++j)
            if (isZero(cross(normals_[i], normals_[j])))
                throw DomainError("planes " + std::to_string(j) + " and " + std::to_string(i) +
                                  " coincide: the arrangement must be reduced");
    }
}

ZVector3 primitiveDirection(const QVector3& v) {
    mpz_class den = 1;
    for (const auto& c : v) den = lcm(den, mpz_class(c.get_den()));
    ZVector3 z;
    mpz_class g = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        z[i] = mpz_class(v[i] * den);
        g = gcd(g, z[i]);
    }
    if (g == 0) throw DomainError("direction of the zero vector");
    for (const auto& c : z)
        if (c != 0) {
            if (c < 0) g = -g;
            break;
        }
    for (auto& c : z) c /= g;
    return z;
}

std::vector<MultiplePoint> multiplePoints(const CentralArrangement3& arr) {
    const auto& normals = arr.normals();
    std::map<ZVector3, std::vector<std::size_t>> lines;
    std::map<ZVector3, std::uint64_t> pairCount;
    for (std::size_t i = 0; i < normals.size(); ++i)
        for (std::size_t j = i + 1; j < normals.size(); ++j) {
            ZVector3 dir = primitiveDirection(cross(normals[i], normals[j]));
            auto& planes = lines[dir];
            for (std::size_t p : {i, j})
                if (std::find(planes.begin(), planes.end(), p) == planes.end()) planes.push_back(p);
            ++pairCount[dir];
        }
    std::vector<MultiplePoint> out;
    for (auto& [dir, planes] : lines) {
        std::sort(planes.begin(), planes.end());
        const std::uint64_t m = planes.size();
        if (pairCount[dir] != m * (m - 1) / 2)
            throw InvariantViolation("pairs meeting in a line do not match its plane count");
        out.push_back({dir, m, planes});
    }
    return out;
}

MultiPoly arrangementPolynomial(const CentralArrangement3& arr) {
    MultiPoly f = MultiPoly::constant(3, 1);
    for (const auto& n : arr.normals()) {
        MultiPoly form(3);
        for (std::size_t i = 0; i < 3; ++i) form.addTerm(Monomial::variable(3, i), n[i]);
        f = f * form;
    }
    return f;
}

bool isGenericHyperplane(const CentralArrangement3& arr, const QVector3& z0) {
    if (isZero(z0)) return false;
    for (const auto& p : multiplePoints(arr))
        if (dot(z0, p.line) == 0) return false;
    return true;
}

ArrangementSetup toSetup(const CentralArrangement3& arr, const std::optional<QVector3>& z0, std::uint64_t seed) {
    ArrangementSetup out;
    out.points = multiplePoints(arr);
    auto generic = [&](const QVector3& form) {
        if (isZero(form)) return false;
        for (const auto& p : out.points)
            if (dot(form, p.line) == 0) return false;
        return true;
    };
    if (z0) {
        if (!generic(*z0)) throw GenericityError("z0 vanishes on a multiple-point line of the arrangement");
        out.z0 = *z0;
    } else {
        std::vector<QVector3> candidates = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
        for (const auto& form : randomLinearForms(3, 64, seed)) candidates.push_back({form[0], form[1], form[2]});
        auto it = std::find_if(candidates.begin(), candidates.end(), generic);
        if (it == candidates.end()) throw GenericityError("no generic hyperplane found for the arrangement");
        out.z0 = *it;
    }

    const std::uint64_t d0 = arr.degree();
    SingularSetup& s = out.setup;
    s.n = 2;
    s.mu0 = (d0 - 1) * (d0 - 1);
    s.d0 = d0;
    s.charH0 = homogeneousChar(2, d0);
    for (const auto& p : out.points) {
        ComponentData c;
        c.k = 1;
        c.mu = (p.multiplicity - 1) * (p.multiplicity - 1);
        c.d = p.multiplicity;
        c.charH = homogeneousChar(2, p.multiplicity);
        s.components.push_back(std::move(c));
    }
    return out;
}

ConstraintReport arrangementReport(const CentralArrangement3& arr, const std::optional<QVector3>& z0,
                                   std::uint64_t seed) {
    ArrangementSetup a = toSetup(arr, z0, seed);
    ConstraintReport r = fullReport(a.setup);

    const std::uint64_t d0 = arr.degree();
    const auto [a0, b0] = homogeneousExponents(2, d0);
    std::vector<CycloProduct> chars;
    for (const auto& c : a.setup.components) chars.push_back(*c.charH);
    const CycloProduct prod = product(chars);
    for (std::uint64_t k : divisors(d0)) {
        ExponentCeiling e;
        e.k = k;
        e.fromH0 = static_cast<std::uint64_t>(k == 1 ? a0 : b0);
        e.fromComponents = prod.exponent(k);
        e.ceiling = std::min(e.fromH0, e.fromComponents);
        r.exponentCeilings.push_back(e);
    }
    return r;
}

}  // namespace nexus
