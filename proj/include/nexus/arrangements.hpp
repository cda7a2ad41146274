#pragma once

#include "nexus/monodromy.hpp"
#include "nexus/polynomial.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace nexus {

using QVector3 = std::array<mpq_class, 3>;
using ZVector3 = std::array<mpz_class, 3>;

/// Central arrangement of planes in C^3 given by their normal vectors.
/// Construction rejects fewer than two planes, zero normals and proportional
/// (repeated) normals.
class CentralArrangement3 {
public:
    explicit CentralArrangement3(std::vector<QVector3> normals);

    const std::vector<QVector3>& normals() const noexcept { return normals_; }
    std::size_t degree() const noexcept { return normals_.size(); }

private:
    std::vector<QVector3> normals_;
};

/// A line through the origin contained in `multiplicity` >= 2 of the planes.
struct MultiplePoint {
    ZVector3 line;                // primitive, first nonzero entry positive
    std::uint64_t multiplicity = 0;
    std::vector<std::size_t> planes;  // indices of the planes containing the line
};

/// Primitive integer direction of a rational vector, first nonzero entry positive.
ZVector3 primitiveDirection(const QVector3& v);

/// All lines where at least two planes meet, sorted by direction vector.
std::vector<MultiplePoint> multiplePoints(const CentralArrangement3& arr);

/// The defining polynomial: product of the linear forms, in variables (x, y, z).
MultiPoly arrangementPolynomial(const CentralArrangement3& arr);

/// True when z0 vanishes on none of the multiple-point lines.
bool isGenericHyperplane(const CentralArrangement3& arr, const QVector3& z0);

struct ArrangementSetup {
    SingularSetup setup;
    std::vector<MultiplePoint> points;
    QVector3 z0;
};

/// Numerical setup of the arrangement. A supplied z0 must be generic (else
/// GenericityError); otherwise coordinate forms, then seeded random forms, are tried.
ArrangementSetup toSetup(const CentralArrangement3& arr, const std::optional<QVector3>& z0 = {},
                         std::uint64_t seed = 0);

/// fullReport of the arrangement plus per-k exponent ceilings for k | d0.
ConstraintReport arrangementReport(const CentralArrangement3& arr, const std::optional<QVector3>& z0 = {},
                                   std::uint64_t seed = 0);

}  // namespace nexus
