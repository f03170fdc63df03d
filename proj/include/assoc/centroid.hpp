#pragma once

#include <vector>

#include "assoc/rational.hpp"

namespace assoc {

// Coordinatewise exact average of a nonempty family of equal-dimension
// points. No rounding anywhere.
RationalPoint barycenter(const std::vector<LatticePoint>& points);

// All n! permutations of (1, ..., n) as points of R^n, lexicographic order.
std::vector<LatticePoint> permutahedron_vertices(int n);

}  // namespace assoc
