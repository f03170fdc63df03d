#pragma once

#include <vector>

#include "assoc/orientation.hpp"
#include "assoc/rational.hpp"
#include "assoc/triangulation.hpp"

namespace assoc {

// A permutation sigma of [2n] with sigma(i) + sigma(2n+1-i) = 2n+1 for all
// i in [n] (equivalently a signed permutation of [n]).
struct SignedPermutation {
  std::vector<int> sigma;  // sigma[i-1] = image of i, values in [1, 2n]

  explicit SignedPermutation(std::vector<int> s);
  int rank() const { return static_cast<int>(sigma.size()) / 2; }

  friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;
};

// All 2^n * n! elements, deterministically ordered (pair permutation outer,
// sign pattern inner); the identity comes first.
std::vector<SignedPermutation> hyperoctahedral_elements(int n);

// One point (sigma(1), ..., sigma(2n)) in R^(2n) per group element.
std::vector<LatticePoint> permutahedron_b_vertices(int n);

// True iff T is fixed by the half-turn of its (even-sized) polygon.
bool is_centrally_symmetric(const Triangulation& T);

// The centrally symmetric triangulations of the (2n+2)-gon, in enumeration
// order; there are binomial(2n, n) of them.
std::vector<Triangulation> enumerate_symmetric_triangulations(int n);

// An orientation of the rank-2n graph is symmetric when the edges
// {tau_i, tau_{i+1}} and {tau_{2n-i-1}, tau_{2n-i}} point in opposite
// directions: exactly one of each pair {j, 2n+1-j} is up, j in {2,...,2n-1}.
bool is_symmetric_orientation(const Orientation& a);

// The 2^(n-1) symmetric orientations of the rank-2n graph.
std::vector<Orientation> symmetric_orientations(int n);

// Cyclohedron vertices: the realization restricted to centrally symmetric
// triangulations, in R^(2n). Requires a symmetric orientation.
std::vector<LatticePoint> cyclohedron_vertices(const Orientation& a);

}  // namespace assoc
