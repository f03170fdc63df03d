#pragma once

#include <vector>

#include "assoc/triangulation.hpp"

namespace assoc {

// Isometry of the regular m-gon acting on vertex positions:
//   x -> (shift + x) mod m   when reflect is false (rotation),
//   x -> (shift - x) mod m   when reflect is true  (reflection).
// Normal form: 0 <= shift < m. Equality and ordering are structural, so
// element listings are deterministic.
struct DihedralElement {
  int m = 3;
  bool reflect = false;
  int shift = 0;

  int apply(int x) const;

  // Composition "this after other": (f.compose(g))(x) == f(g(x)).
  DihedralElement compose(const DihedralElement& other) const;
  DihedralElement inverse() const;

  friend auto operator<=>(const DihedralElement&, const DihedralElement&) = default;
};

DihedralElement identity_element(int m);
DihedralElement rotation(int m, int t);

// The reflection x -> (k+1-x) mod m: it swaps vertices 0 and k+1 and fixes
// the edge midpoint between k/2-ish positions. k is taken mod m.
DihedralElement reflection_s(int m, int k);

// All 2m elements: the m rotations (by shift), then the m reflections.
std::vector<DihedralElement> all_elements(int m);

// Image triangulation: applies g to every diagonal endpoint and
// re-canonicalizes. Requires g.m == T.polygon_size().
Triangulation act(const DihedralElement& g, const Triangulation& T);

// The orbit of T under the full dihedral group, deduplicated and sorted.
std::vector<Triangulation> orbit(const Triangulation& T);

// The subgroup fixing T, listed in all_elements order.
std::vector<DihedralElement> stabilizer(const Triangulation& T);

// Partitions the given triangulations into dihedral orbits. Orbits appear in
// order of their lexicographically least member (the orbit id); members are
// sorted within each orbit. Input must be closed under the action.
std::vector<std::vector<Triangulation>> orbit_partition(
    const std::vector<Triangulation>& all);

}  // namespace assoc
