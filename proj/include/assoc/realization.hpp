#pragma once

#include <vector>

#include "assoc/dihedral.hpp"
#include "assoc/orientation.hpp"
#include "assoc/rational.hpp"
#include "assoc/triangulation.hpp"

namespace assoc {

// Weight (j-i)(k-j) of the triangle with middle vertex j: the product of the
// boundary edge counts on its two sides through smaller- resp. larger-indexed
// vertices. Always >= 1.
long long delta_weight(const Triangulation& T, int j);

// The classical integer vertex (delta_1, ..., delta_n) of T.
LatticePoint loday_vertex(const Triangulation& T);

// Weight of the unique triangle of T whose vertex labels straddle l (labels
// k < l < m under the polygon labeling induced by the orientation): the
// number of boundary edges on the arc from the l-vertex to the k-vertex
// running through labels below l, times the edge count of the arc to the
// m-vertex through labels above l. Exactly one qualifying arc exists on each
// side; a violation signals a labeling bug and throws logic_error.
long long hl_weight(const Orientation& a, const Triangulation& T, int l);

// Vertex coordinates under the orientation: x_j = hl_weight for down j,
// n+1-hl_weight for up j. Coordinates are integers but not necessarily
// positive for non-canonical orientations.
LatticePoint hl_vertex(const Orientation& a, const Triangulation& T);

// The isometry r_j carrying the labeled picture around j back to the
// identity labeling: it sends the position labeled j to position j, and
// positions with labels below j to positions below j. For down j this is a
// rotation; for up j the reflection through the edge separating the labels
// below j from those above.
DihedralElement transport_isometry(const Orientation& a, int j);

// Vertices of the realization for this orientation, one per triangulation,
// in enumeration (lexicographic) order. Throws logic_error if the vertex map
// fails to be injective.
std::vector<LatticePoint> associahedron_vertices(const Orientation& a);

}  // namespace assoc
