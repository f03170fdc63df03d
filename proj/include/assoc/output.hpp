#pragma once

#include <optional>
#include <string>
#include <vector>

#include "assoc/rational.hpp"
#include "assoc/triangulation.hpp"

namespace assoc {

struct OrbitRecord {
  std::vector<Triangulation> members;
  int stabilizer_order = 0;
  RationalPoint centroid;
};

// Serializable bundle for one polytope. n is the Coxeter rank, so the
// ambient dimension is n for the type-A kinds and 2n for the type-B kinds.
struct OutputDocument {
  int n = 1;
  std::string kind;  // associahedron | cyclohedron | permutahedron-a | permutahedron-b
  std::optional<std::vector<int>> up;  // absent for the permutahedra
  std::vector<LatticePoint> vertices;
  RationalPoint centroid;
  std::optional<std::vector<OrbitRecord>> orbits;
};

// Keys in fixed order: n, kind, up, vertices, centroid, then orbits when
// present. An absent up serializes as null; coordinates are plain integers
// and centroid entries are "p/q" strings, so no floats ever appear.
std::string to_json(const OutputDocument& doc);

// Header x1,...,xd, then one vertex per row of integer cells.
std::string to_csv(const OutputDocument& doc);

}  // namespace assoc
