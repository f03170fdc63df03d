#include "assoc/centroid.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace assoc {

RationalPoint barycenter(const std::vector<LatticePoint>& points) {
  if (points.empty()) throw std::invalid_argument("barycenter: empty point list");
  const size_t dim = points.front().size();
  std::vector<long long> sums(dim, 0);
  for (const LatticePoint& p : points) {
    if (p.size() != dim)
      throw std::invalid_argument("barycenter: dimension mismatch (" +
                                  std::to_string(dim) + " vs " +
                                  std::to_string(p.size()) + ")");
    for (size_t i = 0; i < dim; ++i) sums[i] += p[i];
  }
  RationalPoint g;
  g.reserve(dim);
  for (long long s : sums) g.emplace_back(s, static_cast<long long>(points.size()));
  return g;
}

std::vector<LatticePoint> permutahedron_vertices(int n) {
  if (n < 1) throw std::invalid_argument("permutahedron_vertices: n must be >= 1");
  LatticePoint p(static_cast<size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::vector<LatticePoint> points;
  do {
    points.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return points;
}

}  // namespace assoc
