#include "assoc/type_b.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "assoc/dihedral.hpp"
#include "assoc/realization.hpp"

namespace assoc {

SignedPermutation::SignedPermutation(std::vector<int> s) : sigma(std::move(s)) {
  const int two_n = static_cast<int>(sigma.size());
  if (two_n == 0 || two_n % 2 != 0)
    throw std::invalid_argument("SignedPermutation: length must be a positive even number");
  std::vector<char> hit(static_cast<size_t>(two_n) + 1, 0);
  for (int v : sigma) {
    if (v < 1 || v > two_n || hit[static_cast<size_t>(v)])
      throw std::invalid_argument("SignedPermutation: not a bijection of [" +
                                  std::to_string(two_n) + "]");
    hit[static_cast<size_t>(v)] = 1;
  }
  for (int i = 1; i <= two_n / 2; ++i)
    if (sigma[static_cast<size_t>(i) - 1] + sigma[static_cast<size_t>(two_n - i)] !=
        two_n + 1)
      throw std::invalid_argument("SignedPermutation: sigma(" + std::to_string(i) +
                                  ") + sigma(" + std::to_string(two_n + 1 - i) +
                                  ") != " + std::to_string(two_n + 1));
}

std::vector<SignedPermutation> hyperoctahedral_elements(int n) {
  if (n < 1) throw std::invalid_argument("hyperoctahedral_elements: n must be >= 1");
  const int two_n = 2 * n;
  std::vector<int> pair(static_cast<size_t>(n));
  std::iota(pair.begin(), pair.end(), 1);
  std::vector<SignedPermutation> elems;
  elems.reserve((static_cast<size_t>(1) << n) * [n] {
    size_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<size_t>(i);
    return f;
  }());
  do {
    for (unsigned signs = 0; signs < (1u << n); ++signs) {
      std::vector<int> sigma(static_cast<size_t>(two_n));
      for (int i = 1; i <= n; ++i) {
        const int base = pair[static_cast<size_t>(i) - 1];
        const int v = (signs & (1u << (i - 1))) ? two_n + 1 - base : base;
        sigma[static_cast<size_t>(i) - 1] = v;
        sigma[static_cast<size_t>(two_n - i)] = two_n + 1 - v;
      }
      elems.emplace_back(std::move(sigma));
    }
  } while (std::next_permutation(pair.begin(), pair.end()));
  return elems;
}

std::vector<LatticePoint> permutahedron_b_vertices(int n) {
  std::vector<LatticePoint> points;
  for (const SignedPermutation& s : hyperoctahedral_elements(n)) {
    LatticePoint p;
    p.reserve(s.sigma.size());
    for (int v : s.sigma) p.push_back(v);
    points.push_back(std::move(p));
  }
  return points;
}

bool is_centrally_symmetric(const Triangulation& T) {
  const int m = T.polygon_size();
  if (m % 2 != 0)
    throw std::invalid_argument("is_centrally_symmetric: polygon size " +
                                std::to_string(m) + " is odd");
  return act(rotation(m, m / 2), T) == T;
}

std::vector<Triangulation> enumerate_symmetric_triangulations(int n) {
  if (n < 1)
    throw std::invalid_argument("enumerate_symmetric_triangulations: n must be >= 1");
  std::vector<Triangulation> symmetric;
  for (const Triangulation& T : enumerate_triangulations(2 * n))
    if (is_centrally_symmetric(T)) symmetric.push_back(T);
  return symmetric;
}

bool is_symmetric_orientation(const Orientation& a) {
  const int rank = a.n();
  if (rank % 2 != 0)
    throw std::invalid_argument("is_symmetric_orientation: rank " +
                                std::to_string(rank) + " is odd");
  for (int j = 2; j <= rank - 1; ++j)
    if (a.is_up(j) == a.is_up(rank + 1 - j)) return false;
  return true;
}

std::vector<Orientation> symmetric_orientations(int n) {
  if (n < 1) throw std::invalid_argument("symmetric_orientations: n must be >= 1");
  std::vector<Orientation> result;
  for (const Orientation& a : all_orientations(2 * n))
    if (is_symmetric_orientation(a)) result.push_back(a);
  return result;
}

std::vector<LatticePoint> cyclohedron_vertices(const Orientation& a) {
  if (a.n() % 2 != 0 || !is_symmetric_orientation(a))
    throw std::invalid_argument("cyclohedron_vertices: orientation " + a.up_str() +
                                " of rank " + std::to_string(a.n()) + " is not symmetric");
  const int n = a.n() / 2;
  std::vector<LatticePoint> vertices;
  std::set<LatticePoint> distinct;
  for (const Triangulation& T : enumerate_symmetric_triangulations(n)) {
    vertices.push_back(hl_vertex(a, T));
    distinct.insert(vertices.back());
  }
  if (distinct.size() != vertices.size())
    throw std::logic_error("cyclohedron_vertices: vertex map is not injective");
  return vertices;
}

}  // namespace assoc
