#include "assoc/triangulation.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace assoc {

bool is_crossing(const Diagonal& d1, const Diagonal& d2) {
  const int a = std::min(d1.a, d1.b), b = std::max(d1.a, d1.b);
  const int c = std::min(d2.a, d2.b), d = std::max(d2.a, d2.b);
  if (a == c || a == d || b == c || b == d) return false;
  const bool c_inside = a < c && c < b;
  const bool d_inside = a < d && d < b;
  return c_inside != d_inside;
}

Triangulation::Triangulation(int n, std::vector<Diagonal> diagonals)
    : n_(n), diagonals_(std::move(diagonals)) {
  if (n_ < 1) throw std::invalid_argument("Triangulation: n must be >= 1");
  const int m = n_ + 2;

  for (Diagonal& d : diagonals_) {
    if (d.a > d.b) std::swap(d.a, d.b);
    if (d.a < 0 || d.b > m - 1)
      throw std::invalid_argument("Triangulation: diagonal endpoint out of range for the " +
                                  std::to_string(m) + "-gon");
    if (d.b - d.a < 2 || (d.a == 0 && d.b == m - 1))
      throw std::invalid_argument("Triangulation: (" + std::to_string(d.a) + "," +
                                  std::to_string(d.b) + ") is not a diagonal of the " +
                                  std::to_string(m) + "-gon");
  }
  std::sort(diagonals_.begin(), diagonals_.end());
  if (std::adjacent_find(diagonals_.begin(), diagonals_.end()) != diagonals_.end())
    throw std::invalid_argument("Triangulation: duplicate diagonal");
  if (static_cast<int>(diagonals_.size()) != n_ - 1)
    throw std::invalid_argument("Triangulation: expected " + std::to_string(n_ - 1) +
                                " diagonals, got " + std::to_string(diagonals_.size()));
  for (size_t x = 0; x < diagonals_.size(); ++x)
    for (size_t y = x + 1; y < diagonals_.size(); ++y)
      if (is_crossing(diagonals_[x], diagonals_[y]))
        throw std::invalid_argument("Triangulation: crossing diagonals (" +
                                    std::to_string(diagonals_[x].a) + "," +
                                    std::to_string(diagonals_[x].b) + ") and (" +
                                    std::to_string(diagonals_[y].a) + "," +
                                    std::to_string(diagonals_[y].b) + ")");

  // Derive the triangle list. In a triangulated convex polygon the faces are
  // exactly the 3-cliques of the boundary+diagonal graph, and each middle
  // index 1..n occurs in exactly one face.
  std::vector<char> adj(static_cast<size_t>(m) * m, 0);
  auto link = [&](int x, int y) {
    adj[static_cast<size_t>(x) * m + y] = 1;
    adj[static_cast<size_t>(y) * m + x] = 1;
  };
  for (int x = 0; x < m; ++x) link(x, (x + 1) % m);
  for (const Diagonal& d : diagonals_) link(d.a, d.b);

  triangles_.assign(static_cast<size_t>(n_), Triangle{});
  std::vector<char> seen(static_cast<size_t>(n_) + 1, 0);
  for (int j = 1; j <= n_; ++j) {
    for (int i = 0; i < j; ++i) {
      if (!adj[static_cast<size_t>(i) * m + j]) continue;
      for (int k = j + 1; k < m; ++k) {
        if (!adj[static_cast<size_t>(j) * m + k] || !adj[static_cast<size_t>(i) * m + k])
          continue;
        if (seen[static_cast<size_t>(j)])
          throw std::logic_error("Triangulation: two triangles share middle vertex " +
                                 std::to_string(j));
        seen[static_cast<size_t>(j)] = 1;
        triangles_[static_cast<size_t>(j) - 1] = Triangle{i, j, k};
      }
    }
    if (!seen[static_cast<size_t>(j)])
      throw std::logic_error("Triangulation: no triangle with middle vertex " +
                             std::to_string(j));
  }
}

const Triangle& Triangulation::triangle_at(int j) const {
  if (j < 1 || j > n_)
    throw std::invalid_argument("triangle_at: index " + std::to_string(j) +
                                " outside [1," + std::to_string(n_) + "]");
  return triangles_[static_cast<size_t>(j) - 1];
}

std::string Triangulation::str() const {
  std::string s = "[";
  for (size_t x = 0; x < diagonals_.size(); ++x) {
    if (x) s += ",";
    s += "(" + std::to_string(diagonals_[x].a) + "," + std::to_string(diagonals_[x].b) + ")";
  }
  s += "]";
  return s;
}

namespace {

// Diagonal sets of all triangulations of the convex sub-polygon on vertices
// lo..hi, with (lo, hi) as base chord. Picks the apex of the triangle resting
// on the base and combines both sides; each triangulation appears exactly once.
std::vector<std::vector<Diagonal>> arc_triangulations(int lo, int hi) {
  std::vector<std::vector<Diagonal>> res;
  if (hi - lo < 2) {
    res.emplace_back();
    return res;
  }
  for (int t = lo + 1; t < hi; ++t) {
    const auto left = arc_triangulations(lo, t);
    const auto right = arc_triangulations(t, hi);
    for (const auto& ls : left)
      for (const auto& rs : right) {
        std::vector<Diagonal> s;
        s.reserve(ls.size() + rs.size() + 2);
        s.insert(s.end(), ls.begin(), ls.end());
        s.insert(s.end(), rs.begin(), rs.end());
        if (t - lo >= 2) s.push_back(Diagonal{lo, t});
        if (hi - t >= 2) s.push_back(Diagonal{t, hi});
        res.push_back(std::move(s));
      }
  }
  return res;
}

}  // namespace

std::vector<Triangulation> enumerate_triangulations(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_triangulations: n must be >= 1");
  auto sets = arc_triangulations(0, n + 1);
  for (auto& s : sets) std::sort(s.begin(), s.end());
  std::sort(sets.begin(), sets.end());
  std::vector<Triangulation> result;
  result.reserve(sets.size());
  for (auto& s : sets) result.emplace_back(n, std::move(s));
  return result;
}

}  // namespace assoc
