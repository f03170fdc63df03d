#include "assoc/realization.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>

namespace assoc {

long long delta_weight(const Triangulation& T, int j) {
  const Triangle& t = T.triangle_at(j);
  return static_cast<long long>(t.j - t.i) * (t.k - t.j);
}

LatticePoint loday_vertex(const Triangulation& T) {
  LatticePoint p;
  p.reserve(static_cast<size_t>(T.n()));
  for (int j = 1; j <= T.n(); ++j) p.push_back(delta_weight(T, j));
  return p;
}

namespace {

void require_same_rank(const Orientation& a, const Triangulation& T) {
  if (a.n() != T.n())
    throw std::invalid_argument("orientation of rank " + std::to_string(a.n()) +
                                " paired with a triangulation of rank " +
                                std::to_string(T.n()));
}

// Edge count of the boundary arc from position p to position q all of whose
// vertices aside from p satisfy pred on their label. Exactly one of the two
// arcs must qualify.
template <typename Pred>
int qualifying_arc_length(const LabeledPolygon& lp, int p, int q, Pred pred) {
  const int m = lp.n + 2;
  int length = -1;
  for (int dir : {+1, -1}) {
    bool ok = true;
    int steps = 0;
    for (int x = (p + dir + m) % m; ; x = (x + dir + m) % m) {
      ++steps;
      if (!pred(lp.label_of_position[static_cast<size_t>(x)])) {
        ok = false;
        break;
      }
      if (x == q) break;
    }
    if (ok) {
      if (length >= 0)
        throw std::logic_error("hl_weight: both boundary arcs qualify");
      length = steps;
    }
  }
  if (length < 0) throw std::logic_error("hl_weight: no qualifying boundary arc");
  return length;
}

}  // namespace

long long hl_weight(const Orientation& a, const Triangulation& T, int l) {
  require_same_rank(a, T);
  const int n = a.n();
  if (l < 1 || l > n)
    throw std::invalid_argument("hl_weight: index " + std::to_string(l) +
                                " outside [1," + std::to_string(n) + "]");
  const LabeledPolygon lp = label_polygon(a);

  // The unique triangle whose middle vertex label is l.
  const Triangle* found = nullptr;
  int pos_low = -1, pos_high = -1, pos_l = -1;
  for (const Triangle& t : T.triangles()) {
    const int la = lp.label_of_position[static_cast<size_t>(t.i)];
    const int lb = lp.label_of_position[static_cast<size_t>(t.j)];
    const int lc = lp.label_of_position[static_cast<size_t>(t.k)];
    for (const auto& [mid, mid_pos, o1, o1_pos, o2, o2_pos] :
         {std::tuple{la, t.i, lb, t.j, lc, t.k}, std::tuple{lb, t.j, la, t.i, lc, t.k},
          std::tuple{lc, t.k, la, t.i, lb, t.j}}) {
      if (mid != l) continue;
      const int lo = std::min(o1, o2), hi = std::max(o1, o2);
      if (!(lo < l && l < hi)) continue;
      if (found)
        throw std::logic_error("hl_weight: two triangles straddle label " +
                               std::to_string(l));
      found = &t;
      pos_l = mid_pos;
      pos_low = (o1 < o2) ? o1_pos : o2_pos;
      pos_high = (o1 < o2) ? o2_pos : o1_pos;
    }
  }
  if (!found)
    throw std::logic_error("hl_weight: no triangle straddles label " + std::to_string(l));

  const int below = qualifying_arc_length(lp, pos_l, pos_low,
                                          [l](int label) { return label < l; });
  const int above = qualifying_arc_length(lp, pos_l, pos_high,
                                          [l](int label) { return label > l; });
  return static_cast<long long>(below) * above;
}

LatticePoint hl_vertex(const Orientation& a, const Triangulation& T) {
  require_same_rank(a, T);
  const int n = a.n();
  LatticePoint p;
  p.reserve(static_cast<size_t>(n));
  for (int j = 1; j <= n; ++j) {
    const long long w = hl_weight(a, T, j);
    p.push_back(a.is_up(j) ? n + 1 - w : w);
  }
  return p;
}

DihedralElement transport_isometry(const Orientation& a, int j) {
  const int n = a.n();
  if (j < 1 || j > n)
    throw std::invalid_argument("transport_isometry: index " + std::to_string(j) +
                                " outside [1," + std::to_string(n) + "]");
  const int m = n + 2;
  const LabeledPolygon lp = label_polygon(a);
  const int l = lp.position_of_label[static_cast<size_t>(j)];
  if (!a.is_up(j)) return rotation(m, j - l);

  // Greatest down element below j; 1 is always down, so it exists.
  int alpha = j - 1;
  while (a.is_up(alpha)) --alpha;
  const int p = lp.position_of_label[static_cast<size_t>(alpha)];
  return DihedralElement{m, true, p};
}

std::vector<LatticePoint> associahedron_vertices(const Orientation& a) {
  std::vector<LatticePoint> vertices;
  std::set<LatticePoint> distinct;
  for (const Triangulation& T : enumerate_triangulations(a.n())) {
    vertices.push_back(hl_vertex(a, T));
    distinct.insert(vertices.back());
  }
  if (distinct.size() != vertices.size())
    throw std::logic_error("associahedron_vertices: vertex map is not injective");
  return vertices;
}

}  // namespace assoc
