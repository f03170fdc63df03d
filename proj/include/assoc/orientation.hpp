#pragma once

#include <string>
#include <vector>

namespace assoc {

// An orientation of the type-A Coxeter graph on nodes tau_1..tau_{n-1},
// encoded by its set of "up" elements: j in [n] is up iff the edge
// {tau_{j-1}, tau_j} is directed from tau_j to tau_{j-1}. 1 and n are always
// down, so the up-set is a subset of {2, ..., n-1} and there are 2^(n-2)
// orientations for n >= 2.
class Orientation {
 public:
  Orientation(int n, std::vector<int> up);
  static Orientation canonical(int n) { return Orientation(n, {}); }

  int n() const { return n_; }
  const std::vector<int>& up() const { return up_; }
  std::vector<int> down() const;
  bool is_up(int j) const;

  // "{}" or "{2,4}"; used in reports and CLI output.
  std::string up_str() const;

  friend bool operator==(const Orientation&, const Orientation&) = default;

 private:
  int n_;
  std::vector<int> up_;  // sorted
};

// All orientations of rank n, ordered canonical-first (by up-set bitmask).
std::vector<Orientation> all_orientations(int n);

// The relabeling of the (n+2)-gon induced by an orientation: position 0 keeps
// label 0; counterclockwise from position 1 come the down elements in
// increasing order, then n+1, then the up elements in decreasing order.
struct LabeledPolygon {
  int n = 1;
  std::vector<int> label_of_position;
  std::vector<int> position_of_label;
};

LabeledPolygon label_polygon(const Orientation& a);

}  // namespace assoc
