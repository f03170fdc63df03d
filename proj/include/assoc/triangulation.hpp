#pragma once

#include <compare>
#include <string>
#include <vector>

namespace assoc {

// A polygon vertex is a plain index in [0, m) where m = n+2 is the polygon
// size; positions run counterclockwise.

// Chord between two non-adjacent polygon vertices, stored with a < b.
struct Diagonal {
  int a = 0;
  int b = 0;
  friend auto operator<=>(const Diagonal&, const Diagonal&) = default;
};

// Triangle on polygon vertices i < j < k; j is the middle index.
struct Triangle {
  int i = 0;
  int j = 0;
  int k = 0;
  friend auto operator<=>(const Triangle&, const Triangle&) = default;
};

// True iff the open chords strictly cross (endpoints strictly interleave
// around the circle). Sharing an endpoint is not crossing.
bool is_crossing(const Diagonal& d1, const Diagonal& d2);

// A triangulation of the (n+2)-gon: n-1 pairwise noncrossing diagonals in
// canonical (sorted) order, with the derived list of the n triangles indexed
// by middle vertex. Immutable after construction; equality and ordering are
// structural on (n, diagonals).
class Triangulation {
 public:
  // Validates everything: diagonal count, per-diagonal validity for the
  // (n+2)-gon, pairwise noncrossing. Diagonals may be given in any order
  // and endpoint orientation; they are canonicalized.
  Triangulation(int n, std::vector<Diagonal> diagonals);

  int n() const { return n_; }
  int polygon_size() const { return n_ + 2; }
  const std::vector<Diagonal>& diagonals() const { return diagonals_; }
  const std::vector<Triangle>& triangles() const { return triangles_; }

  // The unique triangle with middle vertex j, 1 <= j <= n.
  const Triangle& triangle_at(int j) const;

  // "[(0,2),(0,3)]"; the empty diagonal set prints as "[]".
  std::string str() const;

  friend bool operator==(const Triangulation& x, const Triangulation& y) {
    return x.n_ == y.n_ && x.diagonals_ == y.diagonals_;
  }
  friend std::strong_ordering operator<=>(const Triangulation& x,
                                          const Triangulation& y) {
    if (auto c = x.n_ <=> y.n_; c != 0) return c;
    return x.diagonals_ <=> y.diagonals_;
  }

 private:
  int n_;
  std::vector<Diagonal> diagonals_;
  std::vector<Triangle> triangles_;
};

// All triangulations of the (n+2)-gon in lexicographic order of their
// diagonal sets. The count is the n-th Catalan number.
std::vector<Triangulation> enumerate_triangulations(int n);

}  // namespace assoc
