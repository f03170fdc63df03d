#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "assoc/triangulation.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace assoc;

TEST_CASE("crossing means strictly interleaved endpoints") {
  CHECK(is_crossing({0, 2}, {1, 3}));
  CHECK(is_crossing({1, 3}, {0, 2}));
  CHECK(is_crossing({1, 4}, {0, 3}));
  CHECK_FALSE(is_crossing({0, 2}, {0, 3}));   // shared endpoint
  CHECK_FALSE(is_crossing({0, 2}, {2, 4}));   // shared endpoint
  CHECK_FALSE(is_crossing({0, 2}, {3, 5}));   // disjoint sides
  CHECK_FALSE(is_crossing({1, 3}, {1, 3}));
}

TEST_CASE("crossing is symmetric on the octagon") {
  std::vector<Diagonal> chords;
  for (int a = 0; a < 8; ++a)
    for (int b = a + 2; b < 8; ++b) chords.push_back({a, b});
  for (const Diagonal& c : chords)
    for (const Diagonal& d : chords) CHECK(is_crossing(c, d) == is_crossing(d, c));
}

TEST_CASE("constructor canonicalizes diagonal order and endpoints") {
  const Triangulation T(3, {{3, 0}, {2, 0}});
  CHECK(T.diagonals() == std::vector<Diagonal>{{0, 2}, {0, 3}});
  CHECK(T.n() == 3);
  CHECK(T.polygon_size() == 5);
  CHECK(T.str() == "[(0,2),(0,3)]");
  CHECK(Triangulation(1, {}).str() == "[]");
}

TEST_CASE("constructor rejects malformed diagonal sets") {
  CHECK_THROWS_AS(Triangulation(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(Triangulation(3, {{0, 2}}), std::invalid_argument);  // count
  CHECK_THROWS_AS(Triangulation(3, {{0, 2}, {1, 3}}), std::invalid_argument);  // crossing
  CHECK_THROWS_AS(Triangulation(3, {{0, 1}, {0, 3}}), std::invalid_argument);  // edge
  CHECK_THROWS_AS(Triangulation(3, {{0, 4}, {0, 2}}), std::invalid_argument);  // wrap edge
  CHECK_THROWS_AS(Triangulation(3, {{0, 2}, {0, 2}}), std::invalid_argument);  // dup
  CHECK_THROWS_AS(Triangulation(3, {{0, 2}, {0, 5}}), std::invalid_argument);  // range
}

TEST_CASE("triangles are recovered and indexed by middle vertex") {
  const Triangulation T(3, {{0, 2}, {0, 3}});
  CHECK(T.triangles() == std::vector<Triangle>{{0, 1, 2}, {0, 2, 3}, {0, 3, 4}});
  for (int j = 1; j <= 3; ++j) CHECK(T.triangle_at(j).j == j);
  CHECK_THROWS_AS(T.triangle_at(0), std::invalid_argument);
  CHECK_THROWS_AS(T.triangle_at(4), std::invalid_argument);

  for (int n = 1; n <= 6; ++n)
    for (const Triangulation& S : enumerate_triangulations(n)) {
      REQUIRE(S.triangles().size() == static_cast<size_t>(n));
      for (int j = 1; j <= n; ++j) {
        const Triangle& t = S.triangle_at(j);
        CHECK(t.i < t.j);
        CHECK(t.j < t.k);
        CHECK(t.j == j);
      }
    }
}

TEST_CASE("enumeration counts match the recurrence") {
  for (int n = 1; n <= 12; ++n)
    CHECK(enumerate_triangulations(n).size() ==
          static_cast<size_t>(catalan_oracle(n)));
}

TEST_CASE("diagonal lists round-trip through the constructor") {
  for (int n = 1; n <= 8; ++n)
    for (const Triangulation& T : enumerate_triangulations(n))
      CHECK(Triangulation(T.n(), T.diagonals()) == T);
}

TEST_CASE("enumeration is sorted and duplicate-free") {
  for (int n = 1; n <= 8; ++n) {
    const auto all = enumerate_triangulations(n);
    CHECK(std::is_sorted(all.begin(), all.end()));
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
  }
}

TEST_CASE("pentagon enumeration is the known five") {
  const auto all = enumerate_triangulations(3);
  const std::vector<Triangulation> expected{
      Triangulation(3, {{0, 2}, {0, 3}}), Triangulation(3, {{0, 2}, {2, 4}}),
      Triangulation(3, {{0, 3}, {1, 3}}), Triangulation(3, {{1, 3}, {1, 4}}),
      Triangulation(3, {{1, 4}, {2, 4}})};
  CHECK(all == expected);
}

TEST_CASE("degenerate ranks enumerate correctly") {
  CHECK(enumerate_triangulations(1) == std::vector<Triangulation>{Triangulation(1, {})});
  CHECK(enumerate_triangulations(2) ==
        std::vector<Triangulation>{Triangulation(2, {{0, 2}}), Triangulation(2, {{1, 3}})});
  CHECK_THROWS_AS(enumerate_triangulations(0), std::invalid_argument);
}
