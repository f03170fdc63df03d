#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "assoc/dihedral.hpp"
#include "assoc/orientation.hpp"
#include "assoc/realization.hpp"
#include "assoc/triangulation.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace assoc;

TEST_CASE("triangle weights multiply the two side spans") {
  const Triangulation T(3, {{0, 2}, {0, 3}});
  CHECK(delta_weight(T, 1) == 1);
  CHECK(delta_weight(T, 2) == 2);
  CHECK(delta_weight(T, 3) == 3);
  CHECK(loday_vertex(T) == LatticePoint{1, 2, 3});
}

TEST_CASE("classical pentagon vertices are the known five") {
  const std::map<Triangulation, LatticePoint> expected{
      {Triangulation(3, {{0, 2}, {0, 3}}), {1, 2, 3}},
      {Triangulation(3, {{0, 2}, {2, 4}}), {1, 4, 1}},
      {Triangulation(3, {{0, 3}, {1, 3}}), {2, 1, 3}},
      {Triangulation(3, {{1, 3}, {1, 4}}), {3, 1, 2}},
      {Triangulation(3, {{1, 4}, {2, 4}}), {3, 2, 1}}};
  for (const auto& [T, v] : expected) CHECK(loday_vertex(T) == v);
}

TEST_CASE("orientations enumerate canonical-first") {
  CHECK(all_orientations(1).size() == 1);
  CHECK(all_orientations(2).size() == 1);
  const auto a4 = all_orientations(4);
  REQUIRE(a4.size() == 4);
  CHECK(a4[0].up().empty());
  CHECK(a4[1].up() == std::vector<int>{2});
  CHECK(a4[2].up() == std::vector<int>{3});
  CHECK(a4[3].up() == std::vector<int>{2, 3});
  CHECK_THROWS_AS(Orientation(4, {1}), std::invalid_argument);
  CHECK_THROWS_AS(Orientation(4, {4}), std::invalid_argument);
  CHECK_THROWS_AS(Orientation(4, {2, 2}), std::invalid_argument);
}

TEST_CASE("polygon labels walk down elements then up elements") {
  const LabeledPolygon lp = label_polygon(Orientation(5, {2, 4}));
  CHECK(lp.label_of_position == std::vector<int>{0, 1, 3, 5, 6, 4, 2});
  for (int p = 0; p < 7; ++p)
    CHECK(lp.position_of_label[static_cast<size_t>(
              lp.label_of_position[static_cast<size_t>(p)])] == p);

  const LabeledPolygon canonical = label_polygon(Orientation::canonical(5));
  for (int p = 0; p < 7; ++p)
    CHECK(canonical.label_of_position[static_cast<size_t>(p)] == p);
}

TEST_CASE("canonical orientation reproduces the classical vertices") {
  for (int n = 1; n <= 8; ++n) {
    const Orientation a = Orientation::canonical(n);
    for (const Triangulation& T : enumerate_triangulations(n))
      CHECK(hl_vertex(a, T) == loday_vertex(T));
  }
}

TEST_CASE("weights and vertices for one up element on the pentagon") {
  const Orientation a(3, {2});
  const Triangulation fan(3, {{0, 2}, {0, 3}});
  CHECK(hl_weight(a, fan, 1) == 1);
  CHECK(hl_weight(a, fan, 2) == 1);
  CHECK(hl_weight(a, fan, 3) == 2);
  CHECK(hl_vertex(a, fan) == LatticePoint{1, 3, 2});

  std::set<LatticePoint> points;
  for (const Triangulation& T : enumerate_triangulations(3))
    points.insert(hl_vertex(a, T));
  CHECK(points == std::set<LatticePoint>{
                      {1, 3, 2}, {3, 2, 1}, {1, 2, 3}, {2, 3, 1}, {3, 0, 3}});
}

TEST_CASE("coordinates can leave the positive range but weights cannot") {
  for (int n = 1; n <= 5; ++n)
    for (const Orientation& a : all_orientations(n))
      for (const Triangulation& T : enumerate_triangulations(n))
        for (int j = 1; j <= n; ++j) CHECK(hl_weight(a, T, j) >= 1);
  // (3,0,3) above witnesses a zero coordinate after the up-flip.
}

TEST_CASE("coordinate sums equal the triangle count invariant") {
  for (int n = 1; n <= 6; ++n) {
    const long long expected = static_cast<long long>(n) * (n + 1) / 2;
    for (const Orientation& a : all_orientations(n))
      for (const Triangulation& T : enumerate_triangulations(n)) {
        const LatticePoint v = hl_vertex(a, T);
        CHECK(std::accumulate(v.begin(), v.end(), 0LL) == expected);
      }
  }
}

TEST_CASE("vertex lists are injective and Catalan-sized") {
  for (int n = 1; n <= 6; ++n)
    for (const Orientation& a : all_orientations(n)) {
      const auto vertices = associahedron_vertices(a);
      CHECK(vertices.size() == static_cast<size_t>(catalan_oracle(n)));
      CHECK(std::set<LatticePoint>(vertices.begin(), vertices.end()).size() ==
            vertices.size());
    }
}

TEST_CASE("transport is the identity for the canonical orientation") {
  for (int n = 1; n <= 6; ++n)
    for (int j = 1; j <= n; ++j)
      CHECK(transport_isometry(Orientation::canonical(n), j) ==
            identity_element(n + 2));
}

TEST_CASE("transport reflects around the up label on the pentagon") {
  const DihedralElement r = transport_isometry(Orientation(3, {2}), 2);
  CHECK(r == DihedralElement{5, true, 1});
}

TEST_CASE("transport carries oriented weights to classical ones") {
  for (int n = 1; n <= 5; ++n)
    for (const Orientation& a : all_orientations(n))
      for (int j = 1; j <= n; ++j) {
        const DihedralElement r = transport_isometry(a, j);
        for (const Triangulation& T : enumerate_triangulations(n))
          CHECK(hl_weight(a, T, j) == delta_weight(act(r, T), j));
      }
}

TEST_CASE("weight queries validate their inputs") {
  const Orientation a(3, {2});
  const Triangulation T(3, {{0, 2}, {0, 3}});
  CHECK_THROWS_AS(hl_weight(a, T, 0), std::invalid_argument);
  CHECK_THROWS_AS(hl_weight(a, T, 4), std::invalid_argument);
  CHECK_THROWS_AS(hl_weight(Orientation::canonical(4), T, 1), std::invalid_argument);
  CHECK_THROWS_AS(delta_weight(T, 0), std::invalid_argument);
}
