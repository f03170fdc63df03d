#include <numeric>
#include <set>
#include <stdexcept>

#include "assoc/centroid.hpp"
#include "assoc/rational.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace assoc;

TEST_CASE("rationals stay reduced with positive denominators") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(-3, -6).str() == "1/2");
  CHECK(Rational(0, 7).str() == "0/1");
  CHECK(Rational(3).str() == "3/1");
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("barycenter averages coordinatewise without rounding") {
  CHECK(barycenter({{1, 2}, {2, 1}}) == RationalPoint{Rational(3, 2), Rational(3, 2)});
  CHECK(barycenter({{4, -1, 6}}) == RationalPoint{Rational(4), Rational(-1), Rational(6)});
  CHECK(barycenter({{1, 2, 3}, {1, 4, 1}, {2, 1, 3}, {3, 1, 2}, {3, 2, 1}}) ==
        constant_point(Rational(2), 3));
  CHECK_THROWS_AS(barycenter({}), std::invalid_argument);
  CHECK_THROWS_AS(barycenter({{1, 2}, {1}}), std::invalid_argument);
}

TEST_CASE("permutation points enumerate lexicographically") {
  CHECK(permutahedron_vertices(2) ==
        std::vector<LatticePoint>{{1, 2}, {2, 1}});
  for (int n = 1; n <= 6; ++n) {
    const auto points = permutahedron_vertices(n);
    CHECK(points.size() == static_cast<size_t>(factorial_oracle(n)));
    CHECK(std::set<LatticePoint>(points.begin(), points.end()).size() ==
          points.size());
    const long long sum = static_cast<long long>(n) * (n + 1) / 2;
    for (const LatticePoint& p : points)
      CHECK(std::accumulate(p.begin(), p.end(), 0LL) == sum);
  }
  CHECK(barycenter(permutahedron_vertices(3)) == constant_point(Rational(2), 3));
  CHECK_THROWS_AS(permutahedron_vertices(0), std::invalid_argument);
}
