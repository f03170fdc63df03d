#pragma once

#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace assoc {

using Coord = long long;
using LatticePoint = std::vector<Coord>;

// Exact fraction over 64-bit integers, always reduced, denominator > 0.
// Every quantity in this project is bounded by small polynomial expressions
// in n (sums over at most a few million lattice points with entries < 2n+2),
// so int64 never overflows.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n) : num(n), den(1) {}
  Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  friend Rational operator+(const Rational& x, const Rational& y) {
    return Rational(x.num * y.den + y.num * x.den, x.den * y.den);
  }
  friend Rational operator-(const Rational& x, const Rational& y) {
    return Rational(x.num * y.den - y.num * x.den, x.den * y.den);
  }
  friend Rational operator*(const Rational& x, const Rational& y) {
    return Rational(x.num * y.num, x.den * y.den);
  }
  friend bool operator==(const Rational&, const Rational&) = default;

  // Always "p/q", q included even when 1 (e.g. "3/1"), so output never
  // looks like a float and parses uniformly.
  std::string str() const {
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

using RationalPoint = std::vector<Rational>;

inline RationalPoint constant_point(const Rational& value, int dim) {
  return RationalPoint(static_cast<size_t>(dim), value);
}

}  // namespace assoc
