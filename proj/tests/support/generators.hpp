#pragma once

// Seeded random inputs for the property suites.

#include <random>
#include <vector>

#include "ellrank/algebra/polynomial.hpp"

namespace gen {

using ellrank::Integer;
using ellrank::IntPoly;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  long range(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(eng_); }
  long nonzero(long lo, long hi) {
    for (;;) {
      const long v = range(lo, hi);
      if (v != 0) return v;
    }
  }
  bool coin() { return range(0, 1) == 1; }

  /// Degree exactly `deg`, coefficients in [-bound, bound].
  IntPoly poly(int deg, long bound) {
    std::vector<Integer> c(static_cast<std::size_t>(deg) + 1);
    for (auto& v : c) v = range(-bound, bound);
    c.back() = nonzero(-bound, bound);
    return IntPoly(std::move(c));
  }

  Integer big(int digits) {
    Integer n = range(1, 9);
    for (int i = 1; i < digits; ++i) n = n * 10 + range(0, 9);
    return n;
  }

  std::vector<std::uint64_t> coeffs(std::size_t n, std::uint64_t p) {
    std::vector<std::uint64_t> c(n);
    for (auto& v : c) v = static_cast<std::uint64_t>(range(0, static_cast<long>(p) - 1));
    return c;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace gen
