#pragma once

#include <string>
#include <vector>

#include "ellrank/algebra/integer.hpp"

namespace ellrank {

/// A nonzero rational modulo squares: sign times the product of odd_primes.
struct SquareClass {
  int sign = 1;
  std::vector<Integer> odd_primes;  // sorted, distinct

  Integer representative() const;
  friend bool operator==(const SquareClass&, const SquareClass&) = default;
};

/// Throws std::domain_error for zero; FactorTimeout propagates.
SquareClass square_class(const Rational& x, const FactorOptions& options = {});

SquareClass operator*(const SquareClass& a, const SquareClass& b);

/// "-2*19", "+1" for the trivial class.
std::string to_string(const SquareClass& c);

}  // namespace ellrank
