#pragma once

#include <gmpxx.h>

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

namespace ellrank {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds num/den in lowest terms with a positive denominator.
Rational make_rational(const Integer& num, const Integer& den = 1);

std::string to_string(const Integer& n);
std::string to_string(const Rational& r);

/// Parses a decimal integer or a fraction "n/d".
Rational parse_rational(const std::string& text);

Integer ipow(const Integer& base, unsigned long exponent);

/// Returns r with r*r == n, if n is a perfect square.
bool exact_sqrt(const Integer& n, Integer& root);
bool exact_sqrt(const Rational& x, Rational& root);

struct PrimePower {
  Integer prime;
  unsigned exponent = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct FactorOptions {
  std::chrono::milliseconds timeout{30000};
};

/// Miller-Rabin. Deterministic below 3.3e24 (first thirteen prime bases),
/// otherwise 40 rounds with bases from a fixed-seed generator.
bool is_probable_prime(const Integer& n);

/// Complete factorization of |n| by trial division to 1e6 and Pollard rho
/// (Brent). Sorted by prime. Throws FactorTimeout when the budget runs out.
std::vector<PrimePower> factor_integer(const Integer& n, const FactorOptions& options = {});

/// Primes below `limit` (sieve of Eratosthenes).
std::vector<std::uint32_t> small_primes(std::uint32_t limit);

}  // namespace ellrank
