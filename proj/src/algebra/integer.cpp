#include "ellrank/algebra/integer.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

#include "ellrank/errors.hpp"

namespace ellrank {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Integer& n) { return n.get_str(); }

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return make_rational(Integer(text));
    return make_rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw BadParameters("not a rational number: '" + text + "'");
  }
}

Integer ipow(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

bool exact_sqrt(const Integer& n, Integer& root) {
  if (n < 0) return false;
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return false;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  return true;
}

bool exact_sqrt(const Rational& x, Rational& root) {
  Integer n, d;
  if (!exact_sqrt(Integer(x.get_num()), n) || !exact_sqrt(Integer(x.get_den()), d)) return false;
  root = make_rational(n, d);
  return true;
}

std::vector<std::uint32_t> small_primes(std::uint32_t limit) {
  std::vector<bool> composite(limit, false);
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 2; i < limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = std::uint64_t(i) * i; j < limit; j += i) composite[j] = true;
  }
  return out;
}

namespace {

constexpr std::uint32_t kTrialLimit = 1000000;

const std::vector<std::uint32_t>& trial_primes() {
  static const std::vector<std::uint32_t> primes = small_primes(kTrialLimit);
  return primes;
}

bool miller_rabin_round(const Integer& n, const Integer& d, unsigned s, const Integer& base) {
  Integer x;
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  const Integer n1 = n - 1;
  if (x == 1 || x == n1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = x * x % n;
    if (x == n1) return true;
    if (x == 1) return false;
  }
  return false;
}

using Clock = std::chrono::steady_clock;

// One attempt of Brent's cycle; returns a nontrivial divisor or 0/n on failure.
Integer brent_attempt(const Integer& n, const Integer& y0, const Integer& c, Clock::time_point deadline) {
  Integer y = y0, x, ys, q = 1, g = 1;
  const unsigned long m = 128;
  unsigned long r = 1;
  auto step = [&](Integer& v) { v = (v * v + c) % n; };
  while (g == 1) {
    x = y;
    for (unsigned long i = 0; i < r; ++i) step(y);
    unsigned long k = 0;
    while (k < r && g == 1) {
      ys = y;
      const unsigned long lim = std::min(m, r - k);
      for (unsigned long i = 0; i < lim; ++i) {
        step(y);
        Integer diff = x - y;
        q = q * abs(diff) % n;
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += m;
    }
    r *= 2;
    if (Clock::now() > deadline) throw FactorTimeout("integer factorization timed out on " + n.get_str());
  }
  if (g == n) {
    do {
      step(ys);
      Integer diff = x - ys;
      Integer a = abs(diff);
      mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  return g;
}

void split_composite(const Integer& n, std::map<Integer, unsigned>& out, Clock::time_point deadline) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    ++out[n];
    return;
  }
  Integer root;
  if (exact_sqrt(n, root)) {
    split_composite(root, out, deadline);
    split_composite(root, out, deadline);
    return;
  }
  std::mt19937_64 rng(0x5eed'f00dULL ^ mpz_get_ui(n.get_mpz_t()));
  for (;;) {
    Integer y0 = Integer(static_cast<unsigned long>(rng() % 1000003)) % n;
    Integer c = Integer(static_cast<unsigned long>(rng() % 1000003 + 1)) % n;
    Integer g = brent_attempt(n, y0, c, deadline);
    if (g != n && g != 1) {
      split_composite(g, out, deadline);
      split_composite(Integer(n / g), out, deadline);
      return;
    }
    if (Clock::now() > deadline) throw FactorTimeout("integer factorization timed out on " + n.get_str());
  }
}

}  // namespace

bool is_probable_prime(const Integer& n) {
  if (n < 2) return false;
  static const unsigned kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  for (unsigned b : kBases) {
    if (n == b) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), b) != 0) return false;
  }
  Integer d = n - 1;
  unsigned s = 0;
  while (mpz_even_p(d.get_mpz_t()) != 0) {
    d /= 2;
    ++s;
  }
  for (unsigned b : kBases) {
    if (!miller_rabin_round(n, d, s, Integer(b))) return false;
  }
  static const Integer kDeterministicBound("3317044064679887385961981");
  if (n < kDeterministicBound) return true;
  std::mt19937_64 rng(0xC0FFEEULL);
  const Integer span = n - 3;
  for (int round = 0; round < 27; ++round) {
    Integer base;
    mpz_set_ui(base.get_mpz_t(), rng());
    base = base % span + 2;
    if (!miller_rabin_round(n, d, s, base)) return false;
  }
  return true;
}

std::vector<PrimePower> factor_integer(const Integer& n, const FactorOptions& options) {
  if (n == 0) throw std::domain_error("factor_integer: zero has no factorization");
  const auto deadline = Clock::now() + options.timeout;
  Integer m = abs(n);
  std::map<Integer, unsigned> found;
  for (std::uint32_t p : trial_primes()) {
    if (Integer(p) * p > m) break;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p) != 0) {
      m /= p;
      ++found[Integer(p)];
    }
  }
  if (m > 1) {
    if (m < Integer(kTrialLimit) * kTrialLimit) {
      ++found[m];
    } else {
      split_composite(m, found, deadline);
    }
  }
  std::vector<PrimePower> out;
  out.reserve(found.size());
  for (const auto& [prime, e] : found) out.push_back({prime, e});
  return out;
}

}  // namespace ellrank
