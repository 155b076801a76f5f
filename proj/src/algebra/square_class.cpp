#include "ellrank/algebra/square_class.hpp"

#include <algorithm>
#include <stdexcept>

namespace ellrank {

namespace {

void add_odd(const Integer& n, const FactorOptions& options, std::vector<Integer>& out) {
  if (n == 1) return;
  for (const auto& pp : factor_integer(n, options)) {
    if (pp.exponent % 2 == 1) out.push_back(pp.prime);
  }
}

}  // namespace

Integer SquareClass::representative() const {
  Integer r = sign;
  for (const auto& p : odd_primes) r *= p;
  return r;
}

SquareClass square_class(const Rational& x, const FactorOptions& options) {
  if (x == 0) throw std::domain_error("square class of zero");
  SquareClass c;
  c.sign = x < 0 ? -1 : 1;
  add_odd(abs(Integer(x.get_num())), options, c.odd_primes);
  add_odd(Integer(x.get_den()), options, c.odd_primes);
  std::sort(c.odd_primes.begin(), c.odd_primes.end());
  return c;
}

SquareClass operator*(const SquareClass& a, const SquareClass& b) {
  SquareClass c;
  c.sign = a.sign * b.sign;
  std::set_symmetric_difference(a.odd_primes.begin(), a.odd_primes.end(), b.odd_primes.begin(), b.odd_primes.end(),
                                std::back_inserter(c.odd_primes));
  return c;
}

std::string to_string(const SquareClass& c) {
  std::string s = c.sign < 0 ? "-" : "+";
  if (c.odd_primes.empty()) return s + "1";
  for (std::size_t i = 0; i < c.odd_primes.size(); ++i) {
    if (i > 0) s += "*";
    s += c.odd_primes[i].get_str();
  }
  return s;
}

}  // namespace ellrank
