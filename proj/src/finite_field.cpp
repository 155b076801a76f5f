#include "ellrank/finite_field.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "ellrank/errors.hpp"

namespace ellrank {

u64 mod_mul(u64 a, u64 b, u64 p) { return a * b % p; }

u64 mod_pow(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e != 0) {
    if ((e & 1U) != 0) r = r * a % p;
    a = a * a % p;
    e >>= 1U;
  }
  return r;
}

u64 mod_inv(u64 a, u64 p) {
  a %= p;
  if (a == 0) throw std::domain_error("inverse of zero mod p");
  return mod_pow(a, p - 2, p);
}

int legendre(u64 a, u64 p) {
  a %= p;
  if (a == 0) return 0;
  return mod_pow(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

// ---------------------------------------------------------------- PolyFp

PolyFp::PolyFp(u64 p, std::vector<u64> coefficients) : p_(p), c_(std::move(coefficients)) {
  if (p < 2 || p >= (u64{1} << 32)) throw std::invalid_argument("PolyFp: modulus out of range");
  for (auto& v : c_) v %= p_;
  trim();
}

PolyFp PolyFp::constant(u64 p, u64 c) { return PolyFp(p, {c}); }
PolyFp PolyFp::x(u64 p) { return PolyFp(p, {0, 1}); }

PolyFp PolyFp::reduce(const IntPoly& f, u64 p) {
  std::vector<u64> c;
  c.reserve(f.size());
  for (const auto& v : f.coefficients()) {
    Integer r = v % Integer(static_cast<unsigned long>(p));
    if (r < 0) r += static_cast<unsigned long>(p);
    c.push_back(r.get_ui());
  }
  return PolyFp(p, std::move(c));
}

void PolyFp::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

u64 PolyFp::operator()(u64 x) const {
  u64 acc = 0;
  x %= p_;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = (acc * x + *it) % p_;
  return acc;
}

PolyFp operator+(const PolyFp& a, const PolyFp& b) {
  const u64 p = a.p_ != 0 ? a.p_ : b.p_;
  std::vector<u64> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a[i] + b[i]) % p;
  return PolyFp(p, std::move(c));
}

PolyFp operator-(const PolyFp& a, const PolyFp& b) {
  const u64 p = a.p_ != 0 ? a.p_ : b.p_;
  std::vector<u64> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a[i] + p - b[i]) % p;
  return PolyFp(p, std::move(c));
}

PolyFp operator*(const PolyFp& a, const PolyFp& b) {
  const u64 p = a.p_ != 0 ? a.p_ : b.p_;
  if (a.is_zero() || b.is_zero()) return PolyFp(p, {});
  std::vector<u64> c(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = (c[i + j] + a.c_[i] * b.c_[j]) % p;
  }
  return PolyFp(p, std::move(c));
}

PolyFp operator*(const PolyFp& a, u64 s) {
  std::vector<u64> c = a.c_;
  for (auto& v : c) v = v * (s % a.p_) % a.p_;
  return PolyFp(a.p_, std::move(c));
}

bool operator<(const PolyFp& a, const PolyFp& b) {
  if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
  for (std::size_t i = a.c_.size(); i-- > 0;) {
    if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
  }
  return false;
}

std::pair<PolyFp, PolyFp> divrem(const PolyFp& a, const PolyFp& b) {
  if (b.is_zero()) throw std::domain_error("PolyFp division by zero");
  const u64 p = b.modulus();
  const int db = b.degree();
  if (a.degree() < db) return {PolyFp(p, {}), a};
  std::vector<u64> rem = a.coefficients();
  std::vector<u64> quo(static_cast<std::size_t>(a.degree() - db + 1), 0);
  const u64 inv = mod_inv(b.leading(), p);
  for (int i = a.degree(); i >= db; --i) {
    const u64 f = rem[static_cast<std::size_t>(i)] * inv % p;
    quo[static_cast<std::size_t>(i - db)] = f;
    if (f == 0) continue;
    for (int j = 0; j <= db; ++j) {
      auto& r = rem[static_cast<std::size_t>(i - db + j)];
      r = (r + p - f * b[static_cast<std::size_t>(j)] % p) % p;
    }
  }
  rem.resize(static_cast<std::size_t>(db));
  return {PolyFp(p, std::move(quo)), PolyFp(p, std::move(rem))};
}

PolyFp monic(const PolyFp& a) {
  if (a.is_zero()) return a;
  return a * mod_inv(a.leading(), a.modulus());
}

PolyFp gcd(const PolyFp& a, const PolyFp& b) {
  PolyFp x = a, y = b;
  while (!y.is_zero()) {
    PolyFp r = divrem(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

void xgcd(const PolyFp& a, const PolyFp& b, PolyFp& g, PolyFp& s, PolyFp& t) {
  const u64 p = a.modulus() != 0 ? a.modulus() : b.modulus();
  PolyFp r0 = a, r1 = b;
  PolyFp s0 = PolyFp::constant(p, 1), s1(p, {});
  PolyFp t0(p, {}), t1 = PolyFp::constant(p, 1);
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    PolyFp s2 = s0 - q * s1;
    PolyFp t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const u64 inv = r0.is_zero() ? 1 : mod_inv(r0.leading(), p);
  g = r0 * inv;
  s = s0 * inv;
  t = t0 * inv;
}

PolyFp derivative(const PolyFp& a) {
  if (a.degree() < 1) return PolyFp(a.modulus(), {});
  std::vector<u64> c(static_cast<std::size_t>(a.degree()));
  for (std::size_t i = 1; i <= c.size(); ++i) c[i - 1] = a[i] * (i % a.modulus()) % a.modulus();
  return PolyFp(a.modulus(), std::move(c));
}

PolyFp powmod(const PolyFp& base, const Integer& e, const PolyFp& m) {
  if (e < 0) throw std::domain_error("powmod: negative exponent");
  PolyFp r = divrem(PolyFp::constant(m.modulus(), 1), m).second;
  PolyFp b = divrem(base, m).second;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = divrem(r * r, m).second;
    if (mpz_tstbit(e.get_mpz_t(), i) != 0) r = divrem(r * b, m).second;
  }
  return r;
}

int valuation(const PolyFp& f, const PolyFp& place) {
  if (f.is_zero()) throw std::domain_error("valuation of the zero polynomial");
  int v = 0;
  PolyFp cur = f;
  for (;;) {
    auto [q, r] = divrem(cur, place);
    if (!r.is_zero()) return v;
    cur = std::move(q);
    ++v;
  }
}

namespace {

std::vector<u64> prime_divisors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

Integer pz(u64 p) { return Integer(static_cast<unsigned long>(p)); }

// x^(p^e) mod f.
PolyFp frobenius_power(const PolyFp& f, int e) {
  const Integer q = ipow(pz(f.modulus()), static_cast<unsigned long>(e));
  return powmod(PolyFp::x(f.modulus()), q, f);
}

PolyFp pth_root(const PolyFp& f) {
  const u64 p = f.modulus();
  std::vector<u64> c(static_cast<std::size_t>(f.degree()) / p + 1, 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f[i * p];
  return PolyFp(p, std::move(c));
}

void squarefree_mod_p(const PolyFp& f, int mult, std::vector<std::pair<PolyFp, int>>& out) {
  const u64 p = f.modulus();
  if (f.degree() < 1) return;
  PolyFp d = derivative(f);
  if (d.is_zero()) {
    squarefree_mod_p(pth_root(f), mult * static_cast<int>(p), out);
    return;
  }
  PolyFp g = gcd(f, d);
  PolyFp w = divrem(f, g).first;
  int i = 1;
  while (w.degree() > 0) {
    PolyFp y = gcd(w, g);
    PolyFp z = divrem(w, y).first;
    if (z.degree() > 0) out.emplace_back(monic(z), i * mult);
    ++i;
    w = std::move(y);
    g = divrem(g, w).first;
  }
  if (g.degree() > 0) squarefree_mod_p(pth_root(g), mult * static_cast<int>(p), out);
}

// Distinct-degree factorization of a monic squarefree polynomial.
std::vector<std::pair<PolyFp, int>> distinct_degree(const PolyFp& f) {
  std::vector<std::pair<PolyFp, int>> out;
  const u64 p = f.modulus();
  PolyFp rest = f;
  PolyFp h = PolyFp::x(p);
  const Integer pp = pz(p);
  for (int d = 1; 2 * d <= rest.degree(); ++d) {
    h = powmod(h, pp, rest);
    PolyFp g = gcd(rest, h - PolyFp::x(p));
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      rest = divrem(rest, g).first;
      h = divrem(h, rest).second;
    }
  }
  if (rest.degree() > 0) out.emplace_back(monic(rest), rest.degree());
  return out;
}

void equal_degree(const PolyFp& f, int d, std::mt19937_64& rng, std::vector<PolyFp>& out) {
  if (f.degree() == d) {
    out.push_back(monic(f));
    return;
  }
  const u64 p = f.modulus();
  const Integer e = (ipow(pz(p), static_cast<unsigned long>(d)) - 1) / 2;
  for (;;) {
    std::vector<u64> c(static_cast<std::size_t>(f.degree()));
    for (auto& v : c) v = rng() % p;
    PolyFp a(p, std::move(c));
    if (a.degree() < 1) continue;
    PolyFp g = gcd(f, a);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(divrem(f, g).first, d, rng, out);
      return;
    }
    PolyFp b = powmod(a, e, f) - PolyFp::constant(p, 1);
    g = gcd(f, b);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(divrem(f, g).first, d, rng, out);
      return;
    }
  }
}

}  // namespace

bool is_irreducible(const PolyFp& f) {
  const int n = f.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  const PolyFp fm = monic(f);
  const PolyFp x = PolyFp::x(f.modulus());
  if (!(frobenius_power(fm, n) == divrem(x, fm).second)) return false;
  for (u64 r : prime_divisors(static_cast<u64>(n))) {
    PolyFp h = frobenius_power(fm, n / static_cast<int>(r));
    if (gcd(fm, h - x).degree() > 0) return false;
  }
  return true;
}

std::vector<std::pair<PolyFp, int>> factor_mod_p(const PolyFp& f) {
  if (f.is_zero()) throw std::domain_error("factor_mod_p of zero");
  const u64 p = f.modulus();
  if (p == 2) throw std::invalid_argument("factor_mod_p: characteristic 2 is not supported");
  std::vector<std::pair<PolyFp, int>> sqf;
  squarefree_mod_p(monic(f), 1, sqf);
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ p);
  std::vector<std::pair<PolyFp, int>> out;
  for (const auto& [part, mult] : sqf) {
    for (const auto& [block, d] : distinct_degree(part)) {
      std::vector<PolyFp> pieces;
      equal_degree(block, d, rng, pieces);
      for (auto& piece : pieces) out.emplace_back(std::move(piece), mult);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first == b.first) return a.second < b.second;
    return a.first < b.first;
  });
  return out;
}

std::vector<int> factor_degrees_squarefree(const PolyFp& f) {
  std::vector<int> out;
  for (const auto& [block, d] : distinct_degree(monic(f))) {
    for (int i = 0; i < block.degree() / d; ++i) out.push_back(d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

PolyFp find_irreducible(u64 p, int k) {
  if (k < 1) throw std::invalid_argument("find_irreducible: degree must be positive");
  if (k == 1) return PolyFp::x(p);
  // Odometer over (c_{k-1}, ..., c_1, n); the last entry runs fastest.
  std::vector<u64> digits(static_cast<std::size_t>(k), 0);
  for (;;) {
    std::vector<u64> c(static_cast<std::size_t>(k) + 1, 0);
    c[static_cast<std::size_t>(k)] = 1;
    for (int i = 1; i < k; ++i) c[static_cast<std::size_t>(i)] = digits[static_cast<std::size_t>(k - 1 - i)];
    c[0] = (p - digits[static_cast<std::size_t>(k - 1)] % p) % p;
    PolyFp f(p, std::move(c));
    if (is_irreducible(f)) return f;
    int pos = k - 1;
    while (pos >= 0 && ++digits[static_cast<std::size_t>(pos)] == p) {
      digits[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) throw std::logic_error("find_irreducible: exhausted search space");
  }
}

// ------------------------------------------------------- FieldDescriptor

std::shared_ptr<const FieldDescriptor> FieldDescriptor::make(u64 p, int k) {
  if (p < 5) throw std::invalid_argument("field characteristic must be at least 5");
  if (!is_probable_prime(Integer(static_cast<unsigned long>(p)))) {
    throw std::invalid_argument("field characteristic must be prime");
  }
  return std::shared_ptr<const FieldDescriptor>(new FieldDescriptor(p, k, find_irreducible(p, k)));
}

std::shared_ptr<const FieldDescriptor> FieldDescriptor::make(const PolyFp& modulus) {
  const u64 p = modulus.modulus();
  if (!is_probable_prime(Integer(static_cast<unsigned long>(p)))) {
    throw std::invalid_argument("field characteristic must be prime");
  }
  if (modulus.leading() != 1 || !is_irreducible(modulus)) {
    throw std::invalid_argument("field modulus must be monic irreducible");
  }
  return std::shared_ptr<const FieldDescriptor>(new FieldDescriptor(p, modulus.degree(), modulus));
}

// ---------------------------------------------------------- FieldElement

namespace {

void require_same(const FieldElement& a, const FieldElement& b) {
  if (a.field() != b.field() && !(*a.field() == *b.field())) {
    throw std::logic_error("arithmetic between elements of different fields");
  }
}

}  // namespace

FieldElement::FieldElement(FieldPtr field, std::vector<u64> coefficients)
    : field_(std::move(field)), value_(divrem(PolyFp(field_->p(), std::move(coefficients)), field_->modulus()).second) {}

FieldElement FieldElement::from_integer(FieldPtr field, long long n) {
  const auto p = static_cast<long long>(field->p());
  long long r = n % p;
  if (r < 0) r += p;
  return FieldElement(std::move(field), std::vector<u64>{static_cast<u64>(r)});
}

FieldElement FieldElement::from_index(FieldPtr field, u64 index) {
  std::vector<u64> c(static_cast<std::size_t>(field->k()), 0);
  for (auto& v : c) {
    v = index % field->p();
    index /= field->p();
  }
  return FieldElement(std::move(field), std::move(c));
}

std::vector<u64> FieldElement::coefficients() const {
  std::vector<u64> c(static_cast<std::size_t>(field_->k()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = value_[i];
  return c;
}

u64 FieldElement::index() const {
  u64 idx = 0;
  for (int i = field_->k() - 1; i >= 0; --i) idx = idx * field_->p() + value_[static_cast<std::size_t>(i)];
  return idx;
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return FieldElement(a.field_, a.value_ + b.value_);
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return FieldElement(a.field_, a.value_ - b.value_);
}

FieldElement operator-(const FieldElement& a) { return FieldElement::zero(a.field_) - a; }

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return FieldElement(a.field_, divrem(a.value_ * b.value_, a.field_->modulus()).second);
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return a.value_ == b.value_;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero field element");
  PolyFp g, s, t;
  xgcd(value_, field_->modulus(), g, s, t);
  return FieldElement(field_, divrem(s, field_->modulus()).second);
}

FieldElement FieldElement::pow(const Integer& e) const {
  if (e < 0) return inverse().pow(-e);
  return FieldElement(field_, powmod(value_, e, field_->modulus()));
}

Integer FieldElement::order() const {
  if (is_zero()) throw std::domain_error("order of zero");
  Integer n = field_->order() - 1;
  for (const auto& [r, e] : factor_integer(n)) {
    for (unsigned i = 0; i < e; ++i) {
      Integer m = n / r;
      if (pow(m) == one(field_)) {
        n = m;
      } else {
        break;
      }
    }
  }
  return n;
}

int quadratic_character(const FieldElement& a) {
  if (a.field()->p() == 2) throw std::invalid_argument("quadratic character needs odd characteristic");
  if (a.is_zero()) return 0;
  const FieldElement r = a.pow((a.field()->order() - 1) / 2);
  return r == FieldElement::one(a.field()) ? 1 : -1;
}

FieldRange::FieldRange(FieldPtr field, u64 bound) : field_(std::move(field)) {
  const Integer q = field_->order();
  if (q > Integer(static_cast<unsigned long>(bound))) {
    throw ResourceBound("field of order " + q.get_str() + " exceeds enumeration bound " + std::to_string(bound));
  }
  size_ = q.get_ui();
}

FieldElement primitive_element(const FieldPtr& field) {
  const Integer n = field->order() - 1;
  const auto primes = factor_integer(n);
  const FieldElement one = FieldElement::one(field);
  for (const auto& g : FieldRange(field)) {
    if (g.is_zero()) continue;
    bool ok = true;
    for (const auto& pp : primes) {
      if (g.pow(n / pp.prime) == one) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw std::logic_error("no primitive element found");
}

// --------------------------------------------------------- LogTableField

LogTableField::LogTableField(FieldPtr field) : field_(std::move(field)) {
  const Integer q = field_->order();
  if (q > Integer(static_cast<unsigned long>(kMaxOrder))) {
    throw ResourceBound("field of order " + q.get_str() + " is too large for log tables");
  }
  q_ = q.get_ui();
  order_ = static_cast<std::int64_t>(q_ - 1);
  half_ = order_ / 2;
  const u64 p = field_->p();
  const int k = field_->k();
  const FieldElement g = primitive_element(field_);
  const PolyFp& m = field_->modulus();
  // Multiply by g directly on coefficient vectors.
  std::vector<u64> gc = g.coefficients();
  exp_.assign(static_cast<std::size_t>(order_), 0);
  log_.assign(q_, kZero);
  std::vector<u64> cur(static_cast<std::size_t>(k), 0);
  cur[0] = 1;
  auto encode = [&](const std::vector<u64>& c) {
    u64 idx = 0;
    for (int i = k - 1; i >= 0; --i) idx = idx * p + c[static_cast<std::size_t>(i)];
    return idx;
  };
  const PolyFp gp(p, gc);
  for (std::int64_t e = 0; e < order_; ++e) {
    const u64 idx = encode(cur);
    exp_[static_cast<std::size_t>(e)] = idx;
    log_[idx] = static_cast<Elem>(e);
    PolyFp next = divrem(PolyFp(p, cur) * gp, m).second;
    for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = next[static_cast<std::size_t>(i)];
  }
  zech_.assign(static_cast<std::size_t>(order_), kZero);
  for (std::int64_t e = 0; e < order_; ++e) {
    const u64 idx = exp_[static_cast<std::size_t>(e)];
    const u64 low = idx % p;
    const u64 plus_one = idx - low + (low + 1) % p;
    zech_[static_cast<std::size_t>(e)] = log_[plus_one];
  }
  small_.resize(p);
  for (u64 i = 0; i < p; ++i) small_[i] = log_[i];
}

LogTableField::Elem LogTableField::from_integer(long long n) const {
  const auto p = static_cast<long long>(field_->p());
  long long r = n % p;
  if (r < 0) r += p;
  return small_[static_cast<std::size_t>(r)];
}

LogTableField::Elem LogTableField::inv(Elem a) const {
  if (a == kZero) throw std::domain_error("inverse of zero");
  return static_cast<Elem>(a == 0 ? 0 : order_ - a);
}

LogTableField::Elem LogTableField::eval(const PolyFp& f, Elem a) const {
  Elem acc = kZero;
  for (int i = f.degree(); i >= 0; --i) acc = add(mul(acc, a), small_[f[static_cast<std::size_t>(i)]]);
  return acc;
}

u64 LogTableField::count_roots(const PolyFp& f) const {
  u64 n = 0;
  for (u64 i = 0; i < q_; ++i) {
    if (eval(f, log_[i]) == kZero) ++n;
  }
  return n;
}

std::string to_string(const PolyFp& f, const std::string& var) {
  std::vector<Integer> c;
  for (auto v : f.coefficients()) c.emplace_back(static_cast<unsigned long>(v));
  return to_string(IntPoly(std::move(c)), var);
}

}  // namespace ellrank
