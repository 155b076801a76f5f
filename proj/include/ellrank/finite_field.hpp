#pragma once

#include <cstdint>
#include <iterator>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "ellrank/algebra/integer.hpp"
#include "ellrank/algebra/polynomial.hpp"

namespace ellrank {

using u64 = std::uint64_t;

/// Arithmetic mod a prime p < 2^32 (products fit in 64 bits).
u64 mod_mul(u64 a, u64 b, u64 p);
u64 mod_pow(u64 a, u64 e, u64 p);
u64 mod_inv(u64 a, u64 p);
/// Legendre symbol (a/p) in {-1, 0, 1}; p an odd prime.
int legendre(u64 a, u64 p);

/// Dense polynomial over F_p; coefficients in [0, p), no trailing zeros.
class PolyFp {
 public:
  PolyFp() = default;
  PolyFp(u64 p, std::vector<u64> coefficients);
  static PolyFp constant(u64 p, u64 c);
  static PolyFp x(u64 p);
  static PolyFp reduce(const IntPoly& f, u64 p);

  u64 modulus() const { return p_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  u64 operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  u64 leading() const { return c_.empty() ? 0 : c_.back(); }
  const std::vector<u64>& coefficients() const { return c_; }

  u64 operator()(u64 x) const;

  friend PolyFp operator+(const PolyFp& a, const PolyFp& b);
  friend PolyFp operator-(const PolyFp& a, const PolyFp& b);
  friend PolyFp operator*(const PolyFp& a, const PolyFp& b);
  friend PolyFp operator*(const PolyFp& a, u64 s);
  friend bool operator==(const PolyFp& a, const PolyFp& b) { return a.p_ == b.p_ && a.c_ == b.c_; }
  friend bool operator<(const PolyFp& a, const PolyFp& b);

 private:
  void trim();
  u64 p_ = 0;
  std::vector<u64> c_;
};

std::pair<PolyFp, PolyFp> divrem(const PolyFp& a, const PolyFp& b);
PolyFp monic(const PolyFp& a);
/// Monic gcd (zero if both are zero).
PolyFp gcd(const PolyFp& a, const PolyFp& b);
PolyFp derivative(const PolyFp& a);
/// base^e mod m.
PolyFp powmod(const PolyFp& base, const Integer& e, const PolyFp& m);
/// Extended gcd: s*a + t*b = g (g monic).
void xgcd(const PolyFp& a, const PolyFp& b, PolyFp& g, PolyFp& s, PolyFp& t);
/// Multiplicity of the irreducible `place` in f (f nonzero).
int valuation(const PolyFp& f, const PolyFp& place);
/// Rabin's irreducibility test.
bool is_irreducible(const PolyFp& f);

/// Squarefree split, distinct-degree split, Cantor-Zassenhaus equal-degree
/// split. Monic irreducible factors, sorted, with multiplicities. The unit
/// leading coefficient is dropped.
std::vector<std::pair<PolyFp, int>> factor_mod_p(const PolyFp& f);

/// Degrees of the irreducible factors of a squarefree polynomial, sorted.
std::vector<int> factor_degrees_squarefree(const PolyFp& f);

/// First monic irreducible of degree k over F_p in a fixed order: for k = 1
/// the polynomial x; otherwise tuples (c_{k-1}, ..., c_1, n) ascending
/// lexicographically, polynomial x^k + c_{k-1}x^{k-1} + ... + c_1 x - n.
PolyFp find_irreducible(u64 p, int k);

/// F_{p^k} = F_p[z]/(modulus). Immutable; share through shared_ptr.
class FieldDescriptor {
 public:
  static std::shared_ptr<const FieldDescriptor> make(u64 p, int k);
  /// Verifies primality of p and irreducibility of the modulus.
  static std::shared_ptr<const FieldDescriptor> make(const PolyFp& modulus);

  u64 p() const { return p_; }
  int k() const { return k_; }
  const PolyFp& modulus() const { return modulus_; }
  Integer order() const { return ipow(Integer(static_cast<unsigned long>(p_)), static_cast<unsigned long>(k_)); }

  friend bool operator==(const FieldDescriptor& a, const FieldDescriptor& b) {
    return a.p_ == b.p_ && a.modulus_ == b.modulus_;
  }

 private:
  FieldDescriptor(u64 p, int k, PolyFp modulus) : p_(p), k_(k), modulus_(std::move(modulus)) {}
  u64 p_;
  int k_;
  PolyFp modulus_;
};

using FieldPtr = std::shared_ptr<const FieldDescriptor>;

class FieldElement {
 public:
  FieldElement(FieldPtr field, std::vector<u64> coefficients);
  static FieldElement zero(FieldPtr field) { return FieldElement(std::move(field), std::vector<u64>{}); }
  static FieldElement one(FieldPtr field) { return from_integer(std::move(field), 1); }
  static FieldElement from_integer(FieldPtr field, long long n);
  /// Element with base-p digits of `index` as coefficients (enumeration order).
  static FieldElement from_index(FieldPtr field, u64 index);

  const FieldPtr& field() const { return field_; }
  /// Coefficient vector of length k.
  std::vector<u64> coefficients() const;
  bool is_zero() const { return value_.is_zero(); }
  u64 index() const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend bool operator==(const FieldElement& a, const FieldElement& b);

  FieldElement inverse() const;
  FieldElement pow(const Integer& e) const;
  /// Multiplicative order (a != 0).
  Integer order() const;

 private:
  FieldElement(FieldPtr field, PolyFp value) : field_(std::move(field)), value_(std::move(value)) {}
  FieldPtr field_;
  PolyFp value_;
};

/// {-1, 0, +1}: a^((q-1)/2) mapped to an integer. Odd characteristic only.
int quadratic_character(const FieldElement& a);

/// Iterates all q elements in index order (base-p digits, constant first).
class FieldRange {
 public:
  static constexpr u64 kDefaultBound = 100000000;
  /// Throws ResourceBound when q exceeds `bound`.
  explicit FieldRange(FieldPtr field, u64 bound = kDefaultBound);

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = FieldElement;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = FieldElement;
    iterator(const FieldPtr* field, u64 index) : field_(field), index_(index) {}
    FieldElement operator*() const { return FieldElement::from_index(*field_, index_); }
    iterator& operator++() {
      ++index_;
      return *this;
    }
    iterator operator++(int) {
      iterator t = *this;
      ++index_;
      return t;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.index_ == b.index_; }

   private:
    const FieldPtr* field_;
    u64 index_;
  };

  iterator begin() const { return {&field_, 0}; }
  iterator end() const { return {&field_, size_}; }
  u64 size() const { return size_; }

 private:
  FieldPtr field_;
  u64 size_;
};

/// A generator of the multiplicative group (first in index order).
FieldElement primitive_element(const FieldPtr& field);

/// F_q with Zech-logarithm tables: elements are exponents of a fixed
/// generator, kZero for 0. Multiplication and addition are table lookups.
class LogTableField {
 public:
  using Elem = std::int32_t;
  static constexpr Elem kZero = -1;
  static constexpr u64 kMaxOrder = u64{1} << 26;

  /// Throws ResourceBound if q > kMaxOrder.
  explicit LogTableField(FieldPtr field);

  const FieldPtr& descriptor() const { return field_; }
  u64 p() const { return field_->p(); }
  u64 q() const { return q_; }

  Elem from_integer(long long n) const;
  Elem from_index(u64 index) const { return log_[index]; }
  u64 to_index(Elem a) const { return a == kZero ? 0 : exp_[static_cast<std::size_t>(a)]; }
  Elem from_element(const FieldElement& a) const { return log_[a.index()]; }
  /// The i-th element in index order, i < q.
  Elem element(u64 i) const { return log_[i]; }

  Elem mul(Elem a, Elem b) const {
    if (a == kZero || b == kZero) return kZero;
    std::int64_t s = std::int64_t{a} + b;
    if (s >= order_) s -= order_;
    return static_cast<Elem>(s);
  }
  Elem add(Elem a, Elem b) const {
    if (a == kZero) return b;
    if (b == kZero) return a;
    std::int64_t d = std::int64_t{b} - a;
    if (d < 0) d += order_;
    const Elem z = zech_[static_cast<std::size_t>(d)];
    if (z == kZero) return kZero;
    std::int64_t s = std::int64_t{a} + z;
    if (s >= order_) s -= order_;
    return static_cast<Elem>(s);
  }
  Elem neg(Elem a) const {
    if (a == kZero) return kZero;
    std::int64_t s = std::int64_t{a} + half_;
    if (s >= order_) s -= order_;
    return static_cast<Elem>(s);
  }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem pow(Elem a, unsigned e) const {
    if (a == kZero) return e == 0 ? 0 : kZero;
    return static_cast<Elem>((std::int64_t{a} * e) % order_);
  }
  Elem inv(Elem a) const;
  /// Quadratic character: the generator is a non-square.
  int chi(Elem a) const { return a == kZero ? 0 : ((a & 1) == 0 ? 1 : -1); }

  /// Evaluates an F_p polynomial at a.
  Elem eval(const PolyFp& f, Elem a) const;
  /// Number of roots in F_q of an F_p polynomial.
  u64 count_roots(const PolyFp& f) const;

 private:
  FieldPtr field_;
  u64 q_;
  std::int64_t order_;
  std::int64_t half_;
  std::vector<Elem> log_;
  std::vector<u64> exp_;
  std::vector<Elem> zech_;
  std::vector<Elem> small_;  // log of 0..p-1
};

std::string to_string(const PolyFp& f, const std::string& var = "t");

}  // namespace ellrank
