#pragma once

// Independent reference computations for the test suites. Nothing here calls
// into the point-counting or fiber-correction code it is compared against.

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "ellrank/algebra/integer.hpp"
#include "ellrank/algebra/polynomial.hpp"

namespace oracle {

using u64 = std::uint64_t;
using ellrank::Integer;
using ellrank::IntPoly;

/// Polynomial over F_p in three variables (x, y, t).
struct MPoly {
  u64 p = 0;
  std::map<std::array<int, 3>, u64> terms;  // nonzero coefficients only

  void add(const std::array<int, 3>& e, u64 c);
  int order() const;  // lowest total degree; large for zero
  u64 eval(const std::array<u64, 3>& pt) const;
};

/// y^2 - x^3 - a(t) x - b(t), with a, b given by coefficient lists over F_p.
MPoly weierstrass_surface(const std::vector<u64>& a, const std::vector<u64>& b, u64 p);

/// Number of F_p-points in the exceptional locus of the minimal resolution
/// of the surface singularity at the origin, by repeated point blow-ups.
/// The surface must pass through the origin and be singular there.
long long points_above_singularity(const MPoly& f, int depth = 0);

/// Sum over the singular F_p-points of the fiber t = 0 of
/// (points above the singularity - 1): the change in the fiber point count
/// when passing to the resolution.
long long fiber_resolution_correction(const std::vector<u64>& a, const std::vector<u64>& b, u64 p);

/// Points of y^2 = x^3 + A x + B over P^1(F_{p^k}), k in {1, 2}, including one
/// point at infinity per fiber; the fiber at t = infinity is read from
/// s^{4w} A(1/s), s^{6w} B(1/s) with w the weight.
Integer brute_force_weierstrass_count(const IntPoly& A, const IntPoly& B, u64 p, int k);

/// Theorem-style closed formula for E_{a,b,c} written out term by term.
struct ClosedForm {
  IntPoly A, B;
};
ClosedForm closed_form_family(long a, long b, long c);

/// E'_c: y^2 = x^3 + t^3 (t - c) x + t^5 pulled back along t = N/D with
/// N = 4ab s^4 and D = (a-b)s^8 - 2(a+b)s^4 + (a-b), denominators cleared by u = D.
ClosedForm substituted_family(long a, long b, long c);

/// True when (A2, B2) = (w^2 A1, w^3 B1) for a rational function w, checked
/// by cross-multiplication only.
bool scaling_related(const ClosedForm& m1, const ClosedForm& m2);

}  // namespace oracle
