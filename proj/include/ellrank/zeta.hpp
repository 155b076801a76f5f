#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ellrank/finite_field.hpp"
#include "ellrank/kodaira.hpp"

namespace ellrank {

/// A singular fiber of the reduction: a monic irreducible place over F_p or infinity.
struct FiberModP {
  bool infinity = false;
  PolyFp place;
  KodairaType type;
  int degree = 1;
};

struct SurfaceModP {
  u64 p = 0;
  WeierstrassModel model{IntPoly(), IntPoly(1)};  // minimal model over Q
  int weight = 0;
  PolyFp A, B;             // reductions of the model
  PolyFp A_inf, B_inf;     // reductions of the chart at infinity
  FiberConfiguration char0;
  std::vector<FiberModP> fibers;
  bool good_reduction = false;
  std::string evidence;
  /// Second Betti number of the smooth model: total Euler number - 2.
  int b2() const { return char0.total_euler - 2; }
};

/// Throws BadReduction for p in {2, 3}, non-prime p, or a fiber configuration
/// that changes modulo p.
SurfaceModP reduce_mod_p(const WeierstrassModel& m, u64 p);

struct CountOptions {
  unsigned threads = 1;  // 0 selects hardware concurrency
  u64 max_field_size = 200000;
};

/// Points of the Weierstrass model over F_{p^k}: every fiber including its
/// point at infinity, the fiber at t = infinity read from the chart.
Integer count_weierstrass_points(const SurfaceModP& s, int k, const CountOptions& options = {});

/// Number of F_q-points contributed by the fiber at an F_q-rational point
/// beyond the Weierstrass fiber. `cubic_roots` is the number of F_q-roots of
/// the local 2-torsion cubic (used for I0*).
Integer fiber_point_correction(const KodairaType& type, const Integer& q, int cubic_roots);

/// #X(F_q) - #W(F_q) for the smooth model X.
Integer smooth_model_correction(const SurfaceModP& s, int k, const CountOptions& options = {});

struct TraceData {
  int k = 1;
  Integer q;
  Integer weierstrass_count;
  Integer correction;
  Integer point_count;
  Integer t2;  // point_count - 1 - q^2
};

/// Counts and checks the Weil bound |t2| <= b2 * q.
TraceData count_smooth_points(const SurfaceModP& s, int k, const CountOptions& options = {});

/// P(x) = prod(1 - alpha_i x) with |alpha_i| = q (weight 2).
struct WeilFactor {
  IntPoly poly;
  Integer q;
  int weight = 2;
};

/// Largest | |z| - 1 | over the roots z of P(x/q)-reversed: zero when every
/// reciprocal root has absolute value q^(weight/2). Computed on square-free parts.
long double weil_deviation(const WeilFactor& f);
bool satisfies_weil(const WeilFactor& f, long double rel_tol = 1e-9L);

/// Orbit sizes of Frobenius on the non-identity fiber components (for
/// I0*, III*; I1 has none). Throws Unsupported for other types.
std::vector<int> component_orbits(const SurfaceModP& s);

/// (1 - px)^2 times (1 - p^d x^d) for every orbit of size d.
WeilFactor algebraic_factor(const SurfaceModP& s);

struct ReconstructionCandidate {
  int epsilon = 0;  // sign of the linear factor (1 - epsilon p x); 0 for even complements
  int eta = 0;      // functional-equation sign of the even-degree part
  IntPoly linear;   // 1 - epsilon p x, or 1
  IntPoly even_part;
  IntPoly complement;
};

struct Reconstruction {
  WeilFactor complement;
  ReconstructionCandidate chosen;
  std::vector<ReconstructionCandidate> candidates;  // all surviving integrality and Weil checks
  std::vector<TraceData> traces;                    // every count used, including tiebreaks
  bool tiebreak_used = false;
};

/// Solves for the complement of the algebraic factor from the traces. Counts
/// over F_{p^k} for further k on demand when several sign choices survive.
Reconstruction reconstruct_transcendental(const SurfaceModP& s, std::vector<TraceData> traces,
                                          const WeilFactor& algebraic, const CountOptions& options = {});

WeilFactor full_charpoly(const WeilFactor& algebraic, const WeilFactor& transcendental);

/// Sum of alpha^k over the reciprocal roots.
Integer trace_of_power(const IntPoly& p, int k);

}  // namespace ellrank
