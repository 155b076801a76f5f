#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ellrank/algebra/square_class.hpp"
#include "ellrank/ranks.hpp"
#include "ellrank/zeta.hpp"

namespace ellrank {

struct TateCount {
  int count = 0;
  int stabilizing_degree = 1;
  std::map<int, int> multiplicities;  // n -> multiplicity of Phi_n(qx)
};

/// Reciprocal roots of the form q*zeta with zeta a root of unity.
TateCount count_tate_roots(const WeilFactor& f);

/// Cyclotomic polynomial Phi_n.
IntPoly cyclotomic(int n);

/// rho and b2 have the same parity.
bool parity_check(int rho, int b2);

/// The factor over F_{q^n}: every reciprocal root raised to the n-th power.
WeilFactor extend_base_field(const WeilFactor& f, int n);

/// Square class of -R(1/q) where f = (1 - qx)^rho_prime R(x), q a square and
/// every Tate root of f already equal to q.
SquareClass artin_tate_square_class(const WeilFactor& f, int rho_prime, const FactorOptions& options = {});

struct CertifyOptions {
  CountOptions count;
  FactorOptions factor;
};

struct PicardReport {
  u64 p = 0;
  std::string reduction_evidence;
  std::vector<TraceData> traces;
  std::vector<int> component_orbits;
  WeilFactor algebraic;
  Reconstruction reconstruction;
  WeilFactor charpoly;
  int rho_bar = 0;
  int stabilizing_degree = 1;
  int tate_roots_in_complement = 0;
  bool parity_ok = false;
  int extension_degree = 0;
  WeilFactor extended;
  std::optional<SquareClass> square_class;
  std::string unresolved;  // why square_class is missing
};

/// Reduction, counts, reconstruction, Tate count and Artin-Tate class at p.
PicardReport picard_report(const WeierstrassModel& m, u64 p, const CertifyOptions& options = {});

struct Comparison {
  int bound = 0;
  bool improved = false;
  std::string verdict;  // "classes differ", "classes agree", "unresolved", "rho mismatch"
  std::vector<std::string> warnings;
};

/// Upper bound on the geometric Picard number in characteristic zero.
Comparison van_luijk_compare(const PicardReport& r1, const PicardReport& r2);

/// Interval [lo, hi]; lo == hi when pinned.
struct RankInterval {
  int lo = 0;
  int hi = 0;
  bool pinned() const { return lo == hi; }
};

std::string to_string(const RankInterval& r);

struct RankCertificate {
  WeierstrassModel model{IntPoly(), IntPoly(1)};
  FiberConfiguration configuration;
  /// "twisted-auxiliary": the model is the twist of E'_c left open by the
  /// construction; "family-member": the model is some E_{a,b,c}; "direct".
  std::string route;
  std::optional<FamilyParameters> family;
  std::optional<RankLedger> ledger;
  std::string reparametrization;
  /// Surface whose Picard number the two primes bound.
  WeierstrassModel subject{IntPoly(), IntPoly(1)};
  FiberConfiguration subject_configuration;
  std::vector<PicardReport> reports;
  Comparison comparison;
  int rho_lower = 0;
  int rho_upper = 0;
  RankInterval subject_mw_rank;
  RankInterval model_mw_rank;
  std::optional<RankInterval> family_mw_rank;  // only for the twisted-auxiliary route
};

/// Throws BadParameters when the model is not a K3 surface.
RankCertificate certify_rank(const WeierstrassModel& m, u64 p1, u64 p2, const CertifyOptions& options = {});

}  // namespace ellrank
