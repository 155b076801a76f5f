#pragma once

#include <map>
#include <string>
#include <vector>

#include "ellrank/kodaira.hpp"

namespace ellrank {

/// 2 + sum over fibers of degree * (m - 1) + mw_rank.
int shioda_tate_rho(const FiberConfiguration& config, int mw_rank);

/// 8 - sum of degree * (m - 1) for a rational elliptic surface.
int rational_mw_rank(const FiberConfiguration& config);

/// constant + sum of coefficient * symbol, symbols kept opaque.
struct RankExpr {
  int constant = 0;
  std::map<std::string, int> symbols;

  static RankExpr known(int n) { return {n, {}}; }
  static RankExpr unknown(const std::string& name) { return {0, {{name, 1}}}; }
  bool is_known() const { return symbols.empty(); }

  friend bool operator==(const RankExpr&, const RankExpr&) = default;
};

RankExpr twist_rank_sum(const RankExpr& rank_pi, const RankExpr& rank_twist);
std::string to_string(const RankExpr& e);

/// Symbol standing for the Mordell-Weil rank of the twist by the critical values.
inline const std::string kTwistRankSymbol = "rank(MW(π̃))";

struct LedgerStep {
  std::string name;         // "pi", "pi_1", "pi~", ...
  std::string description;  // how the surface was built
  WeierstrassModel model;
  FiberConfiguration configuration;
  RankExpr rank;
  std::string justification;  // rational-rank-formula | twist-additivity | base-change-pullback | shioda-tate
  bool table_check = true;    // fiber tables of the twist / cover agree with the recomputed configuration
};

struct RankLedger {
  Rational a, b, c;
  std::vector<Rational> critical_values;
  std::vector<LedgerStep> steps;
  RankExpr final_expression;
  /// Whether the last base change is isomorphic (u^2 rational) to family_E_abc(a, b, c).
  bool matches_family = false;
  Rational family_u_squared;
};

/// Builds E'_c, its pullbacks and twists, and re-derives every fiber
/// configuration. Throws InconsistencyError naming the failing step.
RankLedger construction_pipeline(const Rational& c, const Rational& a, const Rational& b);

/// The twist of E'_c by the two critical values of f_ab (the surface whose
/// rank the ledger leaves open).
WeierstrassModel pipeline_twist(const Rational& c, const Rational& a, const Rational& b);

}  // namespace ellrank
