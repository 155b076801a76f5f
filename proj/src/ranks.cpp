#include "ellrank/ranks.hpp"

#include "ellrank/errors.hpp"

namespace ellrank {

int shioda_tate_rho(const FiberConfiguration& config, int mw_rank) {
  if (config.fibers.empty()) throw BadParameters("Shioda-Tate needs at least one singular fiber");
  return 2 + config.non_identity_components() + mw_rank;
}

int rational_mw_rank(const FiberConfiguration& config) {
  if (config.kind != SurfaceKind::rational) throw BadParameters("rank formula applies to rational surfaces only");
  const int r = 8 - config.non_identity_components();
  if (r < 0) throw InconsistencyError("rational surface with more than 8 non-identity components");
  return r;
}

RankExpr twist_rank_sum(const RankExpr& rank_pi, const RankExpr& rank_twist) {
  RankExpr e = rank_pi;
  e.constant += rank_twist.constant;
  for (const auto& [name, k] : rank_twist.symbols) {
    if ((e.symbols[name] += k) == 0) e.symbols.erase(name);
  }
  return e;
}

std::string to_string(const RankExpr& e) {
  std::string s;
  if (e.constant != 0 || e.symbols.empty()) s = std::to_string(e.constant);
  for (const auto& [name, k] : e.symbols) {
    if (!s.empty()) s += " + ";
    if (k != 1) s += std::to_string(k) + "*";
    s += name;
  }
  return s;
}

namespace {

using Counts = std::map<KodairaType, int>;

Counts counts_of(std::initializer_list<std::pair<KodairaType, int>> list) {
  Counts c;
  for (const auto& [k, n] : list) c[k] += n;
  return c;
}

KodairaType type_at(const FiberConfiguration& config, const Place& p) {
  for (const auto& f : config.fibers) {
    if (f.place == p) return f.type;
  }
  return KodairaType::I_n(0);
}

void bump(Counts& c, const KodairaType& k, int n) {
  if (k.is_smooth()) return;
  if ((c[k] += n) == 0) c.erase(k);
}

Counts predict_twist(const FiberConfiguration& config, const std::vector<Place>& points) {
  Counts c = config.type_counts();
  for (const auto& p : points) {
    const KodairaType k = type_at(config, p);
    bump(c, k, -1);
    bump(c, twist_transform(k), 1);
  }
  return c;
}

// Double cover branched exactly at `branch` (degree-one places).
Counts predict_double_cover(const FiberConfiguration& config, const std::vector<Place>& branch) {
  Counts c;
  for (const auto& f : config.fibers) {
    bool ramified = false;
    for (const auto& p : branch) ramified = ramified || p == f.place;
    if (ramified) {
      bump(c, ramified_double_cover_transform(f.type), 1);
    } else {
      bump(c, f.type, 2 * f.degree);
    }
  }
  return c;
}

Place linear_place(const Rational& r) {
  return Place::finite(IntPoly{Integer(-r.get_num()), Integer(r.get_den())});
}

LedgerStep make_step(const std::string& name, const std::string& description, const WeierstrassModel& model,
                     const Counts& expected, const Counts& predicted, const RankExpr& rank,
                     const std::string& justification) {
  LedgerStep s{name, description, model, fiber_configuration(model), rank, justification, true};
  const Counts got = s.configuration.type_counts();
  if (got != expected) {
    throw InconsistencyError("step " + name + ": expected " + summary(expected) + ", got " + summary(got));
  }
  s.table_check = predicted == got;
  if (!s.table_check) {
    throw InconsistencyError("step " + name + ": fiber tables predict " + summary(predicted) + ", recomputed " +
                             summary(got));
  }
  return s;
}

const KodairaType kI1 = KodairaType::I_n(1);
const KodairaType kI0s = KodairaType::I_star_n(0);
const KodairaType kIII = KodairaType::of(FiberFamily::III);
const KodairaType kIIIs = KodairaType::of(FiberFamily::III_star);

std::vector<Rational> twist_points(const Rational& a, const Rational& b) {
  std::vector<Rational> crit = critical_values(f_ab_map(a, b));
  if (crit.size() != 2 || crit[0] == crit[1]) throw InconsistencyError("f_ab must have two distinct critical values");
  return crit;
}

}  // namespace

WeierstrassModel pipeline_twist(const Rational& c, const Rational& a, const Rational& b) {
  const auto crit = twist_points(a, b);
  return twist_by_points(auxiliary_E_prime_c(c), {linear_place(crit[0]), linear_place(crit[1])});
}

RankLedger construction_pipeline(const Rational& c, const Rational& a, const Rational& b) {
  RankLedger ledger;
  ledger.a = a;
  ledger.b = b;
  ledger.c = c;
  const WeierstrassModel pi = auxiliary_E_prime_c(c);
  const RationalFunction f = f_ab_map(a, b);
  ledger.critical_values = twist_points(a, b);
  const std::vector<Place> crit_places = {linear_place(ledger.critical_values[0]),
                                          linear_place(ledger.critical_values[1])};
  const std::vector<Place> zero_inf = {Place::finite(IntPoly::x()), Place::infinity()};
  const RationalFunction square{IntPoly::monomial(Integer(1), 2), IntPoly(Integer(1))};

  const FiberConfiguration pi_config = fiber_configuration(pi);
  const Counts pi_counts = counts_of({{kIIIs, 1}, {kI1, 3}});
  const int rank_pi = pi_config.kind == SurfaceKind::rational ? rational_mw_rank(pi_config) : -1;
  ledger.steps.push_back(make_step("pi", "E'_c: y^2 = x^3 + t^3(t-c)x + t^5", pi, pi_counts, pi_counts,
                                   RankExpr::known(rank_pi), "rational-rank-formula"));
  if (rank_pi != 1) throw InconsistencyError("step pi: expected Mordell-Weil rank 1");

  for (const auto& p : crit_places) {
    if (!type_at(pi_config, p).is_smooth()) {
      throw InconsistencyError("critical value " + to_string(p) + " lies under a singular fiber of E'_c");
    }
  }

  const WeierstrassModel pi_t = twist_by_points(pi, crit_places);
  const RankExpr unknown = RankExpr::unknown(kTwistRankSymbol);
  ledger.steps.push_back(make_step("pi~", "twist of pi by the critical values of f_ab", pi_t,
                                   counts_of({{kIIIs, 1}, {kI0s, 2}, {kI1, 3}}), predict_twist(pi_config, crit_places),
                                   unknown, "twist-additivity"));

  const WeierstrassModel pi1 = base_change(pi, f);
  const Counts all_doubled = predict_double_cover(pi_config, {});
  const RankExpr rank_pi1 = twist_rank_sum(RankExpr::known(rank_pi), unknown);
  ledger.steps.push_back(make_step("pi_1", "pullback of pi along f_ab", pi1, counts_of({{kIIIs, 2}, {kI1, 6}}),
                                   all_doubled, rank_pi1, "twist-additivity"));
  const FiberConfiguration pi1_config = ledger.steps.back().configuration;

  const WeierstrassModel pi1_t = twist_by_points(pi1, zero_inf);
  const FiberConfiguration pi1_t_config = fiber_configuration(pi1_t);
  const int rank_pi1_t = rational_mw_rank(pi1_t_config);
  ledger.steps.push_back(make_step("pi~_1", "twist of pi_1 by s = 0 and s = infinity", pi1_t,
                                   counts_of({{kIII, 2}, {kI1, 6}}), predict_twist(pi1_config, zero_inf),
                                   RankExpr::known(rank_pi1_t), "rational-rank-formula"));
  if (rank_pi1_t != 6) throw InconsistencyError("step pi~_1: expected Mordell-Weil rank 6");

  const WeierstrassModel pi2 = base_change(pi1, square);
  const RankExpr rank_pi2 = twist_rank_sum(rank_pi1, RankExpr::known(rank_pi1_t));
  ledger.steps.push_back(make_step("pi_2", "pullback of pi_1 along s -> s^2", pi2, counts_of({{kI0s, 2}, {kI1, 12}}),
                                   predict_double_cover(pi1_config, zero_inf), rank_pi2, "twist-additivity"));
  const FiberConfiguration pi2_config = ledger.steps.back().configuration;

  const WeierstrassModel pi2_t = twist_by_points(pi2, zero_inf);
  const FiberConfiguration pi2_t_config = fiber_configuration(pi2_t);
  const int rank_pi2_t = rational_mw_rank(pi2_t_config);
  ledger.steps.push_back(make_step("pi~_2", "twist of pi_2 by s = 0 and s = infinity", pi2_t, counts_of({{kI1, 12}}),
                                   predict_twist(pi2_config, zero_inf), RankExpr::known(rank_pi2_t),
                                   "rational-rank-formula"));
  if (rank_pi2_t != 8) throw InconsistencyError("step pi~_2: expected Mordell-Weil rank 8");

  const WeierstrassModel phi = base_change(pi2, square);
  ledger.final_expression = twist_rank_sum(rank_pi2, RankExpr::known(rank_pi2_t));
  ledger.steps.push_back(make_step("phi", "pullback of pi_2 along s -> s^2", phi, counts_of({{kI1, 24}}),
                                   predict_double_cover(pi2_config, zero_inf), ledger.final_expression,
                                   "twist-additivity"));

  if (auto w = is_isomorphic(family_E_abc(a, b, c), phi)) {
    ledger.matches_family = true;
    ledger.family_u_squared = w->u_squared;
  }
  return ledger;
}

}  // namespace ellrank
