#include "ellrank/report.hpp"

#include <numeric>

#include "ellrank/errors.hpp"

namespace ellrank {

Json to_json(const IntPoly& p) {
  Json a = Json::array();
  for (const auto& c : p.coefficients()) a.push_back(c.get_str());
  return a;
}

IntPoly poly_from_json(const Json& j) {
  std::vector<Integer> c;
  for (const auto& v : j) c.emplace_back(v.is_string() ? v.get<std::string>() : std::to_string(v.get<long long>()));
  return IntPoly(std::move(c));
}

Json to_json(const WeierstrassModel& m) {
  Json j;
  j["A"] = to_string(m.A());
  j["B"] = to_string(m.B());
  j["A_coefficients"] = to_json(m.A());
  j["B_coefficients"] = to_json(m.B());
  j["weight"] = m.weight();
  return j;
}

WeierstrassModel model_from_json(const Json& j) {
  return WeierstrassModel(poly_from_json(j.at("A_coefficients")), poly_from_json(j.at("B_coefficients")));
}

Json to_json(const FiberConfiguration& c) {
  Json j;
  j["kind"] = to_string(c.kind);
  j["total_euler"] = c.total_euler;
  j["summary"] = summary(c);
  j["non_identity_components"] = c.non_identity_components();
  Json fibers = Json::array();
  for (const auto& f : c.fibers) {
    Json fj;
    fj["place"] = to_string(f.place);
    fj["degree"] = f.degree;
    fj["type"] = f.type.name();
    fj["v_delta"] = f.v_delta;
    fj["components"] = f.components;
    fj["euler"] = f.euler;
    fibers.push_back(fj);
  }
  j["fibers"] = fibers;
  return j;
}

Json to_json(const RankLedger& l) {
  Json j;
  j["a"] = to_string(l.a);
  j["b"] = to_string(l.b);
  j["c"] = to_string(l.c);
  Json crit = Json::array();
  for (const auto& v : l.critical_values) crit.push_back(to_string(v));
  j["critical_values"] = crit;
  Json steps = Json::array();
  for (const auto& s : l.steps) {
    Json sj;
    sj["name"] = s.name;
    sj["description"] = s.description;
    sj["model"] = to_json(s.model);
    sj["configuration"] = summary(s.configuration);
    sj["kind"] = to_string(s.configuration.kind);
    sj["rank"] = to_string(s.rank);
    sj["justification"] = s.justification;
    sj["table_check"] = s.table_check;
    steps.push_back(sj);
  }
  j["steps"] = steps;
  j["final_expression"] = to_string(l.final_expression);
  j["final_constant"] = l.final_expression.constant;
  j["matches_family"] = l.matches_family;
  j["family_u_squared"] = to_string(l.family_u_squared);
  return j;
}

Json to_json(const TraceData& t) {
  Json j;
  j["k"] = t.k;
  j["q"] = t.q.get_str();
  j["weierstrass_count"] = t.weierstrass_count.get_str();
  j["correction"] = t.correction.get_str();
  j["point_count"] = t.point_count.get_str();
  j["t2"] = t.t2.get_str();
  return j;
}

Json to_json(const WeilFactor& f) {
  Json j;
  j["q"] = f.q.get_str();
  j["weight"] = f.weight;
  j["degree"] = f.poly.degree();
  j["coefficients"] = to_json(f.poly);
  return j;
}

Json to_json(const SquareClass& c) {
  Json j;
  j["sign"] = c.sign;
  Json primes = Json::array();
  for (const auto& p : c.odd_primes) primes.push_back(p.get_str());
  j["primes"] = primes;
  j["text"] = to_string(c);
  return j;
}

Json to_json(const PicardReport& r) {
  Json j;
  j["p"] = r.p;
  j["reduction"] = r.reduction_evidence;
  Json traces = Json::array();
  for (const auto& t : r.traces) traces.push_back(to_json(t));
  j["traces"] = traces;
  j["component_orbits"] = r.component_orbits;
  j["algebraic_factor"] = to_json(r.algebraic);
  const auto& c = r.reconstruction.chosen;
  Json tr;
  tr["epsilon"] = c.epsilon;
  tr["eta"] = c.eta;
  tr["linear"] = to_json(c.linear);
  tr["even_part"] = to_json(c.even_part);
  tr["complement"] = to_json(c.complement);
  tr["candidates_surviving_weil"] = r.reconstruction.candidates.size();
  tr["tiebreak_used"] = r.reconstruction.tiebreak_used;
  j["transcendental_factor"] = tr;
  j["charpoly"] = to_json(r.charpoly);
  j["rho_bar"] = r.rho_bar;
  j["stabilizing_degree"] = r.stabilizing_degree;
  j["tate_roots_in_even_part"] = r.tate_roots_in_complement;
  j["parity_ok"] = r.parity_ok;
  j["extension_degree"] = r.extension_degree;
  j["extended_charpoly"] = to_json(r.extended);
  j["square_class"] = r.square_class ? to_json(*r.square_class) : Json(nullptr);
  if (!r.unresolved.empty()) j["unresolved"] = r.unresolved;
  return j;
}

namespace {

Json interval_json(const RankInterval& r) {
  Json j;
  j["lo"] = r.lo;
  j["hi"] = r.hi;
  j["text"] = to_string(r);
  return j;
}

}  // namespace

Json to_json(const RankCertificate& c) {
  Json j;
  j["model"] = to_json(c.model);
  j["configuration"] = to_json(c.configuration);
  j["route"] = c.route;
  if (c.family) {
    Json f;
    f["a"] = to_string(c.family->a);
    f["b"] = to_string(c.family->b);
    f["c"] = to_string(c.family->c);
    j["family"] = f;
  }
  if (!c.reparametrization.empty()) j["reparametrization"] = c.reparametrization;
  if (c.ledger) j["ledger"] = to_json(*c.ledger);
  j["subject"] = to_json(c.subject);
  j["subject_configuration"] = to_json(c.subject_configuration);
  Json reports = Json::array();
  for (const auto& r : c.reports) reports.push_back(to_json(r));
  j["reports"] = reports;
  Json cmp;
  cmp["verdict"] = c.comparison.verdict;
  cmp["bound"] = c.comparison.bound;
  cmp["improved"] = c.comparison.improved;
  cmp["warnings"] = c.comparison.warnings;
  j["comparison"] = cmp;
  j["rho_lower"] = c.rho_lower;
  j["rho_upper"] = c.rho_upper;
  j["subject_mw_rank"] = interval_json(c.subject_mw_rank);
  j["model_mw_rank"] = interval_json(c.model_mw_rank);
  if (c.family_mw_rank) j["family_mw_rank"] = interval_json(*c.family_mw_rank);
  return j;
}

namespace {

class Checker {
 public:
  explicit Checker(VerificationResult& r) : r_(r) {}
  void operator()(bool ok, const std::string& what) { (ok ? r_.passed : r_.failed).push_back(what); }

 private:
  VerificationResult& r_;
};

WeilFactor factor_from_json(const Json& j) {
  return {poly_from_json(j.at("coefficients")), Integer(j.at("q").get<std::string>()), j.at("weight").get<int>()};
}

SquareClass class_from_json(const Json& j) {
  SquareClass c;
  c.sign = j.at("sign").get<int>();
  for (const auto& p : j.at("primes")) c.odd_primes.emplace_back(p.get<std::string>());
  return c;
}

void verify_report(const Json& r, int b2, Checker& check, const FactorOptions& options) {
  const std::string at = " (p = " + std::to_string(r.at("p").get<u64>()) + ")";
  const Integer p(static_cast<unsigned long>(r.at("p").get<u64>()));
  const WeilFactor alg = factor_from_json(r.at("algebraic_factor"));
  const WeilFactor full = factor_from_json(r.at("charpoly"));
  const Json& tr = r.at("transcendental_factor");
  const IntPoly linear = poly_from_json(tr.at("linear"));
  const IntPoly even = poly_from_json(tr.at("even_part"));
  const IntPoly complement = poly_from_json(tr.at("complement"));

  IntPoly rebuilt = power(IntPoly{Integer(1), Integer(-p)}, 2);
  for (int d : r.at("component_orbits").get<std::vector<int>>()) {
    rebuilt *= IntPoly(Integer(1)) - IntPoly::monomial(ipow(p, static_cast<unsigned long>(d)), static_cast<std::size_t>(d));
  }
  check(rebuilt == alg.poly, "algebraic factor equals (1-px)^2 times the orbit blocks" + at);
  check(linear * even == complement, "complement equals linear times even part" + at);
  check(alg.poly * complement == full.poly, "charpoly equals algebraic times complement" + at);
  check(full.poly.degree() == b2 && full.poly[0] == 1, "charpoly has degree b2 and constant term 1" + at);
  check(satisfies_weil(full), "reciprocal roots of the charpoly have absolute value q" + at);

  const int n2 = even.degree(), r2 = n2 / 2, eta = tr.at("eta").get<int>();
  bool fe = eta == 1 || even[static_cast<std::size_t>(r2)] == 0;
  for (int i = 0; i < r2; ++i) {
    fe = fe && even[static_cast<std::size_t>(n2 - i)] ==
                   eta * ipow(p, static_cast<unsigned long>(n2 - 2 * i)) * even[static_cast<std::size_t>(i)];
  }
  check(fe, "even part satisfies the functional equation" + at);

  bool traces_ok = true;
  for (const auto& t : r.at("traces")) {
    const Integer q(t.at("q").get<std::string>());
    const Integer n(t.at("point_count").get<std::string>());
    const Integer t2(t.at("t2").get<std::string>());
    traces_ok = traces_ok && t2 == n - 1 - q * q &&
                Integer(t.at("weierstrass_count").get<std::string>()) + Integer(t.at("correction").get<std::string>()) == n &&
                trace_of_power(full.poly, t.at("k").get<int>()) == t2;
  }
  check(traces_ok, "every recorded count matches the charpoly trace" + at);

  const TateCount tc = count_tate_roots(full);
  check(tc.count == r.at("rho_bar").get<int>() && tc.stabilizing_degree == r.at("stabilizing_degree").get<int>(),
        "Tate count and stabilizing degree" + at);
  check(count_tate_roots({even, p, 2}).count == r.at("tate_roots_in_even_part").get<int>(),
        "Tate roots inside the even part" + at);
  const int n = r.at("extension_degree").get<int>();
  const WeilFactor ext = factor_from_json(r.at("extended_charpoly"));
  check(n == std::lcm(tc.stabilizing_degree, 2) && ext.q == ipow(p, static_cast<unsigned long>(n)) &&
            roots_power_poly(full.poly, static_cast<unsigned>(n)) == ext.poly,
        "extended charpoly is the n-th power transport" + at);
  if (!r.at("square_class").is_null()) {
    check(artin_tate_square_class(ext, tc.count, options) == class_from_json(r.at("square_class")),
          "Artin-Tate square class" + at);
  }
}

}  // namespace

VerificationResult verify_certificate(const Json& cert, const FactorOptions& options) {
  VerificationResult result;
  Checker check(result);
  try {
    const FiberConfiguration sub = fiber_configuration(model_from_json(cert.at("subject")));
    const int b2 = sub.total_euler - 2;
    int nonid = 0;
    for (const auto& f : cert.at("subject_configuration").at("fibers")) {
      nonid += f.at("degree").get<int>() * (f.at("components").get<int>() - 1);
    }
    check(nonid == sub.non_identity_components(), "subject fiber configuration recomputes");
    check(cert.at("rho_lower").get<int>() == 2 + nonid, "Shioda-Tate lower bound 2 + sum(m - 1)");

    const Json& reports = cert.at("reports");
    for (const auto& r : reports) verify_report(r, b2, check, options);

    if (reports.size() == 2) {
      const Json& c1 = reports[0].at("square_class");
      const Json& c2 = reports[1].at("square_class");
      const int rho1 = reports[0].at("rho_bar").get<int>(), rho2 = reports[1].at("rho_bar").get<int>();
      int bound = std::min(rho1, rho2);
      if (rho1 == rho2 && !c1.is_null() && !c2.is_null() && !(class_from_json(c1) == class_from_json(c2))) bound -= 1;
      check(cert.at("comparison").at("bound").get<int>() == bound && cert.at("rho_upper").get<int>() == bound,
            "van Luijk bound from the two classes");
    }
    const int lo = 0, hi = cert.at("rho_upper").get<int>() - 2 - nonid;
    const Json& s = cert.at("subject_mw_rank");
    check(s.at("lo").get<int>() == lo && s.at("hi").get<int>() == hi, "subject Mordell-Weil rank by Shioda-Tate");
    const std::string route = cert.at("route").get<std::string>();
    const int shift = cert.contains("ledger") ? cert.at("ledger").at("final_constant").get<int>() : 0;
    const Json& target = route == "twisted-auxiliary" ? cert.at("family_mw_rank") : cert.at("model_mw_rank");
    const int add = route == "direct" ? 0 : shift;
    check(target.at("lo").get<int>() == lo + add && target.at("hi").get<int>() == hi + add,
          "rank of the " + std::string(route == "direct" ? "model" : "family member") + " from the ledger");
  } catch (const std::exception& e) {
    check(false, std::string("certificate is malformed: ") + e.what());
  }
  return result;
}

}  // namespace ellrank
