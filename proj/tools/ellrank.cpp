// ellrank: fiber configurations, point counts and Mordell-Weil rank
// certificates for elliptic surfaces y^2 = x^3 + A(t) x + B(t).

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "ellrank/errors.hpp"
#include "ellrank/model_text.hpp"
#include "ellrank/report.hpp"

using namespace ellrank;

namespace {

struct Globals {
  bool json = false;
  unsigned threads = 0;
  double factor_timeout = 30;
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw BadParameters("cannot write " + path);
  out << text;
}

void print_model(const WeierstrassModel& m) {
  std::cout << "A = " << to_string(m.A()) << "\nB = " << to_string(m.B()) << "\n";
}

void print_configuration(const FiberConfiguration& c) {
  std::vector<std::string> places;
  std::size_t width = 5;
  for (const auto& f : c.fibers) {
    std::string place = to_string(f.place);
    if (f.degree > 1) place += " (degree " + std::to_string(f.degree) + ")";
    width = std::max(width, place.size());
    places.push_back(place);
  }
  const int w = static_cast<int>(width) + 2;
  std::cout << std::left << std::setw(w) << "place" << std::setw(7) << "type" << std::setw(8) << "v(D)"
            << "components\n";
  for (std::size_t i = 0; i < c.fibers.size(); ++i) {
    const auto& f = c.fibers[i];
    std::cout << std::setw(w) << places[i] << std::setw(7) << f.type.name() << std::setw(8) << f.v_delta
              << f.components << "\n";
  }
  std::cout << "configuration: " << summary(c) << "\nEuler number " << c.total_euler << ", " << to_string(c.kind)
            << "\n";
}

int cmd_fibers(const Globals& g, const std::string& path) {
  const ModelFile f = read_model_file(path);
  const FiberConfiguration c = fiber_configuration(f.model);
  if (g.json) {
    Json j;
    if (!f.label.empty()) j["label"] = f.label;
    j["model"] = to_json(f.model);
    j["configuration"] = to_json(c);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  if (!f.label.empty()) std::cout << f.label << "\n";
  print_configuration(c);
  return 0;
}

int cmd_construct(const Globals& g, const std::string& a_text, const std::string& b_text, const std::string& c_text,
                  const std::string& out_path, const std::string& ledger_path) {
  Rational a, b, c;
  try {
    a = parse_rational(a_text);
    b = parse_rational(b_text);
    c = parse_rational(c_text);
  } catch (const std::exception&) {
    throw BadParameters("parameters must be rationals");
  }
  const WeierstrassModel raw = family_E_abc(a, b, c);
  const WeierstrassModel model = reduce_constants(minimalize(raw).first).first;
  const RankLedger ledger = construction_pipeline(c, a, b);
  const FiberConfiguration config = fiber_configuration(model);
  const std::string label = "E_{" + to_string(a) + "," + to_string(b) + "," + to_string(c) + "}";
  if (!out_path.empty()) write_file(out_path, model_text(model, label));
  Json lj = to_json(ledger);
  if (!ledger_path.empty()) write_file(ledger_path, lj.dump(2) + "\n");
  if (g.json) {
    Json j;
    j["label"] = label;
    j["model"] = to_json(model);
    j["configuration"] = to_json(config);
    j["ledger"] = lj;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << label << "\n";
  print_model(model);
  std::cout << "configuration: " << summary(config) << " (" << to_string(config.kind) << ")\n\n";
  for (const auto& s : ledger.steps) {
    std::cout << std::left << std::setw(7) << s.name << std::setw(22) << summary(s.configuration) << to_string(s.rank)
              << "  [" << s.justification << "]\n";
  }
  std::cout << "critical values of f_ab: " << to_string(ledger.critical_values[0]) << ", "
            << to_string(ledger.critical_values[1]) << "\n";
  std::cout << "rank MW(E_abc) = " << to_string(ledger.final_expression) << "\n";
  return 0;
}

int cmd_count(const Globals& g, const std::string& path, u64 p, int k) {
  const ModelFile f = read_model_file(path);
  const SurfaceModP s = reduce_mod_p(f.model, p);
  CountOptions opts;
  opts.threads = g.threads;
  const TraceData t = count_smooth_points(s, k, opts);
  if (g.json) {
    Json j = to_json(t);
    j["reduction"] = s.evidence;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << s.evidence << "\n"
            << "q = " << t.q << "\n#W(F_q) = " << t.weierstrass_count << "\ncorrection = " << t.correction
            << "\n#X(F_q) = " << t.point_count << "\nt2 = " << t.t2 << "\n";
  return 0;
}

std::pair<u64, u64> parse_primes(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw BadParameters("--primes expects p1,p2");
  try {
    return {std::stoull(text.substr(0, comma)), std::stoull(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw BadParameters("--primes expects two integers");
  }
}

void print_certificate(const RankCertificate& c) {
  std::cout << "configuration: " << summary(c.configuration) << " (" << to_string(c.configuration.kind) << ")\n"
            << "route: " << c.route;
  if (!c.reparametrization.empty()) std::cout << " (" << c.reparametrization << ")";
  std::cout << "\n";
  if (c.family) {
    std::cout << "family member: (a, b, c) = (" << to_string(c.family->a) << ", " << to_string(c.family->b) << ", "
              << to_string(c.family->c) << ")\n";
  }
  if (c.ledger) std::cout << "ledger: rank MW(E_abc) = " << to_string(c.ledger->final_expression) << "\n";
  std::cout << "certified surface: " << summary(c.subject_configuration) << "\n";
  for (const auto& r : c.reports) {
    std::cout << "p = " << r.p << ": G = (" << to_string(r.reconstruction.chosen.linear, "x") << ") * ("
              << to_string(r.reconstruction.chosen.even_part, "x") << ")\n"
              << "  rho_bar = " << r.rho_bar << ", Tate roots in the quartic = " << r.tate_roots_in_complement
              << ", stabilizing degree " << r.stabilizing_degree << ", class over F_p^" << r.extension_degree << ": "
              << (r.square_class ? to_string(*r.square_class) : "unresolved (" + r.unresolved + ")") << "\n";
  }
  std::cout << "comparison: " << c.comparison.verdict << ", rho <= " << c.comparison.bound << "\n";
  for (const auto& w : c.comparison.warnings) std::cerr << "warning: " << w << "\n";
  std::cout << "rho in [" << c.rho_lower << ", " << c.rho_upper << "]";
  if (c.rho_lower == c.rho_upper) std::cout << ", rho = " << c.rho_lower;
  std::cout << "\nMW rank of the certified surface = " << to_string(c.subject_mw_rank) << "\n";
  if (c.route == "family-member") std::cout << "MW rank of the model = " << to_string(c.model_mw_rank) << "\n";
  if (c.family_mw_rank) std::cout << "MW rank (family member) = " << to_string(*c.family_mw_rank) << "\n";
}

int cmd_certify(const Globals& g, const std::string& path, const std::string& primes, const std::string& out_path) {
  const ModelFile f = read_model_file(path);
  const auto [p1, p2] = parse_primes(primes);
  CertifyOptions opts;
  opts.count.threads = g.threads;
  opts.factor.timeout = std::chrono::milliseconds(static_cast<long long>(g.factor_timeout * 1000));
  const RankCertificate c = certify_rank(f.model, p1, p2, opts);
  Json j = to_json(c);
  if (!f.label.empty()) j["label"] = f.label;
  if (!out_path.empty()) write_file(out_path, j.dump(2) + "\n");
  if (g.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    print_certificate(c);
  }
  return 0;
}

int cmd_verify(const Globals& g, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, 0, "cannot read " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(0, static_cast<int>(e.byte), e.what());
  }
  FactorOptions fo;
  fo.timeout = std::chrono::milliseconds(static_cast<long long>(g.factor_timeout * 1000));
  const VerificationResult r = verify_certificate(j, fo);
  if (g.json) {
    Json out;
    out["ok"] = r.ok();
    out["passed"] = r.passed;
    out["failed"] = r.failed;
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& s : r.passed) std::cout << "ok    " << s << "\n";
    for (const auto& s : r.failed) std::cout << "FAIL  " << s << "\n";
  }
  return r.ok() ? 0 : static_cast<int>(ErrorCode::inconsistency);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mordell-Weil rank certificates for elliptic surfaces"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "Machine-readable output");
  app.add_option("--threads", g.threads, "Counting threads (0: all cores)");
  app.add_option("--factor-timeout", g.factor_timeout, "Seconds allowed for integer factorization");

  std::string model, a, b, c, out, ledger, primes = "17,19";
  u64 prime = 0;
  int degree = 1;

  auto* fibers = app.add_subcommand("fibers", "Classify the singular fibers");
  fibers->add_option("model", model, "Model file")->required();

  auto* construct = app.add_subcommand("construct", "Build E_{a,b,c} and its rank ledger");
  construct->add_option("--a", a)->required();
  construct->add_option("--b", b)->required();
  construct->add_option("--c", c)->required();
  construct->add_option("-o,--out", out, "Write the model file here");
  construct->add_option("--ledger", ledger, "Write the JSON ledger here");

  auto* count = app.add_subcommand("count", "Count points on the smooth model over F_{p^k}");
  count->add_option("model", model, "Model file")->required();
  count->add_option("-p,--prime", prime)->required();
  count->add_option("-k,--degree", degree)->default_val(1);

  auto* certify = app.add_subcommand("certify", "Certify the Picard number and Mordell-Weil rank");
  certify->add_option("model", model, "Model file")->required();
  certify->add_option("--primes", primes, "Two primes of good reduction")->default_val("17,19");
  certify->add_option("-o,--out", out, "Write the JSON certificate here");

  auto* verify = app.add_subcommand("verify", "Re-check the arithmetic of a JSON certificate");
  verify->add_option("certificate", model, "Certificate file")->required();

  for (auto* sub : {fibers, construct, count, certify, verify}) {
    sub->add_flag("--json", g.json, "Machine-readable output");
    sub->add_option("--threads", g.threads, "Counting threads (0: all cores)");
    sub->add_option("--factor-timeout", g.factor_timeout, "Seconds allowed for integer factorization");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(ErrorCode::bad_parameters);
  }

  try {
    if (*fibers) return cmd_fibers(g, model);
    if (*construct) return cmd_construct(g, a, b, c, out, ledger);
    if (*count) return cmd_count(g, model, prime, degree);
    if (*certify) return cmd_certify(g, model, primes, out);
    if (*verify) return cmd_verify(g, model);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return static_cast<int>(ErrorCode::inconsistency);
  }
  return 0;
}
