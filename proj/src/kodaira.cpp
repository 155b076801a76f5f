#include "ellrank/kodaira.hpp"

#include <sstream>

#include "ellrank/errors.hpp"

namespace ellrank {

int KodairaType::components() const {
  switch (family) {
    case FiberFamily::I:
      return nu == 0 ? 1 : nu;
    case FiberFamily::I_star:
      return nu + 5;
    case FiberFamily::II:
      return 1;
    case FiberFamily::III:
      return 2;
    case FiberFamily::IV:
      return 3;
    case FiberFamily::IV_star:
      return 7;
    case FiberFamily::III_star:
      return 8;
    case FiberFamily::II_star:
      return 9;
  }
  return 1;
}

int KodairaType::euler() const {
  switch (family) {
    case FiberFamily::I:
      return nu;
    case FiberFamily::I_star:
      return nu + 6;
    case FiberFamily::II:
      return 2;
    case FiberFamily::III:
      return 3;
    case FiberFamily::IV:
      return 4;
    case FiberFamily::IV_star:
      return 8;
    case FiberFamily::III_star:
      return 9;
    case FiberFamily::II_star:
      return 10;
  }
  return 0;
}

std::string KodairaType::name() const {
  switch (family) {
    case FiberFamily::I:
      return "I" + std::to_string(nu);
    case FiberFamily::I_star:
      return "I" + std::to_string(nu) + "*";
    case FiberFamily::II:
      return "II";
    case FiberFamily::III:
      return "III";
    case FiberFamily::IV:
      return "IV";
    case FiberFamily::IV_star:
      return "IV*";
    case FiberFamily::III_star:
      return "III*";
    case FiberFamily::II_star:
      return "II*";
  }
  return "?";
}

KodairaType parse_kodaira(const std::string& name) {
  static const std::map<std::string, FiberFamily> fixed = {
      {"II", FiberFamily::II},         {"III", FiberFamily::III},         {"IV", FiberFamily::IV},
      {"IV*", FiberFamily::IV_star},   {"III*", FiberFamily::III_star},   {"II*", FiberFamily::II_star},
  };
  if (auto it = fixed.find(name); it != fixed.end()) return KodairaType::of(it->second);
  if (name.size() >= 2 && name[0] == 'I') {
    const bool star = name.back() == '*';
    const std::string digits = name.substr(1, name.size() - 1 - (star ? 1 : 0));
    if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos) {
      const int nu = std::stoi(digits);
      return star ? KodairaType::I_star_n(nu) : KodairaType::I_n(nu);
    }
  }
  throw BadParameters("unknown Kodaira type '" + name + "'");
}

KodairaType classify_valuations(int v_c4, int v_c6, int v_delta) {
  if (v_c4 >= 4 && v_c6 >= 6) throw BadParameters("model is not minimal at this place");
  if (v_delta == 0) return KodairaType::I_n(0);
  if (v_c4 == 0) return KodairaType::I_n(v_delta);
  if (v_delta > 6 && v_c4 == 2 && v_c6 == 3) return KodairaType::I_star_n(v_delta - 6);
  switch (v_delta) {
    case 2:
      return KodairaType::of(FiberFamily::II);
    case 3:
      return KodairaType::of(FiberFamily::III);
    case 4:
      return KodairaType::of(FiberFamily::IV);
    case 8:
      return KodairaType::of(FiberFamily::IV_star);
    case 9:
      return KodairaType::of(FiberFamily::III_star);
    case 10:
      return KodairaType::of(FiberFamily::II_star);
    default:
      break;
  }
  if (v_delta == 6 && v_c4 >= 2 && v_c6 >= 3) return KodairaType::I_star_n(0);
  throw InconsistencyError("valuations (" + std::to_string(v_c4) + ", " + std::to_string(v_c6) + ", " +
                           std::to_string(v_delta) + ") match no Kodaira type");
}

std::string to_string(SurfaceKind k) {
  switch (k) {
    case SurfaceKind::rational:
      return "rational";
    case SurfaceKind::k3:
      return "K3";
    case SurfaceKind::other:
      return "other";
  }
  return "other";
}

std::map<KodairaType, int> FiberConfiguration::type_counts() const {
  std::map<KodairaType, int> out;
  for (const auto& f : fibers) out[f.type] += f.degree;
  return out;
}

int FiberConfiguration::non_identity_components() const {
  int s = 0;
  for (const auto& f : fibers) s += f.degree * (f.components - 1);
  return s;
}

FiberDescriptor classify_place(const WeierstrassModel& m, const Place& p) {
  const LocalValuations v = local_valuations(m, p);
  FiberDescriptor d;
  d.place = p;
  d.type = classify_valuations(v.c4, v.c6, v.delta);
  d.v_delta = v.delta;
  d.components = d.type.components();
  d.euler = d.type.euler();
  d.degree = p.degree();
  return d;
}

FiberConfiguration fiber_configuration(const WeierstrassModel& m0) {
  const WeierstrassModel m = minimalize(m0).first;
  FiberConfiguration c;
  const IntPoly delta = invariants(m).delta;
  if (delta.degree() > 0) {
    for (const auto& [f, mult] : factor_over_Q(delta)) {
      c.fibers.push_back(classify_place(m, Place::finite(f)));
    }
  }
  FiberDescriptor inf = classify_place(m, Place::infinity());
  if (!inf.type.is_smooth()) c.fibers.push_back(inf);
  for (const auto& f : c.fibers) c.total_euler += f.degree * f.euler;
  if (c.total_euler != 12 * m.weight()) {
    throw InconsistencyError("Euler number " + std::to_string(c.total_euler) + " disagrees with weight " +
                             std::to_string(m.weight()));
  }
  c.kind = c.total_euler == 12 ? SurfaceKind::rational : c.total_euler == 24 ? SurfaceKind::k3 : SurfaceKind::other;
  return c;
}

std::string summary(const std::map<KodairaType, int>& counts) {
  std::ostringstream os;
  bool first = true;
  // Largest fibers first reads more naturally.
  for (auto it = counts.rbegin(); it != counts.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    if (it->second != 1) os << it->second << " ";
    os << it->first.name();
  }
  if (first) os << "smooth";
  return os.str();
}

std::string summary(const FiberConfiguration& c) { return summary(c.type_counts()); }

KodairaType twist_transform(KodairaType k) {
  switch (k.family) {
    case FiberFamily::I:
      return KodairaType::I_star_n(k.nu);
    case FiberFamily::I_star:
      return KodairaType::I_n(k.nu);
    case FiberFamily::II:
      return KodairaType::of(FiberFamily::IV_star);
    case FiberFamily::IV_star:
      return KodairaType::of(FiberFamily::II);
    case FiberFamily::III:
      return KodairaType::of(FiberFamily::III_star);
    case FiberFamily::III_star:
      return KodairaType::of(FiberFamily::III);
    case FiberFamily::IV:
      return KodairaType::of(FiberFamily::II_star);
    case FiberFamily::II_star:
      return KodairaType::of(FiberFamily::IV);
  }
  return k;
}

KodairaType ramified_double_cover_transform(KodairaType k) {
  switch (k.family) {
    case FiberFamily::I:
    case FiberFamily::I_star:
      return KodairaType::I_n(2 * k.nu);
    case FiberFamily::II:
    case FiberFamily::IV_star:
      return KodairaType::of(FiberFamily::IV);
    case FiberFamily::III:
    case FiberFamily::III_star:
      return KodairaType::I_star_n(0);
    case FiberFamily::IV:
    case FiberFamily::II_star:
      return KodairaType::of(FiberFamily::IV_star);
  }
  return k;
}

std::vector<FiberDescriptor> unramified_base_change_expand(const FiberDescriptor& d, int preimages,
                                                           int ramification) {
  if (preimages < 1 || ramification < 1) throw BadParameters("base change degrees must be positive");
  KodairaType t = d.type;
  if (ramification > 1) {
    if (t.family == FiberFamily::I) {
      t = KodairaType::I_n(t.nu * ramification);
    } else if (ramification == 2) {
      t = ramified_double_cover_transform(t);
    } else {
      throw Unsupported("pullback of " + t.name() + " with ramification index " + std::to_string(ramification));
    }
  }
  FiberDescriptor one = d;
  one.type = t;
  one.components = t.components();
  one.euler = t.euler();
  one.v_delta = t.euler();
  one.degree = 1;
  return std::vector<FiberDescriptor>(static_cast<std::size_t>(preimages), one);
}

}  // namespace ellrank
