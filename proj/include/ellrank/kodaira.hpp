#pragma once

#include <map>
#include <string>
#include <vector>

#include "ellrank/weierstrass.hpp"

namespace ellrank {

enum class FiberFamily { I, I_star, II, III, IV, IV_star, III_star, II_star };

struct KodairaType {
  FiberFamily family = FiberFamily::I;
  int nu = 0;  // only for I and I_star

  static KodairaType I_n(int nu) { return {FiberFamily::I, nu}; }
  static KodairaType I_star_n(int nu) { return {FiberFamily::I_star, nu}; }
  static KodairaType of(FiberFamily f) { return {f, 0}; }

  bool is_smooth() const { return family == FiberFamily::I && nu == 0; }
  /// Number of irreducible components (standard Kodaira count; I_0 has 1).
  int components() const;
  /// Euler number of the fiber, equal to v(Delta) in characteristic 0.
  int euler() const;
  /// "I1", "I0*", "III*", ...
  std::string name() const;

  friend bool operator==(const KodairaType&, const KodairaType&) = default;
  friend auto operator<=>(const KodairaType&, const KodairaType&) = default;
};

/// Parses the names produced by KodairaType::name.
KodairaType parse_kodaira(const std::string& name);

/// Characteristic-0 table on (v(c4), v(c6), v(Delta)). Throws BadParameters
/// for a non-minimal pattern and InconsistencyError when no row matches.
KodairaType classify_valuations(int v_c4, int v_c6, int v_delta);

struct FiberDescriptor {
  Place place = Place::infinity();
  KodairaType type;
  int v_delta = 0;
  int components = 1;
  int euler = 0;
  int degree = 1;
};

enum class SurfaceKind { rational, k3, other };

std::string to_string(SurfaceKind k);

struct FiberConfiguration {
  std::vector<FiberDescriptor> fibers;  // singular fibers only, finite places first
  int total_euler = 0;
  SurfaceKind kind = SurfaceKind::other;

  /// Type -> number of geometric fibers (place degrees summed).
  std::map<KodairaType, int> type_counts() const;
  /// Sum over fibers of degree * (components - 1).
  int non_identity_components() const;
};

/// Classifies the fiber of a model that is minimal at p.
FiberDescriptor classify_place(const WeierstrassModel& m, const Place& p);

/// Minimalizes, factors Delta and classifies every singular fiber, including
/// the one at infinity.
FiberConfiguration fiber_configuration(const WeierstrassModel& m);

/// Short form such as "III* + 3 I1".
std::string summary(const FiberConfiguration& c);
/// Short form of a type multiset.
std::string summary(const std::map<KodairaType, int>& counts);

/// I_nu <-> I*_nu, II <-> IV*, III <-> III*, IV <-> II*.
KodairaType twist_transform(KodairaType k);

/// Fiber above a branch point of a ramified double cover.
KodairaType ramified_double_cover_transform(KodairaType k);

/// Fibers above a place with `preimages` points of ramification index
/// `ramification`. Additive types are only supported unramified, or with
/// index two through the double-cover table.
std::vector<FiberDescriptor> unramified_base_change_expand(const FiberDescriptor& d, int preimages,
                                                           int ramification = 1);

}  // namespace ellrank
