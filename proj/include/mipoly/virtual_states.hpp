#pragma once

#include <mipoly/classical.hpp>
#include <mipoly/poly.hpp>

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace mipoly {

enum class VirtualType { I, II };

std::string to_string(VirtualType t);
inline VirtualType other(VirtualType t) { return t == VirtualType::I ? VirtualType::II : VirtualType::I; }

/// Virtual state of type I or II and degree v.
struct VirtualLabel {
  VirtualType type = VirtualType::I;
  int v = 1;
};

/// The multi-index D: sorted, duplicate-free degrees of the deleted type-I
/// and type-II virtual states, each at least 1.
class IndexSet {
 public:
  IndexSet() = default;
  /// Sorts the lists; throws InvalidInput on duplicates or entries < 1.
  IndexSet(std::vector<int> type_I, std::vector<int> type_II);

  const std::vector<int>& type_I() const { return type_I_; }
  const std::vector<int>& type_II() const { return type_II_; }
  const std::vector<int>& of(VirtualType t) const { return t == VirtualType::I ? type_I_ : type_II_; }
  int M() const { return static_cast<int>(type_I_.size()); }
  int N() const { return static_cast<int>(type_II_.size()); }
  bool empty() const { return type_I_.empty() && type_II_.empty(); }

  std::string str() const;
  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<int> type_I_;
  std::vector<int> type_II_;
};

/// {"I":[...], "II":[...]}
nlohmann::json to_json(const IndexSet& d);
IndexSet index_set_from_json(const nlohmann::json& j);

/// Largest admissible degree of the given type at lambda; nullopt when
/// unbounded (L type I).
std::optional<int> max_virtual_degree(VirtualType t, const ParamSet& lambda);

/// xi_v(eta; lambda). Throws InvalidInput when the label is outside the
/// admissible range. Degree 0 is accepted and returns 1.
Poly xi(const VirtualLabel& label, const ParamSet& lambda);

/// xi without the admissibility check; used by the level-0 and raw
/// Wronskian paths.
Poly xi_unchecked(const VirtualLabel& label, const ParamSet& lambda);

/// Virtual energy; throws InvalidInput unless strictly negative.
Rational virtual_energy(const VirtualLabel& label, const ParamSet& lambda);

/// Twist of the parameters: g -> 1-g (type II) or h -> 1-h (type I, J only).
ParamSet twist(VirtualType t, const ParamSet& lambda);

struct BoundsReport {
  bool ok = true;
  std::vector<std::string> violations;
};

/// Parameter lower bounds needed to delete D. The N-dependent (and, for J,
/// M-dependent) term is imposed only when that type is present.
BoundsReport check_bounds(const IndexSet& d, const ParamSet& lambda);

/// The lower bounds themselves: strict bounds for g (and h).
struct ParameterBounds {
  Rational g;
  Rational h;
};
ParameterBounds parameter_bounds(const IndexSet& d, Family f);

}  // namespace mipoly
