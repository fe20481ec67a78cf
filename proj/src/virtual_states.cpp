#include <mipoly/error.hpp>
#include <mipoly/virtual_states.hpp>

#include <algorithm>
#include <sstream>

namespace mipoly {

std::string to_string(VirtualType t) { return t == VirtualType::I ? "I" : "II"; }

IndexSet::IndexSet(std::vector<int> type_I, std::vector<int> type_II)
    : type_I_(std::move(type_I)), type_II_(std::move(type_II)) {
  for (auto* list : {&type_I_, &type_II_}) {
    std::sort(list->begin(), list->end());
    if (std::adjacent_find(list->begin(), list->end()) != list->end())
      throw InvalidInput("index set has a duplicate entry");
    if (!list->empty() && list->front() < 1) throw InvalidInput("index set entries must be >= 1");
  }
}

std::string IndexSet::str() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int d : type_I_) {
    os << (first ? "" : ",") << d << "^I";
    first = false;
  }
  for (int d : type_II_) {
    os << (first ? "" : ",") << d << "^II";
    first = false;
  }
  os << "}";
  return os.str();
}

nlohmann::json to_json(const IndexSet& d) { return {{"I", d.type_I()}, {"II", d.type_II()}}; }

IndexSet index_set_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InvalidInput("index set JSON must be an object");
  auto list = [&](const char* key) {
    std::vector<int> out;
    if (!j.contains(key)) return out;
    const auto& arr = j.at(key);
    if (!arr.is_array()) throw InvalidInput(std::string("index set field ") + key + " must be an array");
    for (const auto& e : arr) {
      if (!e.is_number_integer()) throw InvalidInput("index set entries must be integers");
      out.push_back(e.get<int>());
    }
    return out;
  };
  return IndexSet(list("I"), list("II"));
}

std::optional<int> max_virtual_degree(VirtualType t, const ParamSet& lambda) {
  if (!lambda.is_jacobi() && t == VirtualType::I) return std::nullopt;
  const Rational& p = (lambda.is_jacobi() && t == VirtualType::I) ? lambda.h : lambda.g;
  return static_cast<int>(floor_strict(p - half()).get_si());
}

Poly xi_unchecked(const VirtualLabel& label, const ParamSet& lambda) {
  if (label.v < 0) throw InvalidInput("virtual state degree must be nonnegative");
  if (!lambda.is_jacobi()) {
    if (label.type == VirtualType::I) return classical_P(label.v, lambda).reflected();
    return classical_P(label.v, twist(VirtualType::II, lambda));
  }
  return classical_P(label.v, twist(label.type, lambda));
}

Poly xi(const VirtualLabel& label, const ParamSet& lambda) {
  if (auto vmax = max_virtual_degree(label.type, lambda); label.v < 0 || (vmax && label.v > *vmax))
    throw InvalidInput("virtual state does not exist at these parameters: type " + to_string(label.type) +
                       ", v=" + std::to_string(label.v) + ", " + lambda.str());
  return xi_unchecked(label, lambda);
}

Rational virtual_energy(const VirtualLabel& label, const ParamSet& lambda) {
  const Rational v(label.v);
  Rational e;
  if (!lambda.is_jacobi()) {
    e = label.type == VirtualType::I ? Rational(-4 * (lambda.g + v + half())) : Rational(-4 * (lambda.g - v - half()));
  } else if (label.type == VirtualType::I) {
    e = -4 * (lambda.g + v + half()) * (lambda.h - v - half());
  } else {
    e = -4 * (lambda.g - v - half()) * (lambda.h + v + half());
  }
  if (e >= 0)
    throw InvalidInput("not a virtual state: energy " + to_string(e) + " is not negative at " + lambda.str());
  return e;
}

ParamSet twist(VirtualType t, const ParamSet& lambda) {
  ParamSet out = lambda;
  if (!lambda.is_jacobi()) {
    if (t == VirtualType::I) throw InvalidInput("L has no type-I twist in this table");
    out.g = 1 - lambda.g;
    return out;
  }
  if (t == VirtualType::I)
    out.h = 1 - lambda.h;
  else
    out.g = 1 - lambda.g;
  return out;
}

ParameterBounds parameter_bounds(const IndexSet& d, Family f) {
  ParameterBounds b{half(), half()};
  auto raise = [](Rational& target, const Rational& value) {
    if (value > target) target = value;
  };
  if (f == Family::L) {
    if (d.N() > 0) raise(b.g, Rational(d.N()) + Rational(3, 2));
    for (int v : d.type_II()) raise(b.g, Rational(v) + half());
    return b;
  }
  if (d.N() > 0) raise(b.g, Rational(d.N() + 2));
  for (int v : d.type_II()) raise(b.g, Rational(v) + half());
  if (d.M() > 0) raise(b.h, Rational(d.M() + 2));
  for (int v : d.type_I()) raise(b.h, Rational(v) + half());
  return b;
}

BoundsReport check_bounds(const IndexSet& d, const ParamSet& lambda) {
  BoundsReport report;
  const ParameterBounds b = parameter_bounds(d, lambda.family);
  if (!(lambda.g > b.g)) {
    report.ok = false;
    report.violations.push_back("g > " + to_string(b.g) + " fails (g = " + to_string(lambda.g) + ")");
  }
  if (lambda.is_jacobi() && !(lambda.h > b.h)) {
    report.ok = false;
    report.violations.push_back("h > " + to_string(b.h) + " fails (h = " + to_string(lambda.h) + ")");
  }
  return report;
}

}  // namespace mipoly
