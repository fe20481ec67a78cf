#include <mipoly/descriptor.hpp>
#include <mipoly/error.hpp>

#include <ostream>

namespace mipoly {
namespace {

Rational rational_field(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) throw InvalidInput(std::string("descriptor is missing \"") + key + "\"");
  const auto& v = j.at(key);
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw InvalidInput(std::string("descriptor field \"") + key + "\" must be a rational string or an integer");
}

}  // namespace

FamilyDescriptor descriptor_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InvalidInput("descriptor must be a JSON object");
  if (!j.contains("family") || !j.at("family").is_string()) throw InvalidInput("descriptor needs \"family\"");
  const std::string fam = j.at("family").get<std::string>();
  FamilyDescriptor d;
  if (fam == "L")
    d.params = ParamSet::laguerre(rational_field(j, "g"));
  else if (fam == "J")
    d.params = ParamSet::jacobi(rational_field(j, "g"), rational_field(j, "h"));
  else
    throw InvalidInput("family must be \"L\" or \"J\", got \"" + fam + "\"");
  if (j.contains("D")) d.deletion = index_set_from_json(j.at("D"));
  if (j.contains("n")) {
    if (!j.at("n").is_number_integer() || j.at("n").get<long>() < 0)
      throw InvalidInput("descriptor field \"n\" must be a nonnegative integer");
    d.n = j.at("n").get<int>();
  }
  return d;
}

nlohmann::json to_json(const ParamSet& p) {
  nlohmann::json j = {{"g", to_string(p.g)}};
  if (p.is_jacobi()) j["h"] = to_string(p.h);
  return j;
}

nlohmann::json to_json(const FamilyDescriptor& d) {
  nlohmann::json j = to_json(d.params);
  j["family"] = to_string(d.params.family);
  j["D"] = to_json(d.deletion);
  j["n"] = d.n;
  return j;
}

nlohmann::json build_output(const FamilyDescriptor& d, const BuildOptions& options) {
  const MultiIndexedFamily fam = build_family(d.params, d.deletion, options);
  const Poly P = build_P(fam, d.n);
  nlohmann::json j = to_json(d);
  j["ell"] = fam.ell;
  j["shifted"] = to_json(fam.shifted);
  j["Xi"] = to_json(fam.xi);
  j["P"] = to_json(P);
  j["degree"] = {{"Xi", fam.xi.degree()}, {"P", P.degree()}};
  return j;
}

void write_eta_csv(std::ostream& os, const MultiIndexedFamily& fam, int n, int samples, double eta_max) {
  if (samples < 2) throw InvalidInput("need at least two samples");
  const Poly P = build_P(fam, n);
  const bool jacobi = fam.params.is_jacobi();
  const double lo = jacobi ? -1.0 : 0.0;
  const double hi = jacobi ? 1.0 : eta_max;
  os << "eta,Xi,P\n";
  os.precision(17);
  for (int i = 1; i <= samples; ++i) {
    const double eta = lo + (hi - lo) * i / (samples + 1);
    os << eta << ',' << fam.xi.eval_double(eta) << ',' << P.eval_double(eta) << '\n';
  }
}

}  // namespace mipoly
