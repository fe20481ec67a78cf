#pragma once

#include <mipoly/builder.hpp>

#include <json.hpp>

#include <iosfwd>

namespace mipoly {

/// {"family":"L"|"J", "g":"p/q", "h":"p/q", "D":{"I":[...],"II":[...]}, "n":int}
struct FamilyDescriptor {
  ParamSet params;
  IndexSet deletion;
  int n = 0;
};

/// Throws InvalidInput on a malformed descriptor.
FamilyDescriptor descriptor_from_json(const nlohmann::json& j);
nlohmann::json to_json(const FamilyDescriptor& d);

nlohmann::json to_json(const ParamSet& p);

/// Exact coefficients of Xi_D and P_{D,n} with ell and lambda^{[M,N]}.
nlohmann::json build_output(const FamilyDescriptor& d, const BuildOptions& options = {});

/// CSV "eta,Xi,P" sampled at `samples` increasing points of the base
/// domain (truncated to (0, eta_max) for L).
void write_eta_csv(std::ostream& os, const MultiIndexedFamily& fam, int n, int samples = 401, double eta_max = 40.0);

}  // namespace mipoly
