#include "latkit/report.hpp"

#include "latkit/basis.hpp"
#include "latkit/structure.hpp"

namespace latkit {

namespace {

std::vector<std::string> labels_of(const FiniteLattice& lat, const std::vector<int>& xs) {
  std::vector<std::string> out;
  for (int x : xs) out.push_back(lat.label(x));
  return out;
}

}  // namespace

AnalysisReport analyze(const FiniteLattice& lat) {
  AnalysisReport r;
  r.n = lat.size();
  r.bottom = lat.label(lat.bottom());
  r.top = lat.label(lat.top());
  r.atoms = labels_of(lat, atoms(lat));
  const auto b = basis(lat);
  r.basis_exists = b.exists;
  r.basons = labels_of(lat, b.basons);
  r.dimension = b.dimension;
  r.orthogonal_basis = is_orthogonal_basis(lat);
  r.isolated_basis = is_isolated_basis(lat);
  r.isolated_elements = labels_of(lat, isolated_elements(lat));
  r.consistent = is_consistent(lat);
  const auto profile = complementation_profile(lat);
  r.complemented = profile.complemented;
  r.uniquely_complemented = profile.uniquely_complemented;
  r.distributive = is_distributive(lat);
  r.boolean = is_boolean(lat);
  r.chain = is_chain(lat);
  return r;
}

}  // namespace latkit
