#pragma once

#include <string>
#include <vector>

#include "latkit/lattice.hpp"

namespace latkit {

/// Aggregated structural analysis; every field is reproducible by the
/// corresponding library operation on the same lattice.
struct AnalysisReport {
  int n = 0;
  std::string bottom;
  std::string top;
  std::vector<std::string> atoms;
  bool basis_exists = true;
  std::vector<std::string> basons;
  int dimension = 0;
  bool orthogonal_basis = false;
  bool isolated_basis = false;
  std::vector<std::string> isolated_elements;
  bool consistent = false;
  bool distributive = false;
  bool complemented = false;
  bool uniquely_complemented = false;
  bool boolean = false;
  bool chain = false;
};

AnalysisReport analyze(const FiniteLattice& lat);

}  // namespace latkit
