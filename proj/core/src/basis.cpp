#include "latkit/basis.hpp"

#include <algorithm>

#include "latkit/structure.hpp"

namespace latkit {

BasisResult basis(const FiniteLattice& lat) {
  BasisResult out;
  // Minimal elements of L \ {bottom}: exactly the covers of bottom.
  out.basons = atoms(lat);
  out.dimension = static_cast<int>(out.basons.size());
  out.exists = true;
  return out;
}

int dimension(const FiniteLattice& lat) { return basis(lat).dimension; }

bool is_orthogonal_basis(const FiniteLattice& lat) {
  const auto b = basis(lat).basons;
  if (b.empty()) return false;
  for (int x : b) {
    const auto comp = complements(lat, x);
    bool has = false;
    for (int y : comp)
      if (std::binary_search(b.begin(), b.end(), y)) {
        has = true;
        break;
      }
    if (!has) return false;
  }
  return true;
}

bool is_isolated_basis(const FiniteLattice& lat) {
  const auto b = basis(lat).basons;
  if (b.empty()) return false;
  const auto iso = isolated_elements(lat);
  for (int x : b)
    if (!std::binary_search(iso.begin(), iso.end(), x)) return false;
  return true;
}

IndependenceVerdict is_independent(const FiniteLattice& lat,
                                   const std::vector<int>& subset) {
  std::vector<int> members = subset;
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());

  for (int x : members) {
    // If any S in subset\{x} joins to x, then so does the full set of
    // members below x; check that and shrink it to a minimal witness.
    std::vector<int> below;
    for (int y : members)
      if (y != x && lat.leq(y, x)) below.push_back(y);
    if (below.size() < 2) continue;
    auto join_of = [&](const std::vector<int>& s) {
      int acc = s.front();
      for (std::size_t i = 1; i < s.size(); ++i) acc = lat.join(acc, s[i]);
      return acc;
    };
    if (join_of(below) != x) continue;

    for (std::size_t i = 0; i < below.size() && below.size() > 2;) {
      std::vector<int> trimmed = below;
      trimmed.erase(trimmed.begin() + static_cast<long>(i));
      if (join_of(trimmed) == x) below = std::move(trimmed);
      else ++i;
    }
    return {false, IndependenceWitness{x, below}};
  }
  return {true, std::nullopt};
}

IndependenceVerdict is_independent(const FiniteLattice& lat,
                                   const std::vector<std::string>& labels) {
  return is_independent(lat, resolve_labels(lat, labels));
}

}  // namespace latkit
