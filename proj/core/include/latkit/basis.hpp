#pragma once

#include <optional>
#include <vector>

#include "latkit/lattice.hpp"

namespace latkit {

/// The unique basis of a finite bounded lattice: the minimal elements of
/// L \ {bottom}, i.e. the atoms. Empty (dimension 0) for the one-element
/// lattice.
struct BasisResult {
  bool exists = true;
  std::vector<int> basons;  // sorted element indices, an antichain
  int dimension = 0;        // |basons|
};

BasisResult basis(const FiniteLattice& lat);
int dimension(const FiniteLattice& lat);

/// True iff every bason has at least one complement that is also a bason.
/// An empty basis is not orthogonal.
bool is_orthogonal_basis(const FiniteLattice& lat);

/// True iff every bason is an isolated element. An empty basis is not
/// isolated.
bool is_isolated_basis(const FiniteLattice& lat);

struct IndependenceWitness {
  int element;               // x
  std::vector<int> joiners;  // S with |S| >= 2, x not in S, join(S) = x
};

struct IndependenceVerdict {
  bool independent = true;
  std::optional<IndependenceWitness> witness;  // present iff dependent
};

/// A subset is dependent iff some member equals the join of two or more of
/// the other members.
IndependenceVerdict is_independent(const FiniteLattice& lat,
                                   const std::vector<int>& subset);

/// Label-level convenience; throws E_UNKNOWN_LABEL.
IndependenceVerdict is_independent(const FiniteLattice& lat,
                                   const std::vector<std::string>& labels);

}  // namespace latkit
