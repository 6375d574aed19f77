#pragma once

#include <vector>

#include "latkit/lattice.hpp"

namespace latkit {

struct ComplementationProfile {
  bool complemented = false;          // every element has >= 1 complement
  bool uniquely_complemented = false; // every element has exactly 1
};

/// Distributive law x*(y+z) = (x*y)+(x*z) over all triples.
bool is_distributive(const FiniteLattice& lat);

ComplementationProfile complementation_profile(const FiniteLattice& lat);

/// Complemented and distributive; the finite case of a Boolean algebra.
bool is_boolean(const FiniteLattice& lat);

/// Elements x outside {bottom, top} such that every y outside
/// {bottom, top, x} is a complement of x. Holds vacuously when no such y
/// exists (the middle of a 3-chain is isolated).
std::vector<int> isolated_elements(const FiniteLattice& lat);

/// No isolated elements.
bool is_consistent(const FiniteLattice& lat);

struct IsomorphismResult {
  bool found = false;
  std::vector<int> mapping;  // mapping[x in L1] = image in L2; empty if !found
};

/// Backtracking search for an order isomorphism, pruned by per-element
/// invariants (down/up-set sizes, Hasse degrees, height and depth).
/// Unequal sizes report not-found immediately; equal sizes above the bound
/// throw E_TOO_LARGE.
IsomorphismResult find_isomorphism(const FiniteLattice& a,
                                   const FiniteLattice& b,
                                   int size_bound = 64);

}  // namespace latkit
