#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "latkit/lattice.hpp"

namespace latkit {

/// The numbered claims the audit harness checks empirically.
enum class PropositionId {
  P2_3,   // basis, if it exists, is unique
  P2_4,   // chains have dimension 1
  P2_7,   // isomorphisms map basis onto basis
  P2_8,   // isomorphic lattices have equal dimension
  P2_10,  // all basons are atoms
  P2_11,  // in a Boolean algebra all atoms are basons
  P2_12,  // Boolean iff every nonzero element is a join of basons
  P2_16,  // unique complements + orthogonal basis => even dimension
  P2_21,  // among Boolean algebras, inconsistent iff dimension 2
  P2_22,  // among Boolean algebras, orthogonal basis iff dimension 2
  P2_24,  // the basis is an independent set
  P2_25,  // sets containing an isolated element are independent
  P4_5,   // usual lattices are not chaotic
};

std::vector<PropositionId> all_propositions();
std::string_view proposition_name(PropositionId id) noexcept;
std::optional<PropositionId> parse_proposition(std::string_view name);

/// Canonical catalog lattices with deterministic labels:
///   chain k>=1; bool 0<=k<=10 (powerset of k generators);
///   m k>=1 (bottom, top, k incomparable middles); n5 (pentagon, k ignored).
/// Throws E_UNKNOWN_NAME / E_PARAM_RANGE.
FiniteLattice named_lattice(std::string_view name, int k);

/// Catalog enumeration (name, parameter) of every member with at most max_n
/// elements, in the fixed audit order: chains, bools, m-diamonds, n5.
std::vector<std::pair<std::string, int>> catalog_within(int max_n);

/// Deterministic random lattice: n_generators uniform subsets of
/// {1..m_universe} closed under intersection, plus the empty and full sets,
/// ordered by inclusion. Always a lattice; identical seeds give identical
/// results. Throws E_PARAM_RANGE (m_universe > 16, n_generators > 12).
FiniteLattice random_lattice(int n_generators, int m_universe, std::uint64_t seed);

/// Exhaustive oracle: every subset of L \ {bottom} that is an antichain and
/// covers L \ {bottom} from below, in ascending bitmask order.
/// Throws E_TOO_LARGE above 20 elements.
std::vector<std::vector<int>> brute_force_bases(const FiniteLattice& lat);

enum class AuditVerdict { holds_on_sample, counterexample_found };

struct AuditWitness {
  LatticeDoc lattice;                 // the offending lattice, covers form
  std::vector<std::string> elements;  // offending elements/subset, may be empty
};

struct AuditReport {
  PropositionId proposition;
  long trials = 0;    // lattices examined: catalog members + random trials
  long failures = 0;  // lattices on which the claim failed
  AuditVerdict verdict = AuditVerdict::holds_on_sample;
  std::optional<AuditWitness> witness;  // first failure, present iff failures > 0
  std::uint64_t seed = 0;
};

struct AuditOptions {
  long trials = 100;
  int max_n = 10;          // catalog/random size bound, at most 20
  std::uint64_t seed = 42;
  int threads = 1;         // random trials may run in parallel
};

/// Runs one checker over the catalog (within max_n) and `trials` random
/// lattices. Per-trial sub-seed is seed XOR trial-index, so reruns and
/// parallel runs agree bit-for-bit.
AuditReport audit_proposition(PropositionId id, const AuditOptions& opts);

/// Every proposition with the same parameters, in enum order.
std::vector<AuditReport> audit_all(const AuditOptions& opts);

}  // namespace latkit
