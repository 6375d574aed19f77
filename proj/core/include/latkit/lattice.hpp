#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "latkit/errors.hpp"

namespace latkit {

enum class RelationKind { covers, leq };

/// Parsed form of the lattice JSON document:
///   {"elements": [..], "relation": "covers"|"leq", "pairs": [[a,b], ..]}
/// A pair [a,b] means a < b (covers) or a <= b (leq). The order of
/// "elements" defines the index order everywhere downstream.
struct LatticeDoc {
  std::vector<std::string> elements;
  RelationKind relation = RelationKind::covers;
  std::vector<std::pair<std::string, std::string>> pairs;
};

LatticeDoc parse_lattice_doc(std::string_view text);

/// Serializes a doc back to its JSON form (stable key order, 2-space indent).
std::string lattice_doc_to_json(const LatticeDoc& doc);

/// Immutable finite bounded lattice. Construction happens in build_lattice,
/// which validates the order axioms and computes the meet/join tables, the
/// bounds, and the Hasse edges. All queries are pure and thread-safe.
class FiniteLattice {
 public:
  int size() const noexcept { return n_; }
  const std::string& label(int x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// Index of a label; throws E_UNKNOWN_LABEL.
  int index_of(std::string_view label) const;

  bool leq(int x, int y) const {
    return (leq_rows_[x * words_ + (y >> 6)] >> (y & 63)) & 1u;
  }
  int meet(int x, int y) const { return meet_[x * n_ + y]; }
  int join(int x, int y) const { return join_[x * n_ + y]; }
  int bottom() const noexcept { return bottom_; }
  int top() const noexcept { return top_; }

  /// Hasse edges (x, y) with x covered by y, sorted by (x, y).
  const std::vector<std::pair<int, int>>& covers() const noexcept {
    return covers_;
  }

  /// Number of elements below-or-equal / above-or-equal x.
  int down_size(int x) const { return down_size_[x]; }
  int up_size(int x) const { return up_size_[x]; }

 private:
  friend FiniteLattice build_lattice(const LatticeDoc& doc);

  FiniteLattice() = default;

  int n_ = 0;
  int words_ = 0;  // 64-bit words per leq row
  std::vector<std::string> labels_;
  std::vector<std::uint64_t> leq_rows_;  // row x: bitset of y with x <= y
  std::vector<std::int32_t> meet_;
  std::vector<std::int32_t> join_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::int32_t> down_size_;
  std::vector<std::int32_t> up_size_;
  int bottom_ = 0;
  int top_ = 0;
};

/// Validates the document and freezes the lattice.
/// Throws E_EMPTY, E_NOT_ANTISYMMETRIC (with a witness cycle) and
/// E_NOT_LATTICE (with the witness pair lacking a meet or join).
FiniteLattice build_lattice(const LatticeDoc& doc);

/// Elements covering bottom.
std::vector<int> atoms(const FiniteLattice& lat);

/// All y with meet(x,y) = bottom and join(x,y) = top.
std::vector<int> complements(const FiniteLattice& lat, int x);

/// True iff the order is total.
bool is_chain(const FiniteLattice& lat);

/// DOT digraph of the Hasse diagram, bottom-to-top, deterministic order.
std::string export_dot(const FiniteLattice& lat);

/// Canonical covers-form document for the lattice (round-trips through
/// build_lattice to an identical structure).
LatticeDoc to_doc(const FiniteLattice& lat);

/// Resolves labels to indices; throws E_UNKNOWN_LABEL on the first miss.
std::vector<int> resolve_labels(const FiniteLattice& lat,
                                const std::vector<std::string>& labels);

}  // namespace latkit
