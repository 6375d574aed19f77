#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "latkit/lattice.hpp"
#include "latkit/spectral.hpp"

namespace latkit {

struct WeightedArc {
  std::string from;
  std::string to;
  double p = 0.0;  // weight in (0, 1]
};

/// Parsed form of the weighted JSON document:
///   {"elements": [..], "arcs": [{"from":a,"to":b,"p":w}, ..]}
struct WeightedLatticeDoc {
  std::vector<std::string> elements;
  std::vector<WeightedArc> arcs;
};

WeightedLatticeDoc parse_weighted_doc(std::string_view text);
std::string weighted_doc_to_json(const WeightedLatticeDoc& doc);

/// Carrier set with a graded relation w(x,y) in [0,1]; 0 means no relation.
/// `closed()` records whether max-min closure has been applied (reflexive
/// unit diagonal plus min-transitivity).
class WeightedLattice {
 public:
  WeightedLattice(std::vector<std::string> labels, Matrix w, bool closed);

  static WeightedLattice from_doc(const WeightedLatticeDoc& doc);

  int size() const noexcept { return static_cast<int>(labels_.size()); }
  const std::string& label(int x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  double weight(int x, int y) const { return w_(x, y); }
  const Matrix& weights() const noexcept { return w_; }
  bool closed() const noexcept { return closed_; }

 private:
  std::vector<std::string> labels_;
  Matrix w_;
  bool closed_ = false;
};

/// Least fixpoint of w[x][z] <- max(w[x][z], min(w[x][y], w[y][z])) over
/// off-diagonal entries, then unit diagonal. Idempotent and monotone; all
/// weights are selections of input values, never arithmetic, so closure is
/// exact in floating point.
WeightedLattice maxmin_closure(const WeightedLattice& w);

enum class WeightAxiom {
  reflexivity,       // w[x][x] = 1 (checked on closed relations)
  weight_sum,        // w[x][y] + w[y][x] <= 1 for x != y
  min_transitivity,  // w[x][z] >= min(w[x][y], w[y][z]) for x != z
};

std::string_view weight_axiom_name(WeightAxiom axiom) noexcept;

struct AxiomViolation {
  WeightAxiom axiom;
  std::vector<int> elements;  // the witness pair or triple
  std::string detail;
};

/// Axiom check. strict=true validates the relation as-is; strict=false
/// validates its max-min closure. Violations are data, not errors.
std::vector<AxiomViolation> validate_weighted(const WeightedLattice& w, bool strict);

enum class AdjacencyMode { listed, closed };

/// listed: the relation as given, diagonal forced to zero.
/// closed: the max-min closure, unit diagonal included.
Matrix adjacency_matrix(const WeightedLattice& w, AdjacencyMode mode);

enum class LogBase { e, two };

struct EntropyReport {
  double spectral_radius = 0.0;
  double entropy = 0.0;  // -infinity when spectral_radius = 0
  bool chaotic = false;  // entropy > 0
  LogBase log_base = LogBase::e;
  AdjacencyMode mode = AdjacencyMode::closed;
  long iterations = 0;
  double residual = 0.0;
};

EntropyReport entropy(const WeightedLattice& w, AdjacencyMode mode = AdjacencyMode::closed,
                      LogBase base = LogBase::e, const SpectralOptions& opts = {});

/// Embeds an ordinary lattice: w[x][y] = 1 iff x <= y, already closed.
WeightedLattice lift_usual(const FiniteLattice& lat);

}  // namespace latkit
