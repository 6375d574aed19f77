#include "latkit/weighted.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>

#include <json.hpp>

namespace latkit {

namespace {

using json = nlohmann::json;

constexpr double kSumSlack = 1e-12;  // tolerance for the p + q <= 1 check

}  // namespace

WeightedLatticeDoc parse_weighted_doc(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw lattice_error(errc::parse, e.what());
  }
  if (!j.is_object()) throw lattice_error(errc::parse, "document must be a JSON object");
  if (!j.contains("elements") || !j["elements"].is_array())
    throw lattice_error(errc::parse, "missing \"elements\" array");
  if (!j.contains("arcs") || !j["arcs"].is_array())
    throw lattice_error(errc::parse, "missing \"arcs\" array");

  WeightedLatticeDoc doc;
  std::map<std::string, int> index;
  for (const auto& e : j["elements"]) {
    if (!e.is_string()) throw lattice_error(errc::parse, "elements must be strings");
    auto label = e.get<std::string>();
    if (!index.emplace(label, static_cast<int>(doc.elements.size())).second)
      throw lattice_error(errc::dup_label, "duplicate element label", {label});
    doc.elements.push_back(std::move(label));
  }

  std::vector<std::pair<int, int>> seen;
  for (const auto& a : j["arcs"]) {
    if (!a.is_object() || !a.contains("from") || !a.contains("to") || !a.contains("p") ||
        !a["from"].is_string() || !a["to"].is_string() || !a["p"].is_number())
      throw lattice_error(errc::parse, "each arc must be {\"from\", \"to\", \"p\"}");
    WeightedArc arc{a["from"].get<std::string>(), a["to"].get<std::string>(),
                    a["p"].get<double>()};
    auto maybe = [&](const std::string& l) {
      auto it = index.find(l);
      if (it == index.end())
        throw lattice_error(errc::unknown_label, "arc references undeclared label", {l});
      return it->second;
    };
    const int from = maybe(arc.from), to = maybe(arc.to);
    if (from == to)
      throw lattice_error(errc::parse, "self-arc not allowed; reflexivity is implicit",
                          {arc.from});
    if (!(arc.p > 0.0) || !(arc.p <= 1.0) || !std::isfinite(arc.p))
      throw lattice_error(errc::weight_range, "arc weight must lie in (0, 1]",
                          {arc.from, arc.to});
    std::pair<int, int> key{from, to};
    if (std::find(seen.begin(), seen.end(), key) != seen.end())
      throw lattice_error(errc::parse, "duplicate arc", {arc.from, arc.to});
    seen.push_back(key);
    doc.arcs.push_back(std::move(arc));
  }
  return doc;
}

std::string weighted_doc_to_json(const WeightedLatticeDoc& doc) {
  nlohmann::ordered_json j;
  j["elements"] = doc.elements;
  auto arcs = nlohmann::ordered_json::array();
  for (const auto& a : doc.arcs)
    arcs.push_back({{"from", a.from}, {"to", a.to}, {"p", a.p}});
  j["arcs"] = std::move(arcs);
  return j.dump(2);
}

WeightedLattice::WeightedLattice(std::vector<std::string> labels, Matrix w, bool closed)
    : labels_(std::move(labels)), w_(std::move(w)), closed_(closed) {
  const int n = static_cast<int>(labels_.size());
  if (w_.rows() != n || w_.cols() != n)
    throw lattice_error(errc::not_square, "weight matrix does not match element count");
  for (double x : w_.data())
    if (!(x >= 0.0) || !(x <= 1.0))
      throw lattice_error(errc::weight_range, "weights must lie in [0, 1]");
}

WeightedLattice WeightedLattice::from_doc(const WeightedLatticeDoc& doc) {
  const int n = static_cast<int>(doc.elements.size());
  std::map<std::string, int> index;
  for (int i = 0; i < n; ++i) index.emplace(doc.elements[i], i);
  Matrix w(n, n);
  for (const auto& a : doc.arcs) w(index.at(a.from), index.at(a.to)) = a.p;
  return WeightedLattice(doc.elements, std::move(w), false);
}

WeightedLattice maxmin_closure(const WeightedLattice& in) {
  const int n = in.size();
  Matrix w = in.weights();
  for (int i = 0; i < n; ++i) w(i, i) = 0.0;  // diagonal takes no part in path weights
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      const double wik = w(i, k);
      if (wik <= 0.0) continue;
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        const double through = std::min(wik, w(k, j));
        if (through > w(i, j)) w(i, j) = through;
      }
    }
  for (int i = 0; i < n; ++i) w(i, i) = 1.0;
  return WeightedLattice(in.labels(), std::move(w), true);
}

std::string_view weight_axiom_name(WeightAxiom axiom) noexcept {
  switch (axiom) {
    case WeightAxiom::reflexivity: return "reflexivity";
    case WeightAxiom::weight_sum: return "weight-sum";
    case WeightAxiom::min_transitivity: return "min-transitivity";
  }
  return "unknown";
}

std::vector<AxiomViolation> validate_weighted(const WeightedLattice& in, bool strict) {
  const WeightedLattice w = strict ? in : maxmin_closure(in);
  const int n = w.size();
  std::vector<AxiomViolation> out;
  auto fmt = [](double x) {
    std::ostringstream s;
    s << x;
    return s.str();
  };

  if (w.closed()) {
    for (int x = 0; x < n; ++x)
      if (w.weight(x, x) != 1.0)
        out.push_back({WeightAxiom::reflexivity, {x},
                       "w(x,x) = " + fmt(w.weight(x, x)) + ", expected 1"});
  }
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      const double sum = w.weight(x, y) + w.weight(y, x);
      if (sum > 1.0 + kSumSlack)
        out.push_back({WeightAxiom::weight_sum, {x, y},
                       fmt(w.weight(x, y)) + " + " + fmt(w.weight(y, x)) + " > 1"});
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (x == z || y == x || y == z) continue;
        const double bound = std::min(w.weight(x, y), w.weight(y, z));
        if (w.weight(x, z) < bound)
          out.push_back({WeightAxiom::min_transitivity, {x, y, z},
                         "w(x,z) = " + fmt(w.weight(x, z)) + " < min(" +
                             fmt(w.weight(x, y)) + ", " + fmt(w.weight(y, z)) + ")"});
      }
  return out;
}

Matrix adjacency_matrix(const WeightedLattice& w, AdjacencyMode mode) {
  if (mode == AdjacencyMode::listed) {
    Matrix a = w.weights();
    for (int i = 0; i < a.rows(); ++i) a(i, i) = 0.0;
    return a;
  }
  return maxmin_closure(w).weights();
}

EntropyReport entropy(const WeightedLattice& w, AdjacencyMode mode, LogBase base,
                      const SpectralOptions& opts) {
  const Matrix a = adjacency_matrix(w, mode);
  const SpectralResult s = spectral_radius(a, opts);
  EntropyReport report;
  report.spectral_radius = s.rho;
  report.iterations = s.iterations;
  report.residual = s.residual;
  report.mode = mode;
  report.log_base = base;
  if (s.rho > 0.0)
    report.entropy = base == LogBase::e ? std::log(s.rho) : std::log2(s.rho);
  else
    report.entropy = -std::numeric_limits<double>::infinity();
  report.chaotic = report.entropy > 0.0;
  return report;
}

WeightedLattice lift_usual(const FiniteLattice& lat) {
  const int n = lat.size();
  Matrix w(n, n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) w(x, y) = lat.leq(x, y) ? 1.0 : 0.0;
  return WeightedLattice(lat.labels(), std::move(w), true);
}

}  // namespace latkit
