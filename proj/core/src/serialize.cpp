#include "latkit/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace latkit {

namespace {

using ojson = nlohmann::ordered_json;

ojson doc_json(const LatticeDoc& doc) {
  ojson j;
  j["elements"] = doc.elements;
  j["relation"] = doc.relation == RelationKind::covers ? "covers" : "leq";
  auto pairs = ojson::array();
  for (const auto& [a, b] : doc.pairs) pairs.push_back({a, b});
  j["pairs"] = std::move(pairs);
  return j;
}

ojson report_json(const AuditReport& r) {
  ojson j;
  j["proposition"] = std::string(proposition_name(r.proposition));
  j["trials"] = r.trials;
  j["failures"] = r.failures;
  j["verdict"] = r.verdict == AuditVerdict::holds_on_sample ? "holds-on-sample"
                                                            : "counterexample-found";
  j["seed"] = r.seed;
  if (r.witness) {
    ojson w;
    w["lattice"] = doc_json(r.witness->lattice);
    w["elements"] = r.witness->elements;
    j["witness"] = std::move(w);
  }
  return j;
}

ojson number_or_null(double x) {
  if (!std::isfinite(x)) return nullptr;
  return x;
}

ojson violations_json(const std::vector<AxiomViolation>& violations,
                      const WeightedLattice& w) {
  auto arr = ojson::array();
  for (const auto& v : violations) {
    ojson j;
    j["axiom"] = std::string(weight_axiom_name(v.axiom));
    auto elems = ojson::array();
    for (int x : v.elements) elems.push_back(w.label(x));
    j["elements"] = std::move(elems);
    j["detail"] = v.detail;
    arr.push_back(std::move(j));
  }
  return arr;
}

ojson matrix_json(const Matrix& m) {
  auto rows = ojson::array();
  for (int i = 0; i < m.rows(); ++i) {
    auto row = ojson::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string yn(bool b) { return b ? "true" : "false"; }

std::string joined(const std::vector<std::string>& xs) {
  std::string out;
  for (const auto& x : xs) {
    if (!out.empty()) out += ", ";
    out += x;
  }
  return out.empty() ? "(none)" : out;
}

}  // namespace

std::string analysis_report_json(const AnalysisReport& r) {
  ojson j;
  j["is_lattice"] = true;
  j["n"] = r.n;
  j["bottom"] = r.bottom;
  j["top"] = r.top;
  j["atoms"] = r.atoms;
  j["basis"] = ojson{{"exists", r.basis_exists}, {"basons", r.basons},
                     {"dimension", r.dimension}};
  j["orthogonal_basis"] = r.orthogonal_basis;
  j["isolated_basis"] = r.isolated_basis;
  j["isolated_elements"] = r.isolated_elements;
  j["consistent"] = r.consistent;
  j["distributive"] = r.distributive;
  j["complemented"] = r.complemented;
  j["uniquely_complemented"] = r.uniquely_complemented;
  j["boolean"] = r.boolean;
  j["chain"] = r.chain;
  return j.dump(2);
}

std::string analysis_report_text(const AnalysisReport& r) {
  std::ostringstream out;
  out << "elements:               " << r.n << "\n"
      << "bottom / top:           " << r.bottom << " / " << r.top << "\n"
      << "atoms:                  " << joined(r.atoms) << "\n"
      << "basis:                  " << joined(r.basons) << "\n"
      << "dimension:              " << r.dimension << "\n"
      << "orthogonal basis:       " << yn(r.orthogonal_basis) << "\n"
      << "isolated basis:         " << yn(r.isolated_basis) << "\n"
      << "isolated elements:      " << joined(r.isolated_elements) << "\n"
      << "consistent:             " << yn(r.consistent) << "\n"
      << "distributive:           " << yn(r.distributive) << "\n"
      << "complemented:           " << yn(r.complemented) << "\n"
      << "uniquely complemented:  " << yn(r.uniquely_complemented) << "\n"
      << "boolean:                " << yn(r.boolean) << "\n"
      << "chain:                  " << yn(r.chain) << "\n";
  return out.str();
}

std::string audit_report_json(const AuditReport& report) {
  return report_json(report).dump(2);
}

std::string audit_reports_json(const std::vector<AuditReport>& reports) {
  auto arr = ojson::array();
  for (const auto& r : reports) arr.push_back(report_json(r));
  return arr.dump(2);
}

std::string entropy_report_json(const EntropyReport& r, const WeightedLattice& w,
                                const std::vector<AxiomViolation>* violations,
                                const Matrix* matrix) {
  ojson j;
  j["spectral_radius"] = r.spectral_radius;
  j["entropy"] = number_or_null(r.entropy);
  j["chaotic"] = r.chaotic;
  j["log_base"] = r.log_base == LogBase::e ? "e" : "2";
  j["mode"] = r.mode == AdjacencyMode::listed ? "listed" : "closed";
  j["iterations"] = r.iterations;
  j["residual"] = r.residual;
  if (matrix) j["matrix"] = matrix_json(*matrix);
  if (violations) j["violations"] = violations_json(*violations, w);
  return j.dump(2);
}

std::string entropy_report_text(const EntropyReport& r, const WeightedLattice& w,
                                const std::vector<AxiomViolation>* violations,
                                const Matrix* matrix) {
  std::ostringstream out;
  out << "spectral radius:  " << r.spectral_radius << "\n"
      << "entropy:          " << r.entropy << " (log base "
      << (r.log_base == LogBase::e ? "e" : "2") << ")\n"
      << "chaotic:          " << yn(r.chaotic) << "\n"
      << "mode:             " << (r.mode == AdjacencyMode::listed ? "listed" : "closed") << "\n"
      << "iterations:       " << r.iterations << "\n"
      << "residual:         " << r.residual << "\n";
  if (matrix) out << "adjacency matrix:\n" << matrix_text(*matrix);
  if (violations) {
    out << "violations:       " << violations->size() << "\n";
    for (const auto& v : *violations) {
      out << "  " << weight_axiom_name(v.axiom) << " at (";
      for (std::size_t i = 0; i < v.elements.size(); ++i)
        out << (i ? ", " : "") << w.label(v.elements[i]);
      out << "): " << v.detail << "\n";
    }
  }
  return out.str();
}

std::string iso_result_json(const IsomorphismResult& result, const FiniteLattice& a,
                            const FiniteLattice& b) {
  ojson j;
  j["found"] = result.found;
  if (result.found) {
    ojson mapping = ojson::object();
    for (int x = 0; x < a.size(); ++x) mapping[a.label(x)] = b.label(result.mapping[x]);
    j["mapping"] = std::move(mapping);
  }
  return j.dump(2);
}

std::string iso_result_text(const IsomorphismResult& result, const FiniteLattice& a,
                            const FiniteLattice& b) {
  if (!result.found) return "not isomorphic\n";
  std::ostringstream out;
  for (int x = 0; x < a.size(); ++x)
    out << a.label(x) << " -> " << b.label(result.mapping[x]) << "\n";
  return out.str();
}

std::string error_json(const lattice_error& err, bool is_lattice_context) {
  ojson j;
  if (is_lattice_context) j["is_lattice"] = false;
  j["error"] = std::string(errc_name(err.code()));
  j["detail"] = err.what();
  j["witness"] = err.witness();
  return j.dump(2);
}

std::string matrix_text(const Matrix& m) {
  std::ostringstream out;
  char buf[64];
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      std::snprintf(buf, sizeof buf, "%.12g", m(i, j));
      out << (j ? " " : "") << buf;
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace latkit
