#pragma once

#include <string>
#include <vector>

#include "latkit/audit.hpp"
#include "latkit/report.hpp"
#include "latkit/structure.hpp"
#include "latkit/weighted.hpp"

namespace latkit {

/// Stable-key-order JSON forms of the CLI contract. Missing values (entropy
/// of a zero-radius matrix) serialize as null.

std::string analysis_report_json(const AnalysisReport& report);
std::string analysis_report_text(const AnalysisReport& report);

std::string audit_report_json(const AuditReport& report);
std::string audit_reports_json(const std::vector<AuditReport>& reports);

/// violations/matrix are optional sections (pass nullptr to omit); labels
/// for the violation witnesses come from `w`.
std::string entropy_report_json(const EntropyReport& report, const WeightedLattice& w,
                                const std::vector<AxiomViolation>* violations,
                                const Matrix* matrix);
std::string entropy_report_text(const EntropyReport& report, const WeightedLattice& w,
                                const std::vector<AxiomViolation>* violations,
                                const Matrix* matrix);

std::string iso_result_json(const IsomorphismResult& result, const FiniteLattice& a,
                            const FiniteLattice& b);
std::string iso_result_text(const IsomorphismResult& result, const FiniteLattice& a,
                            const FiniteLattice& b);

/// Error object for --json mode: {"error": "E_...", "detail": .., "witness": [..]}.
std::string error_json(const lattice_error& err, bool is_lattice_context);

/// Row-major, one row per line, 12 significant digits.
std::string matrix_text(const Matrix& m);

}  // namespace latkit
