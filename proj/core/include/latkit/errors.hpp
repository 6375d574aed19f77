#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace latkit {

/// Stable error codes surfaced by the library. The CLI maps these to exit
/// codes; tests match on them.
enum class errc {
  parse,              // E_PARSE: malformed input document
  dup_label,          // E_DUP_LABEL: element declared twice
  unknown_label,      // E_UNKNOWN_LABEL: pair/arc references an undeclared label
  empty,              // E_EMPTY: zero elements
  not_antisymmetric,  // E_NOT_ANTISYMMETRIC: order relation has a cycle
  not_lattice,        // E_NOT_LATTICE: some pair lacks a unique meet or join
  weight_range,       // E_WEIGHT_RANGE: arc weight outside (0,1]
  too_large,          // E_TOO_LARGE: input exceeds a documented size bound
  param_range,        // E_PARAM_RANGE: parameter outside its documented range
  unknown_name,       // E_UNKNOWN_NAME: not a catalog lattice name
  not_square,         // E_NOT_SQUARE: matrix is not square
  negative_entry,     // E_NEGATIVE_ENTRY: matrix entry negative or non-finite
  no_convergence,     // E_NO_CONVERGENCE: iteration cap hit above tolerance
};

std::string_view errc_name(errc code) noexcept;

/// Exception carrying an error code plus an optional witness: the element
/// labels involved (a cycle, the pair without a join, the offending arc).
class lattice_error : public std::runtime_error {
 public:
  lattice_error(errc code, const std::string& message,
                std::vector<std::string> witness = {})
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code),
        witness_(std::move(witness)) {}

  errc code() const noexcept { return code_; }
  const std::vector<std::string>& witness() const noexcept { return witness_; }

 private:
  errc code_;
  std::vector<std::string> witness_;
};

}  // namespace latkit
