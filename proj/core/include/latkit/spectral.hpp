#pragma once

#include <cstdint>
#include <vector>

#include "latkit/errors.hpp"

namespace latkit {

/// Dense row-major matrix of doubles, value semantics.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, fill) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  double& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  double operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const std::vector<double>& data() const noexcept { return data_; }

  bool operator==(const Matrix&) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

struct SpectralOptions {
  double tol = 1e-10;                // certified absolute error bound on rho
  long max_iterations = 1'000'000;   // per irreducible block
};

struct SpectralResult {
  double rho = 0.0;       // spectral radius (Perron root)
  long iterations = 0;    // total power-iteration steps across blocks
  double residual = 0.0;  // ||(A+I)v - (1+rho)v||_inf of the winning block
};

/// Spectral radius of a nonnegative matrix.
///
/// The matrix is first split into strongly connected components of its
/// sparsity digraph; rho(A) is the maximum of the blocks' Perron roots.
/// Trivial blocks are exact. Each nontrivial (irreducible) block runs power
/// iteration on A_block + I from the all-ones vector; adding I makes the
/// block primitive, so the iteration converges geometrically, and the
/// Collatz–Wielandt ratios give a rigorous bracket around 1 + rho. The
/// iteration exits once the bracket half-width is below tol, so the returned
/// rho carries a certified absolute error bound.
///
/// Throws E_NOT_SQUARE, E_NEGATIVE_ENTRY, E_PARAM_RANGE (tol <= 0) and
/// E_NO_CONVERGENCE (cap hit before the bracket closed).
SpectralResult spectral_radius(const Matrix& a, const SpectralOptions& opts = {});

}  // namespace latkit
