#include "latkit/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace latkit {

namespace {

// Iterative Tarjan over the sparsity digraph (edge i->j iff a(i,j) > 0).
// Returns components in discovery order; order does not matter to the caller.
std::vector<std::vector<int>> strongly_connected_components(const Matrix& a) {
  const int n = a.rows();
  std::vector<int> index(n, -1), low(n, 0), stack;
  std::vector<char> on_stack(n, 0);
  std::vector<std::vector<int>> comps;
  int counter = 0;

  struct Frame {
    int v;
    int next;
  };
  for (int root = 0; root < n; ++root) {
    if (index[root] >= 0) continue;
    std::vector<Frame> frames{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!frames.empty()) {
      auto& [v, next] = frames.back();
      if (next < n) {
        const int w = next++;
        if (a(v, w) <= 0.0) continue;
        if (index[w] < 0) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
      } else {
        if (low[v] == index[v]) {
          std::vector<int> comp;
          int w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            comp.push_back(w);
          } while (w != v);
          std::sort(comp.begin(), comp.end());
          comps.push_back(std::move(comp));
        }
        const int child = v;
        frames.pop_back();
        if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[child]);
      }
    }
  }
  return comps;
}

struct BlockResult {
  double rho;
  long iterations;
  double residual;
};

// Power iteration on M = block + I from the all-ones vector. For an
// irreducible block M is primitive, so the Collatz–Wielandt bracket
// [min_i (Mv)_i/v_i, max_i (Mv)_i/v_i] closes geometrically around 1 + rho.
BlockResult iterate_block(const Matrix& a, const std::vector<int>& comp,
                          const SpectralOptions& opts) {
  const int m = static_cast<int>(comp.size());
  std::vector<double> block(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) block[i * m + j] = a(comp[i], comp[j]);

  std::vector<double> v(m, 1.0), u(m);
  long it = 0;
  while (it < opts.max_iterations) {
    ++it;
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0, umax = 0.0;
    for (int i = 0; i < m; ++i) {
      double s = v[i];  // the implicit +I term
      const double* row = &block[static_cast<std::size_t>(i) * m];
      for (int j = 0; j < m; ++j) s += row[j] * v[j];
      u[i] = s;
      const double ratio = s / v[i];
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
      umax = std::max(umax, s);
    }
    const double estimate = 0.5 * (lo + hi);
    if (hi - lo <= 2.0 * opts.tol) {
      // residual reported against v scaled to ||v||_inf = 1
      double vmax = 0.0;
      for (double x : v) vmax = std::max(vmax, x);
      double residual = 0.0;
      for (int i = 0; i < m; ++i)
        residual = std::max(residual, std::abs(u[i] - estimate * v[i]) / vmax);
      return {std::max(0.0, estimate - 1.0), it, residual};
    }
    for (int i = 0; i < m; ++i) v[i] = u[i] / umax;
  }
  throw lattice_error(errc::no_convergence,
                      "power iteration hit the cap before the error bracket closed");
}

}  // namespace

SpectralResult spectral_radius(const Matrix& a, const SpectralOptions& opts) {
  if (a.rows() != a.cols())
    throw lattice_error(errc::not_square, "matrix must be square");
  if (opts.tol <= 0.0)
    throw lattice_error(errc::param_range, "tolerance must be positive");
  for (double x : a.data())
    if (!(x >= 0.0) || !std::isfinite(x))
      throw lattice_error(errc::negative_entry, "entries must be finite and nonnegative");

  SpectralResult out;
  if (a.rows() == 0) return out;

  for (const auto& comp : strongly_connected_components(a)) {
    if (comp.size() == 1) {
      const double d = a(comp[0], comp[0]);
      if (d > out.rho) {
        out.rho = d;
        out.residual = 0.0;
      }
      continue;
    }
    const auto r = iterate_block(a, comp, opts);
    out.iterations += r.iterations;
    if (r.rho > out.rho) {
      out.rho = r.rho;
      out.residual = r.residual;
    }
  }
  return out;
}

}  // namespace latkit
