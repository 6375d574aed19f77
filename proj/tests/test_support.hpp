#pragma once

// Shared helpers for the test suites: fixture loading, independent numeric
// oracles, deterministic generators, and a tiny DOT grammar checker. Nothing
// here calls into the code paths it is used to verify.

#include <cctype>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "latkit/audit.hpp"
#include "latkit/lattice.hpp"
#include "latkit/spectral.hpp"

namespace testsupport {

inline std::string fixture_path(const std::string& name) {
#ifdef LATKIT_FIXTURE_DIR
  return std::string(LATKIT_FIXTURE_DIR) + "/" + name;
#else
  return "tests/fixtures/" + name;
#endif
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline latkit::FiniteLattice load_fixture(const std::string& name) {
  return latkit::build_lattice(latkit::parse_lattice_doc(slurp(fixture_path(name))));
}

// ---------------------------------------------------------------------------
// Spectral radius oracle: Gelfand limit via 60 repeated squarings of the
// 1-norm-normalized matrix, rho ~ ||A^(2^k)||^(1/2^k). Plain dense algebra,
// no shared code with the implementation under test.
inline double rho_squaring_oracle(const latkit::Matrix& a, int squarings = 60) {
  const int n = a.rows();
  std::vector<double> m(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i * n + j] = a(i, j);

  auto norm1 = [&](const std::vector<double>& x) {
    double best = 0.0;
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int i = 0; i < n; ++i) s += std::abs(x[i * n + j]);
      best = std::max(best, s);
    }
    return best;
  };

  double nm = norm1(m);
  if (nm == 0.0) return 0.0;
  for (auto& x : m) x /= nm;
  double log_acc = std::log(nm), weight = 1.0;

  std::vector<double> sq(m.size());
  for (int k = 0; k < squarings; ++k) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int t = 0; t < n; ++t) s += m[i * n + t] * m[t * n + j];
        sq[i * n + j] = s;
      }
    m.swap(sq);
    nm = norm1(m);
    if (nm == 0.0) return 0.0;
    for (auto& x : m) x /= nm;
    weight *= 0.5;
    log_acc += weight * std::log(nm);
  }
  return std::exp(log_acc);
}

// ---------------------------------------------------------------------------
// Deterministic generators.

inline double uniform01(std::mt19937_64& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

inline int bounded(std::mt19937_64& eng, int bound) {
  return static_cast<int>(eng() % static_cast<std::uint64_t>(bound));
}

/// Random nonnegative matrix; roughly `density` of entries nonzero.
inline latkit::Matrix random_nonneg_matrix(int n, std::uint64_t seed, double density = 0.6) {
  std::mt19937_64 eng(seed);
  latkit::Matrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (uniform01(eng) < density) a(i, j) = uniform01(eng);
  return a;
}

/// Same abstract lattice, shuffled declaration order.
inline latkit::FiniteLattice shuffled_copy(const latkit::FiniteLattice& lat,
                                           std::uint64_t seed) {
  const int n = lat.size();
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::mt19937_64 eng(seed);
  for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[bounded(eng, i + 1)]);
  latkit::LatticeDoc doc;
  doc.relation = latkit::RelationKind::covers;
  for (int i = 0; i < n; ++i) doc.elements.push_back(lat.label(perm[i]));
  for (const auto& [lo, hi] : lat.covers()) doc.pairs.emplace_back(lat.label(lo), lat.label(hi));
  return latkit::build_lattice(doc);
}

/// Seeded small random lattice, at most 10 elements (3 generators).
inline latkit::FiniteLattice small_random_lattice(std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  const int g = bounded(eng, 4);
  const int m = 1 + bounded(eng, 6);
  return latkit::random_lattice(g, m, eng());
}

// ---------------------------------------------------------------------------
// Minimal DOT grammar checker:
//   digraph IDENT { (IDENT=IDENT; | STR; | STR -> STR;)* }
// where STR is a double-quoted string with backslash escapes.
inline bool dot_accepts(const std::string& text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto ident = [&]() -> bool {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    return pos > start;
  };
  auto literal = [&](const std::string& s) -> bool {
    skip_ws();
    if (text.compare(pos, s.size(), s) != 0) return false;
    pos += s.size();
    return true;
  };
  auto quoted = [&]() -> bool {
    skip_ws();
    if (pos >= text.size() || text[pos] != '"') return false;
    ++pos;
    while (pos < text.size() && text[pos] != '"') {
      if (text[pos] == '\\') ++pos;
      ++pos;
    }
    if (pos >= text.size()) return false;
    ++pos;
    return true;
  };

  if (!literal("digraph") || !ident() || !literal("{")) return false;
  while (true) {
    skip_ws();
    if (pos < text.size() && text[pos] == '}') break;
    if (pos < text.size() && text[pos] == '"') {
      if (!quoted()) return false;
      skip_ws();
      if (pos + 1 < text.size() && text[pos] == '-' && text[pos + 1] == '>') {
        pos += 2;
        if (!quoted()) return false;
      }
      if (!literal(";")) return false;
    } else {
      if (!ident() || !literal("=") || !ident() || !literal(";")) return false;
    }
  }
  if (!literal("}")) return false;
  skip_ws();
  return pos == text.size();
}

}  // namespace testsupport
