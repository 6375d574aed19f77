#include "latkit/structure.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "latkit/basis.hpp"

namespace latkit {

bool is_distributive(const FiniteLattice& lat) {
  const int n = lat.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (lat.meet(x, lat.join(y, z)) != lat.join(lat.meet(x, y), lat.meet(x, z)))
          return false;
  return true;
}

ComplementationProfile complementation_profile(const FiniteLattice& lat) {
  ComplementationProfile out{true, true};
  for (int x = 0; x < lat.size(); ++x) {
    const auto c = complements(lat, x);
    if (c.empty()) out.complemented = false;
    if (c.size() != 1) out.uniquely_complemented = false;
  }
  out.uniquely_complemented = out.uniquely_complemented && out.complemented;
  return out;
}

bool is_boolean(const FiniteLattice& lat) {
  return complementation_profile(lat).complemented && is_distributive(lat);
}

std::vector<int> isolated_elements(const FiniteLattice& lat) {
  std::vector<int> out;
  for (int x = 0; x < lat.size(); ++x) {
    if (x == lat.bottom() || x == lat.top()) continue;
    bool isolated = true;
    for (int y = 0; y < lat.size() && isolated; ++y) {
      if (y == x || y == lat.bottom() || y == lat.top()) continue;
      isolated = lat.meet(x, y) == lat.bottom() && lat.join(x, y) == lat.top();
    }
    if (isolated) out.push_back(x);
  }
  return out;
}

bool is_consistent(const FiniteLattice& lat) {
  return isolated_elements(lat).empty();
}

namespace {

// Longest-chain distances from bottom (height) and to top (depth), computed
// over the covers DAG in one pass each.
std::vector<int> heights(const FiniteLattice& lat) {
  std::vector<int> h(lat.size(), 0);
  // covers are pairs (lo, hi); process in topological-ish sweeps.
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [lo, hi] : lat.covers())
      if (h[hi] < h[lo] + 1) {
        h[hi] = h[lo] + 1;
        changed = true;
      }
  }
  return h;
}

std::vector<int> depths(const FiniteLattice& lat) {
  std::vector<int> d(lat.size(), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [lo, hi] : lat.covers())
      if (d[lo] < d[hi] + 1) {
        d[lo] = d[hi] + 1;
        changed = true;
      }
  }
  return d;
}

struct Signature {
  std::array<int, 5> v;
  bool operator==(const Signature&) const = default;
  auto operator<=>(const Signature&) const = default;
};

std::vector<Signature> signatures(const FiniteLattice& lat) {
  const int n = lat.size();
  std::vector<int> down_deg(n, 0), up_deg(n, 0);
  for (const auto& [lo, hi] : lat.covers()) {
    ++up_deg[lo];
    ++down_deg[hi];
  }
  const auto h = heights(lat), d = depths(lat);
  std::vector<Signature> sig(n);
  for (int x = 0; x < n; ++x)
    sig[x] = {{lat.down_size(x), lat.up_size(x), down_deg[x], up_deg[x],
               h[x] * 4096 + d[x]}};
  return sig;
}

}  // namespace

IsomorphismResult find_isomorphism(const FiniteLattice& a, const FiniteLattice& b,
                                   int size_bound) {
  const int n = a.size();
  if (n != b.size()) return {};
  if (n > size_bound)
    throw lattice_error(errc::too_large, "isomorphism search bound exceeded");

  const auto sig_a = signatures(a), sig_b = signatures(b);
  {
    auto sa = sig_a, sb = sig_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return {};
  }

  // Candidate targets per source element: same signature class.
  std::vector<std::vector<int>> candidates(n);
  for (int x = 0; x < n; ++x)
    for (int u = 0; u < n; ++u)
      if (sig_a[x] == sig_b[u]) candidates[x].push_back(u);

  // Most-constrained-first assignment order.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    if (candidates[x].size() != candidates[y].size())
      return candidates[x].size() < candidates[y].size();
    return x < y;
  });

  std::vector<int> mapping(n, -1);
  std::vector<char> used(n, 0);

  auto consistent = [&](int x, int u, int depth) {
    for (int i = 0; i < depth; ++i) {
      const int y = order[i], v = mapping[y];
      if (a.leq(x, y) != b.leq(u, v) || a.leq(y, x) != b.leq(v, u)) return false;
    }
    return true;
  };

  auto backtrack = [&](auto&& self, int depth) -> bool {
    if (depth == n) return true;
    const int x = order[depth];
    for (int u : candidates[x]) {
      if (used[u] || !consistent(x, u, depth)) continue;
      mapping[x] = u;
      used[u] = 1;
      if (self(self, depth + 1)) return true;
      mapping[x] = -1;
      used[u] = 0;
    }
    return false;
  };

  if (!backtrack(backtrack, 0)) return {};

  // Full verification: order preserved in both directions.
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (a.leq(x, y) != b.leq(mapping[x], mapping[y])) return {};

  return {true, std::move(mapping)};
}

}  // namespace latkit
