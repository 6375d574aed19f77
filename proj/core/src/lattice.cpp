#include "latkit/lattice.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <sstream>

#include <json.hpp>

namespace latkit {

std::string_view errc_name(errc code) noexcept {
  switch (code) {
    case errc::parse: return "E_PARSE";
    case errc::dup_label: return "E_DUP_LABEL";
    case errc::unknown_label: return "E_UNKNOWN_LABEL";
    case errc::empty: return "E_EMPTY";
    case errc::not_antisymmetric: return "E_NOT_ANTISYMMETRIC";
    case errc::not_lattice: return "E_NOT_LATTICE";
    case errc::weight_range: return "E_WEIGHT_RANGE";
    case errc::too_large: return "E_TOO_LARGE";
    case errc::param_range: return "E_PARAM_RANGE";
    case errc::unknown_name: return "E_UNKNOWN_NAME";
    case errc::not_square: return "E_NOT_SQUARE";
    case errc::negative_entry: return "E_NEGATIVE_ENTRY";
    case errc::no_convergence: return "E_NO_CONVERGENCE";
  }
  return "E_UNKNOWN";
}

namespace {

using json = nlohmann::json;

std::map<std::string, int> label_index(const std::vector<std::string>& labels) {
  std::map<std::string, int> out;
  for (int i = 0; i < static_cast<int>(labels.size()); ++i) {
    auto [it, fresh] = out.emplace(labels[i], i);
    if (!fresh) throw lattice_error(errc::dup_label, "duplicate element label", {labels[i]});
  }
  return out;
}

}  // namespace

LatticeDoc parse_lattice_doc(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw lattice_error(errc::parse, e.what());
  }
  if (!j.is_object()) throw lattice_error(errc::parse, "document must be a JSON object");
  if (!j.contains("elements") || !j["elements"].is_array())
    throw lattice_error(errc::parse, "missing \"elements\" array");
  if (!j.contains("relation") || !j["relation"].is_string())
    throw lattice_error(errc::parse, "missing \"relation\" string");
  if (!j.contains("pairs") || !j["pairs"].is_array())
    throw lattice_error(errc::parse, "missing \"pairs\" array");

  LatticeDoc doc;
  for (const auto& e : j["elements"]) {
    if (!e.is_string()) throw lattice_error(errc::parse, "elements must be strings");
    doc.elements.push_back(e.get<std::string>());
  }
  auto index = label_index(doc.elements);

  const std::string rel = j["relation"].get<std::string>();
  if (rel == "covers") doc.relation = RelationKind::covers;
  else if (rel == "leq") doc.relation = RelationKind::leq;
  else throw lattice_error(errc::parse, "relation must be \"covers\" or \"leq\"", {rel});

  std::vector<std::pair<int, int>> seen;
  for (const auto& p : j["pairs"]) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string())
      throw lattice_error(errc::parse, "each pair must be [string, string]");
    const std::string a = p[0].get<std::string>();
    const std::string b = p[1].get<std::string>();
    auto ia = index.find(a);
    if (ia == index.end()) throw lattice_error(errc::unknown_label, "pair references undeclared label", {a});
    auto ib = index.find(b);
    if (ib == index.end()) throw lattice_error(errc::unknown_label, "pair references undeclared label", {b});
    std::pair<int, int> key{ia->second, ib->second};
    if (std::find(seen.begin(), seen.end(), key) != seen.end())
      throw lattice_error(errc::parse, "duplicate pair", {a, b});
    seen.push_back(key);
    doc.pairs.emplace_back(a, b);
  }
  return doc;
}

std::string lattice_doc_to_json(const LatticeDoc& doc) {
  nlohmann::ordered_json j;
  j["elements"] = doc.elements;
  j["relation"] = doc.relation == RelationKind::covers ? "covers" : "leq";
  auto pairs = nlohmann::ordered_json::array();
  for (const auto& [a, b] : doc.pairs) pairs.push_back({a, b});
  j["pairs"] = std::move(pairs);
  return j.dump(2);
}

namespace {

// Shortest directed path a -> b over the input pair digraph; used only to
// report a witness cycle when antisymmetry fails.
std::vector<int> bfs_path(const std::vector<std::vector<int>>& adj, int from, int to) {
  std::vector<int> parent(adj.size(), -1);
  std::deque<int> queue{from};
  parent[from] = from;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    if (v == to) break;
    for (int w : adj[v])
      if (parent[w] < 0) {
        parent[w] = v;
        queue.push_back(w);
      }
  }
  std::vector<int> path;
  for (int v = to; v != from; v = parent[v]) path.push_back(v);
  path.push_back(from);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

FiniteLattice build_lattice(const LatticeDoc& doc) {
  const int n = static_cast<int>(doc.elements.size());
  if (n == 0) throw lattice_error(errc::empty, "lattice needs at least one element");

  auto index = label_index(doc.elements);
  const int words = (n + 63) / 64;

  std::vector<std::vector<int>> adj(n);
  std::vector<std::uint64_t> up(static_cast<std::size_t>(n) * words, 0);
  auto set_bit = [&](int x, int y) { up[x * words + (y >> 6)] |= std::uint64_t{1} << (y & 63); };
  auto get_bit = [&](int x, int y) { return (up[x * words + (y >> 6)] >> (y & 63)) & 1u; };

  for (int i = 0; i < n; ++i) set_bit(i, i);
  for (const auto& [a, b] : doc.pairs) {
    int x = index.at(a), y = index.at(b);
    if (x == y) {
      if (doc.relation == RelationKind::covers)
        throw lattice_error(errc::not_antisymmetric, "cover pair from an element to itself", {a, a});
      continue;  // a <= a is just reflexivity
    }
    set_bit(x, y);
    adj[x].push_back(y);
  }

  // Reflexive-transitive closure (Warshall on bit rows).
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (get_bit(i, k))
        for (int w = 0; w < words; ++w) up[i * words + w] |= up[k * words + w];

  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (get_bit(x, y) && get_bit(y, x)) {
        auto fwd = bfs_path(adj, x, y);
        auto back = bfs_path(adj, y, x);
        std::vector<std::string> cycle;
        for (int v : fwd) cycle.push_back(doc.elements[v]);
        for (std::size_t i = 1; i < back.size(); ++i) cycle.push_back(doc.elements[back[i]]);
        throw lattice_error(errc::not_antisymmetric, "order relation has a cycle", cycle);
      }

  // down rows: transpose of up.
  std::vector<std::uint64_t> down(static_cast<std::size_t>(n) * words, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (get_bit(x, y)) down[y * words + (x >> 6)] |= std::uint64_t{1} << (x & 63);

  // Greatest element of a bound set, if any: the member whose row covers the
  // whole set. Scans members only, so cost is |set| * words per query.
  auto extremum = [&](const std::vector<std::uint64_t>& rows, const std::uint64_t* set) -> int {
    int best = -1;
    for (int w = 0; w < words; ++w) {
      std::uint64_t bits = set[w];
      while (bits) {
        int z = w * 64 + std::countr_zero(bits);
        bits &= bits - 1;
        bool covers_all = true;
        for (int v = 0; v < words && covers_all; ++v)
          covers_all = (set[v] & ~rows[z * words + v]) == 0;
        if (covers_all) return z;
        best = -2;
      }
    }
    return best == -1 ? -1 : -2;  // -1 empty set, -2 no greatest element
  };

  FiniteLattice lat;
  lat.n_ = n;
  lat.words_ = words;
  lat.labels_ = doc.elements;
  lat.meet_.assign(static_cast<std::size_t>(n) * n, 0);
  lat.join_.assign(static_cast<std::size_t>(n) * n, 0);

  std::vector<std::uint64_t> scratch(words);
  for (int x = 0; x < n; ++x)
    for (int y = x; y < n; ++y) {
      int m, j;
      if (get_bit(x, y)) {
        m = x;
        j = y;
      } else if (get_bit(y, x)) {
        m = y;
        j = x;
      } else {
        for (int w = 0; w < words; ++w) scratch[w] = down[x * words + w] & down[y * words + w];
        m = extremum(down, scratch.data());
        if (m < 0)
          throw lattice_error(errc::not_lattice, "pair has no unique meet",
                              {doc.elements[x], doc.elements[y]});
        for (int w = 0; w < words; ++w) scratch[w] = up[x * words + w] & up[y * words + w];
        j = extremum(up, scratch.data());
        if (j < 0)
          throw lattice_error(errc::not_lattice, "pair has no unique join",
                              {doc.elements[x], doc.elements[y]});
      }
      lat.meet_[x * n + y] = lat.meet_[y * n + x] = m;
      lat.join_[x * n + y] = lat.join_[y * n + x] = j;
    }

  // Iterated meets/joins give the bounds once every pair has them.
  int bottom = 0, top = 0;
  for (int x = 1; x < n; ++x) {
    bottom = lat.meet_[bottom * n + x];
    top = lat.join_[top * n + x];
  }
  lat.bottom_ = bottom;
  lat.top_ = top;

  lat.down_size_.resize(n);
  lat.up_size_.resize(n);
  for (int x = 0; x < n; ++x) {
    int d = 0, u = 0;
    for (int w = 0; w < words; ++w) {
      d += std::popcount(down[x * words + w]);
      u += std::popcount(up[x * words + w]);
    }
    lat.down_size_[x] = d;
    lat.up_size_[x] = u;
  }

  // x covered by y iff the interval [x, y] is exactly {x, y}.
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y || !get_bit(x, y)) continue;
      int interval = 0;
      for (int w = 0; w < words; ++w)
        interval += std::popcount(up[x * words + w] & down[y * words + w]);
      if (interval == 2) lat.covers_.emplace_back(x, y);
    }
  std::sort(lat.covers_.begin(), lat.covers_.end());

  lat.leq_rows_ = std::move(up);
  return lat;
}

int FiniteLattice::index_of(std::string_view label) const {
  for (int i = 0; i < n_; ++i)
    if (labels_[i] == label) return i;
  throw lattice_error(errc::unknown_label, "no such element", {std::string(label)});
}

std::vector<int> resolve_labels(const FiniteLattice& lat,
                                const std::vector<std::string>& labels) {
  std::vector<int> out;
  out.reserve(labels.size());
  for (const auto& l : labels) out.push_back(lat.index_of(l));
  return out;
}

std::vector<int> atoms(const FiniteLattice& lat) {
  std::vector<int> out;
  for (const auto& [lo, hi] : lat.covers())
    if (lo == lat.bottom()) out.push_back(hi);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> complements(const FiniteLattice& lat, int x) {
  std::vector<int> out;
  for (int y = 0; y < lat.size(); ++y)
    if (lat.meet(x, y) == lat.bottom() && lat.join(x, y) == lat.top()) out.push_back(y);
  return out;
}

bool is_chain(const FiniteLattice& lat) {
  for (int x = 0; x < lat.size(); ++x)
    for (int y = x + 1; y < lat.size(); ++y)
      if (!lat.leq(x, y) && !lat.leq(y, x)) return false;
  return true;
}

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string export_dot(const FiniteLattice& lat) {
  std::ostringstream out;
  out << "digraph lattice {\n  rankdir=BT;\n";
  for (int x = 0; x < lat.size(); ++x) out << "  " << dot_quote(lat.label(x)) << ";\n";
  for (const auto& [lo, hi] : lat.covers())
    out << "  " << dot_quote(lat.label(lo)) << " -> " << dot_quote(lat.label(hi)) << ";\n";
  out << "}\n";
  return out.str();
}

LatticeDoc to_doc(const FiniteLattice& lat) {
  LatticeDoc doc;
  doc.elements = lat.labels();
  doc.relation = RelationKind::covers;
  for (const auto& [lo, hi] : lat.covers())
    doc.pairs.emplace_back(lat.label(lo), lat.label(hi));
  return doc;
}

}  // namespace latkit
