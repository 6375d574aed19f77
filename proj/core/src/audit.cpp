#include "latkit/audit.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <future>
#include <random>
#include <set>

#include "latkit/basis.hpp"
#include "latkit/structure.hpp"
#include "latkit/weighted.hpp"

namespace latkit {

namespace {

constexpr int kBruteForceBound = 20;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Deterministic bounded draw; modulo bias is irrelevant for test sampling.
int draw(std::mt19937_64& eng, int bound) {
  return static_cast<int>(eng() % static_cast<std::uint64_t>(bound));
}

std::string letters(int i) {
  std::string out;
  for (i += 1; i > 0; i = (i - 1) / 26)
    out.insert(out.begin(), static_cast<char>('a' + (i - 1) % 26));
  return out;
}

}  // namespace

std::vector<PropositionId> all_propositions() {
  using P = PropositionId;
  return {P::P2_3, P::P2_4, P::P2_7, P::P2_8, P::P2_10, P::P2_11, P::P2_12,
          P::P2_16, P::P2_21, P::P2_22, P::P2_24, P::P2_25, P::P4_5};
}

std::string_view proposition_name(PropositionId id) noexcept {
  switch (id) {
    case PropositionId::P2_3: return "P2_3";
    case PropositionId::P2_4: return "P2_4";
    case PropositionId::P2_7: return "P2_7";
    case PropositionId::P2_8: return "P2_8";
    case PropositionId::P2_10: return "P2_10";
    case PropositionId::P2_11: return "P2_11";
    case PropositionId::P2_12: return "P2_12";
    case PropositionId::P2_16: return "P2_16";
    case PropositionId::P2_21: return "P2_21";
    case PropositionId::P2_22: return "P2_22";
    case PropositionId::P2_24: return "P2_24";
    case PropositionId::P2_25: return "P2_25";
    case PropositionId::P4_5: return "P4_5";
  }
  return "";
}

std::optional<PropositionId> parse_proposition(std::string_view name) {
  for (PropositionId id : all_propositions())
    if (proposition_name(id) == name) return id;
  return std::nullopt;
}

FiniteLattice named_lattice(std::string_view name, int k) {
  LatticeDoc doc;
  doc.relation = RelationKind::covers;
  if (name == "chain") {
    if (k < 1 || k > 4096) throw lattice_error(errc::param_range, "chain needs 1 <= k <= 4096");
    for (int i = 0; i < k; ++i) doc.elements.push_back("c" + std::to_string(i));
    for (int i = 0; i + 1 < k; ++i) doc.pairs.emplace_back(doc.elements[i], doc.elements[i + 1]);
  } else if (name == "bool") {
    if (k < 0 || k > 10) throw lattice_error(errc::param_range, "bool needs 0 <= k <= 10");
    std::vector<unsigned> masks;
    for (unsigned s = 0; s < (1u << k); ++s) masks.push_back(s);
    std::sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
      const int pa = std::popcount(a), pb = std::popcount(b);
      return pa != pb ? pa < pb : a < b;
    });
    const unsigned full = (1u << k) - 1;
    auto label_of = [&](unsigned s) -> std::string {
      if (s == 0) return "0";
      if (s == full) return "1";
      std::string out;
      for (int i = 0; i < k; ++i)
        if (s & (1u << i)) out += letters(i);
      return out;
    };
    for (unsigned s : masks) doc.elements.push_back(label_of(s));
    for (unsigned s : masks)
      for (unsigned t : masks)
        if ((s & t) == s && std::popcount(t) == std::popcount(s) + 1)
          doc.pairs.emplace_back(label_of(s), label_of(t));
  } else if (name == "m") {
    if (k < 1 || k > 4094) throw lattice_error(errc::param_range, "m needs 1 <= k <= 4094");
    doc.elements.push_back("0");
    for (int i = 0; i < k; ++i) doc.elements.push_back(letters(i));
    doc.elements.push_back("1");
    for (int i = 0; i < k; ++i) {
      doc.pairs.emplace_back("0", letters(i));
      doc.pairs.emplace_back(letters(i), "1");
    }
  } else if (name == "n5") {
    doc.elements = {"0", "a", "b", "c", "1"};
    doc.pairs = {{"0", "a"}, {"a", "c"}, {"c", "1"}, {"0", "b"}, {"b", "1"}};
  } else {
    throw lattice_error(errc::unknown_name, "not a catalog lattice", {std::string(name)});
  }
  return build_lattice(doc);
}

std::vector<std::pair<std::string, int>> catalog_within(int max_n) {
  std::vector<std::pair<std::string, int>> out;
  for (int k = 1; k <= max_n; ++k) out.emplace_back("chain", k);
  for (int k = 0; k <= 10 && (1 << k) <= max_n; ++k) out.emplace_back("bool", k);
  for (int k = 1; k + 2 <= max_n; ++k) out.emplace_back("m", k);
  if (max_n >= 5) out.emplace_back("n5", 0);
  return out;
}

FiniteLattice random_lattice(int n_generators, int m_universe, std::uint64_t seed) {
  if (m_universe < 0 || m_universe > 16)
    throw lattice_error(errc::param_range, "universe size must lie in [0, 16]");
  if (n_generators < 0 || n_generators > 12)
    throw lattice_error(errc::param_range, "generator count must lie in [0, 12]");

  std::mt19937_64 eng(seed);
  const unsigned universe = m_universe == 0 ? 0u : (1u << m_universe) - 1;
  std::set<unsigned> family{0u, universe};
  for (int i = 0; i < n_generators; ++i)
    family.insert(static_cast<unsigned>(eng()) & universe);

  // close under pairwise intersection
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<unsigned> members(family.begin(), family.end());
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j)
        grew |= family.insert(members[i] & members[j]).second;
  }

  std::vector<unsigned> masks(family.begin(), family.end());
  std::sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });

  auto label_of = [](unsigned s) {
    std::string out = "{";
    for (int i = 0; i < 16; ++i)
      if (s & (1u << i)) {
        if (out.size() > 1) out += ',';
        out += std::to_string(i + 1);
      }
    return out + "}";
  };

  LatticeDoc doc;
  doc.relation = RelationKind::leq;
  for (unsigned s : masks) doc.elements.push_back(label_of(s));
  for (std::size_t i = 0; i < masks.size(); ++i)
    for (std::size_t j = 0; j < masks.size(); ++j)
      if (i != j && (masks[i] & masks[j]) == masks[i])
        doc.pairs.emplace_back(doc.elements[i], doc.elements[j]);
  return build_lattice(doc);
}

std::vector<std::vector<int>> brute_force_bases(const FiniteLattice& lat) {
  const int n = lat.size();
  if (n > kBruteForceBound)
    throw lattice_error(errc::too_large, "brute-force basis search is bounded at 20 elements");

  std::vector<int> others;
  for (int x = 0; x < n; ++x)
    if (x != lat.bottom()) others.push_back(x);
  const int q = static_cast<int>(others.size());

  std::vector<std::vector<int>> found;
  for (std::uint32_t mask = 0; mask < (1u << q); ++mask) {
    std::vector<int> b;
    for (int i = 0; i < q; ++i)
      if (mask & (1u << i)) b.push_back(others[i]);

    bool antichain = true;
    for (std::size_t i = 0; i < b.size() && antichain; ++i)
      for (std::size_t j = i + 1; j < b.size() && antichain; ++j)
        antichain = !lat.leq(b[i], b[j]) && !lat.leq(b[j], b[i]);
    if (!antichain) continue;

    bool covers_all = true;
    for (int z : others) {
      bool dominated = false;
      for (int x : b)
        if (lat.leq(x, z)) {
          dominated = true;
          break;
        }
      if (!dominated) {
        covers_all = false;
        break;
      }
    }
    if (covers_all) found.push_back(std::move(b));
  }
  return found;
}

namespace {

struct Failure {
  std::vector<std::string> elements;
};

std::vector<std::string> labels_of(const FiniteLattice& lat, const std::vector<int>& xs) {
  std::vector<std::string> out;
  for (int x : xs) out.push_back(lat.label(x));
  return out;
}

// Same abstract lattice with a deterministically shuffled declaration order.
FiniteLattice shuffled_copy(const FiniteLattice& lat, std::uint64_t seed) {
  const int n = lat.size();
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::mt19937_64 eng(seed);
  for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[draw(eng, i + 1)]);

  LatticeDoc doc;
  doc.relation = RelationKind::covers;
  for (int i = 0; i < n; ++i) doc.elements.push_back(lat.label(perm[i]));
  for (const auto& [lo, hi] : lat.covers())
    doc.pairs.emplace_back(lat.label(lo), lat.label(hi));
  return build_lattice(doc);
}

// True iff every nonzero element is the join of the basons below it.
bool atomistic_joins(const FiniteLattice& lat, const std::vector<int>& basons) {
  for (int x = 0; x < lat.size(); ++x) {
    if (x == lat.bottom()) continue;
    int acc = lat.bottom();
    for (int b : basons)
      if (lat.leq(b, x)) acc = lat.join(acc, b);
    if (acc != x) return false;
  }
  return true;
}

std::optional<Failure> check_p2_25(const FiniteLattice& lat, std::uint64_t seed) {
  const auto iso = isolated_elements(lat);
  if (iso.empty()) return std::nullopt;
  const int n = lat.size();

  auto dependent_witness = [&](const std::vector<int>& subset) -> std::optional<Failure> {
    const auto verdict = is_independent(lat, subset);
    if (verdict.independent) return std::nullopt;
    return Failure{labels_of(lat, subset)};
  };

  if (n <= 16) {
    // exhaustive over subsets of size <= 6 containing an isolated element
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      if (std::popcount(mask) > 6) continue;
      bool touches = false;
      for (int x : iso) touches = touches || (mask & (1u << x));
      if (!touches) continue;
      std::vector<int> subset;
      for (int x = 0; x < n; ++x)
        if (mask & (1u << x)) subset.push_back(x);
      if (auto f = dependent_witness(subset)) return f;
    }
    return std::nullopt;
  }

  std::mt19937_64 eng(seed);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> subset{iso[draw(eng, static_cast<int>(iso.size()))]};
    const int extra = 1 + draw(eng, 5);
    for (int i = 0; i < extra; ++i) subset.push_back(draw(eng, n));
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    if (auto f = dependent_witness(subset)) return f;
  }
  return std::nullopt;
}

std::optional<Failure> check(PropositionId id, const FiniteLattice& lat, std::uint64_t seed) {
  const auto b = basis(lat);
  switch (id) {
    case PropositionId::P2_3: {
      const auto bases = brute_force_bases(lat);
      if (bases.size() > 1) return Failure{labels_of(lat, bases[1])};
      return std::nullopt;
    }
    case PropositionId::P2_4:
      // the claim reads "if the dimension exists"; the one-element chain has
      // an empty basis, so it is exempt
      if (is_chain(lat) && lat.size() >= 2 && b.dimension != 1)
        return Failure{labels_of(lat, b.basons)};
      return std::nullopt;
    case PropositionId::P2_7: {
      const auto copy = shuffled_copy(lat, seed);
      const auto iso = find_isomorphism(lat, copy);
      if (!iso.found) return Failure{};
      std::vector<int> image;
      for (int x : b.basons) image.push_back(iso.mapping[x]);
      std::sort(image.begin(), image.end());
      if (image != basis(copy).basons) return Failure{labels_of(copy, image)};
      return std::nullopt;
    }
    case PropositionId::P2_8: {
      const auto copy = shuffled_copy(lat, seed);
      const auto iso = find_isomorphism(lat, copy);
      if (!iso.found || b.dimension != dimension(copy)) return Failure{};
      return std::nullopt;
    }
    case PropositionId::P2_10: {
      const auto at = atoms(lat);
      for (int x : b.basons)
        if (!std::binary_search(at.begin(), at.end(), x)) return Failure{{lat.label(x)}};
      return std::nullopt;
    }
    case PropositionId::P2_11: {
      if (!is_boolean(lat)) return std::nullopt;
      for (int x : atoms(lat))
        if (!std::binary_search(b.basons.begin(), b.basons.end(), x))
          return Failure{{lat.label(x)}};
      return std::nullopt;
    }
    case PropositionId::P2_12: {
      const bool lhs = is_boolean(lat);
      const bool rhs = atomistic_joins(lat, b.basons);
      if (lhs != rhs) return Failure{};
      return std::nullopt;
    }
    case PropositionId::P2_16:
      if (complementation_profile(lat).uniquely_complemented && is_orthogonal_basis(lat) &&
          b.dimension % 2 != 0)
        return Failure{labels_of(lat, b.basons)};
      return std::nullopt;
    case PropositionId::P2_21:
      if (is_boolean(lat) && is_consistent(lat) != (b.dimension != 2)) return Failure{};
      return std::nullopt;
    case PropositionId::P2_22:
      if (is_boolean(lat) && is_orthogonal_basis(lat) != (b.dimension == 2)) return Failure{};
      return std::nullopt;
    case PropositionId::P2_24: {
      const auto verdict = is_independent(lat, b.basons);
      if (!verdict.independent) {
        std::vector<int> xs{verdict.witness->element};
        xs.insert(xs.end(), verdict.witness->joiners.begin(), verdict.witness->joiners.end());
        return Failure{labels_of(lat, xs)};
      }
      return std::nullopt;
    }
    case PropositionId::P2_25:
      return check_p2_25(lat, seed);
    case PropositionId::P4_5: {
      const auto report = entropy(lift_usual(lat), AdjacencyMode::closed, LogBase::e);
      if (std::abs(report.entropy) > 1e-9) return Failure{};
      return std::nullopt;
    }
  }
  return std::nullopt;
}

void validate_options(const AuditOptions& opts) {
  if (opts.trials < 1) throw lattice_error(errc::param_range, "trials must be >= 1");
  if (opts.max_n < 1 || opts.max_n > kBruteForceBound)
    throw lattice_error(errc::param_range, "max_n must lie in [1, 20]");
  if (opts.threads < 1) throw lattice_error(errc::param_range, "threads must be >= 1");
}

FiniteLattice trial_lattice(const AuditOptions& opts, long index) {
  const std::uint64_t sub_seed = opts.seed ^ static_cast<std::uint64_t>(index);
  std::mt19937_64 eng(splitmix64(sub_seed));
  int g_max = 0;
  while ((1 << (g_max + 1)) + 2 <= opts.max_n && g_max < 12) ++g_max;
  const int g = draw(eng, g_max + 1);
  const int m = 1 + draw(eng, 6);
  return random_lattice(g, m, eng());
}

std::uint64_t trial_checker_seed(const AuditOptions& opts, long index) {
  return splitmix64(opts.seed ^ static_cast<std::uint64_t>(index) ^ 0x5a75646974ULL);
}

}  // namespace

AuditReport audit_proposition(PropositionId id, const AuditOptions& opts) {
  validate_options(opts);

  AuditReport report;
  report.proposition = id;
  report.seed = opts.seed;

  auto note_failure = [&](const FiniteLattice& lat, const Failure& f) {
    ++report.failures;
    if (!report.witness) report.witness = AuditWitness{to_doc(lat), f.elements};
  };

  const auto catalog = catalog_within(opts.max_n);
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    const auto lat = named_lattice(catalog[i].first, catalog[i].second);
    ++report.trials;
    if (auto f = check(id, lat, splitmix64(opts.seed ^ (0x436174ULL + i)))) note_failure(lat, *f);
  }

  using TrialOutcome = std::optional<std::pair<FiniteLattice, Failure>>;
  auto run_trial = [&](long t) -> TrialOutcome {
    const auto lat = trial_lattice(opts, t);
    if (auto f = check(id, lat, trial_checker_seed(opts, t)))
      return std::make_pair(lat, *f);
    return std::nullopt;
  };

  std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(opts.trials));
  if (opts.threads <= 1) {
    for (long t = 0; t < opts.trials; ++t) outcomes[static_cast<std::size_t>(t)] = run_trial(t);
  } else {
    std::vector<std::future<void>> workers;
    const long chunk = (opts.trials + opts.threads - 1) / opts.threads;
    for (int w = 0; w < opts.threads; ++w) {
      const long begin = w * chunk, end = std::min<long>(opts.trials, begin + chunk);
      if (begin >= end) break;
      workers.push_back(std::async(std::launch::async, [&, begin, end] {
        for (long t = begin; t < end; ++t) outcomes[static_cast<std::size_t>(t)] = run_trial(t);
      }));
    }
    for (auto& w : workers) w.get();
  }
  // aggregate in trial order so parallel runs report identically
  for (long t = 0; t < opts.trials; ++t) {
    ++report.trials;
    if (const auto& o = outcomes[static_cast<std::size_t>(t)]) note_failure(o->first, o->second);
  }

  report.verdict = report.failures > 0 ? AuditVerdict::counterexample_found
                                       : AuditVerdict::holds_on_sample;
  return report;
}

std::vector<AuditReport> audit_all(const AuditOptions& opts) {
  std::vector<AuditReport> out;
  for (PropositionId id : all_propositions()) out.push_back(audit_proposition(id, opts));
  return out;
}

}  // namespace latkit
