#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "latkit/audit.hpp"
#include "latkit/basis.hpp"
#include "test_support.hpp"

using namespace latkit;
using testsupport::load_fixture;

namespace {

std::vector<std::string> label_set(const FiniteLattice& lat, const std::vector<int>& xs) {
  std::vector<std::string> out;
  for (int x : xs) out.push_back(lat.label(x));
  return out;
}

}  // namespace

TEST_CASE("basis on the catalog") {
  const auto c5 = named_lattice("chain", 5);
  auto b = basis(c5);
  CHECK(b.exists);
  CHECK(label_set(c5, b.basons) == std::vector<std::string>{"c1"});
  CHECK(b.dimension == 1);

  const auto b3 = named_lattice("bool", 3);
  b = basis(b3);
  CHECK(b.basons == atoms(b3));
  CHECK(b.dimension == 3);

  const auto m3 = load_fixture("m_3.json");
  b = basis(m3);
  CHECK(label_set(m3, b.basons) == std::vector<std::string>{"a", "b", "c"});
  CHECK(b.dimension == 3);

  const auto one = named_lattice("chain", 1);
  b = basis(one);
  CHECK(b.exists);
  CHECK(b.basons.empty());
  CHECK(b.dimension == 0);
}

TEST_CASE("dimension") {
  CHECK(dimension(named_lattice("bool", 4)) == 4);
  CHECK(dimension(named_lattice("chain", 2)) == 1);
  CHECK(dimension(load_fixture("n5.json")) == 2);
}

TEST_CASE("orthogonal basis") {
  CHECK(is_orthogonal_basis(load_fixture("bool_2.json")));
  CHECK_FALSE(is_orthogonal_basis(load_fixture("bool_3.json")));
  CHECK(is_orthogonal_basis(load_fixture("m_3.json")));
  // empty basis is not orthogonal by convention
  CHECK_FALSE(is_orthogonal_basis(named_lattice("chain", 1)));
  // and a chain's single bason has no complement in the basis
  CHECK_FALSE(is_orthogonal_basis(named_lattice("chain", 2)));
}

TEST_CASE("isolated basis") {
  CHECK(is_isolated_basis(load_fixture("bool_2.json")));
  CHECK_FALSE(is_isolated_basis(load_fixture("bool_3.json")));
  CHECK(is_isolated_basis(load_fixture("m_3.json")));
  CHECK_FALSE(is_isolated_basis(named_lattice("chain", 1)));
}

TEST_CASE("independence verdicts") {
  const auto b2 = load_fixture("bool_2.json");

  CHECK(is_independent(b2, {"a", "b"}).independent);
  CHECK(is_independent(b2, {"a"}).independent);
  CHECK(is_independent(b2, std::vector<int>{}).independent);

  const auto verdict = is_independent(b2, {"a", "b", "1"});
  REQUIRE_FALSE(verdict.independent);
  REQUIRE(verdict.witness);
  CHECK(b2.label(verdict.witness->element) == "1");
  CHECK(label_set(b2, verdict.witness->joiners) == std::vector<std::string>{"a", "b"});
  // witness invariants
  CHECK(verdict.witness->joiners.size() >= 2);
  int acc = verdict.witness->joiners[0];
  for (std::size_t i = 1; i < verdict.witness->joiners.size(); ++i)
    acc = b2.join(acc, verdict.witness->joiners[i]);
  CHECK(acc == verdict.witness->element);

  CHECK_THROWS_AS(is_independent(b2, {"a", "zebra"}), lattice_error);
}

TEST_CASE("independence is monotone under subset removal") {
  for (std::uint64_t s = 0; s < 40; ++s) {
    const auto lat = testsupport::small_random_lattice(s);
    std::mt19937_64 eng(s * 77 + 1);
    std::vector<int> subset;
    for (int x = 0; x < lat.size(); ++x)
      if (testsupport::uniform01(eng) < 0.5) subset.push_back(x);
    if (!is_independent(lat, subset).independent) continue;
    for (std::size_t drop = 0; drop < subset.size(); ++drop) {
      auto smaller = subset;
      smaller.erase(smaller.begin() + static_cast<long>(drop));
      CHECK(is_independent(lat, smaller).independent);
    }
  }
}

TEST_CASE("brute force oracle agrees with basis() on catalog and random lattices") {
  std::vector<FiniteLattice> sample;
  for (const auto& [name, k] : catalog_within(12)) sample.push_back(named_lattice(name, k));
  for (std::uint64_t s = 500; s < 600; ++s) sample.push_back(testsupport::small_random_lattice(s));

  for (const auto& lat : sample) {
    const auto oracle = brute_force_bases(lat);
    REQUIRE(oracle.size() == 1);
    CHECK(oracle[0] == basis(lat).basons);
  }
}

TEST_CASE("basons are atoms and cover everything nonzero") {
  for (std::uint64_t s = 700; s < 760; ++s) {
    const auto lat = testsupport::small_random_lattice(s);
    const auto b = basis(lat);
    const auto at = atoms(lat);
    CHECK(std::includes(at.begin(), at.end(), b.basons.begin(), b.basons.end()));
    CHECK(b.basons == at);
    for (int z = 0; z < lat.size(); ++z) {
      if (z == lat.bottom()) continue;
      bool dominated = false;
      for (int x : b.basons) dominated = dominated || lat.leq(x, z);
      CHECK(dominated);
    }
    // antichain
    for (std::size_t i = 0; i < b.basons.size(); ++i)
      for (std::size_t j = i + 1; j < b.basons.size(); ++j) {
        CHECK_FALSE(lat.leq(b.basons[i], b.basons[j]));
        CHECK_FALSE(lat.leq(b.basons[j], b.basons[i]));
      }
  }
}
