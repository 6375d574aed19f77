#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "latkit/audit.hpp"
#include "latkit/basis.hpp"
#include "latkit/structure.hpp"
#include "test_support.hpp"

using namespace latkit;
using testsupport::load_fixture;

namespace {

std::vector<std::string> label_set(const FiniteLattice& lat, const std::vector<int>& xs) {
  std::vector<std::string> out;
  for (int x : xs) out.push_back(lat.label(x));
  return out;
}

// Independent restatement of the powerset characterization, used to
// cross-validate is_boolean: 2^dim elements and every nonzero element is the
// join of the atoms below it.
bool powerset_shaped(const FiniteLattice& lat) {
  const auto at = atoms(lat);
  if (at.size() > 20) return false;
  if (lat.size() != (1 << at.size())) return false;
  for (int x = 0; x < lat.size(); ++x) {
    if (x == lat.bottom()) continue;
    int acc = lat.bottom();
    for (int a : at)
      if (lat.leq(a, x)) acc = lat.join(acc, a);
    if (acc != x) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("distributivity") {
  CHECK(is_distributive(named_lattice("bool", 3)));

  const auto m3 = load_fixture("m_3.json");
  CHECK_FALSE(is_distributive(m3));
  // the witness triple: a * (b + c) = a while (a*b) + (a*c) = 0
  const int a = m3.index_of("a"), b = m3.index_of("b"), c = m3.index_of("c");
  CHECK(m3.meet(a, m3.join(b, c)) == a);
  CHECK(m3.join(m3.meet(a, b), m3.meet(a, c)) == m3.bottom());

  CHECK_FALSE(is_distributive(load_fixture("n5.json")));
  CHECK(is_distributive(named_lattice("chain", 6)));
}

TEST_CASE("complementation profile") {
  auto p = complementation_profile(load_fixture("bool_2.json"));
  CHECK(p.complemented);
  CHECK(p.uniquely_complemented);

  p = complementation_profile(load_fixture("m_3.json"));
  CHECK(p.complemented);
  CHECK_FALSE(p.uniquely_complemented);

  p = complementation_profile(named_lattice("chain", 3));
  CHECK_FALSE(p.complemented);
  CHECK_FALSE(p.uniquely_complemented);
}

TEST_CASE("boolean detection") {
  CHECK(is_boolean(named_lattice("bool", 4)));
  CHECK_FALSE(is_boolean(load_fixture("m_3.json")));  // complemented, not distributive
  CHECK_FALSE(is_boolean(named_lattice("chain", 4)));
  CHECK(is_boolean(named_lattice("chain", 1)));  // single element = bool_0
  CHECK(is_boolean(load_fixture("m_2.json")));   // the diamond is bool_2
}

TEST_CASE("boolean cross-validates against the powerset characterization") {
  std::vector<FiniteLattice> sample;
  for (const auto& [name, k] : catalog_within(16)) sample.push_back(named_lattice(name, k));
  for (std::uint64_t s = 40; s < 120; ++s) sample.push_back(testsupport::small_random_lattice(s));
  for (const auto& lat : sample) CHECK(is_boolean(lat) == powerset_shaped(lat));
}

TEST_CASE("isolated elements") {
  const auto m5 = named_lattice("m", 5);
  CHECK(label_set(m5, isolated_elements(m5)) ==
        std::vector<std::string>{"a", "b", "c", "d", "e"});

  const auto b2 = load_fixture("bool_2.json");
  CHECK(label_set(b2, isolated_elements(b2)) == std::vector<std::string>{"a", "b"});

  CHECK(isolated_elements(load_fixture("bool_3.json")).empty());

  // vacuous isolation: the middle of the 3-chain has no eligible partner
  const auto c3 = named_lattice("chain", 3);
  CHECK(label_set(c3, isolated_elements(c3)) == std::vector<std::string>{"c1"});
  // but longer chains have comparable middles, hence none isolated
  CHECK(isolated_elements(named_lattice("chain", 4)).empty());

  // in the pentagon only b is isolated: a and c are comparable
  const auto n5 = load_fixture("n5.json");
  CHECK(label_set(n5, isolated_elements(n5)) == std::vector<std::string>{"b"});
}

TEST_CASE("consistency") {
  CHECK(is_consistent(load_fixture("bool_3.json")));
  CHECK_FALSE(is_consistent(load_fixture("bool_2.json")));
  CHECK_FALSE(is_consistent(load_fixture("m_3.json")));
  CHECK(is_consistent(named_lattice("chain", 2)));
  CHECK(is_consistent(named_lattice("chain", 1)));
}

TEST_CASE("isomorphism: chains are rigid") {
  const auto a = named_lattice("chain", 3);
  const auto b = load_fixture("chain_3_relabeled.json");
  const auto r = find_isomorphism(a, b);
  REQUIRE(r.found);
  // the only isomorphism maps by rank
  CHECK(b.label(r.mapping[a.index_of("c0")]) == "low");
  CHECK(b.label(r.mapping[a.index_of("c1")]) == "mid");
  CHECK(b.label(r.mapping[a.index_of("c2")]) == "top");
}

TEST_CASE("isomorphism: negative cases") {
  CHECK_FALSE(find_isomorphism(load_fixture("m_3.json"), load_fixture("n5.json")).found);
  // equal dimension does not imply isomorphic
  const auto c2 = named_lattice("chain", 2);
  const auto m1 = load_fixture("m_1.json");
  CHECK(dimension(c2) == dimension(m1));
  CHECK_FALSE(find_isomorphism(c2, m1).found);
}

TEST_CASE("isomorphism: bool_2 and m_2 are the same diamond") {
  const auto r = find_isomorphism(load_fixture("bool_2.json"), load_fixture("m_2.json"));
  CHECK(r.found);
}

TEST_CASE("isomorphism: size bound") {
  const auto big1 = named_lattice("chain", 65);
  const auto big2 = named_lattice("chain", 65);
  CHECK_THROWS_AS(find_isomorphism(big1, big2), lattice_error);
  CHECK(find_isomorphism(big1, big2, 80).found);
  // unequal sizes short-circuit to not-found, no error
  CHECK_FALSE(find_isomorphism(big1, named_lattice("chain", 80)).found);
}

TEST_CASE("isomorphism witness preserves order and basis") {
  for (std::uint64_t s = 200; s < 260; ++s) {
    const auto lat = testsupport::small_random_lattice(s);
    const auto copy = testsupport::shuffled_copy(lat, s ^ 0xabcd);
    const auto r = find_isomorphism(lat, copy);
    REQUIRE(r.found);
    for (int x = 0; x < lat.size(); ++x)
      for (int y = 0; y < lat.size(); ++y)
        CHECK(lat.leq(x, y) == copy.leq(r.mapping[x], r.mapping[y]));
    // image of the basis is the basis (and dimensions agree)
    std::vector<int> image;
    for (int x : basis(lat).basons) image.push_back(r.mapping[x]);
    std::sort(image.begin(), image.end());
    CHECK(image == basis(copy).basons);
    CHECK(dimension(lat) == dimension(copy));
  }
}

TEST_CASE("dimension one does not imply chain") {
  // one atom below an incomparable pair: dim 1, not a chain
  const auto lat = build_lattice(parse_lattice_doc(
      R"({"elements":["0","a","b","c","1"],"relation":"covers",
          "pairs":[["0","a"],["a","b"],["a","c"],["b","1"],["c","1"]]})"));
  CHECK(dimension(lat) == 1);
  CHECK_FALSE(is_chain(lat));
}
