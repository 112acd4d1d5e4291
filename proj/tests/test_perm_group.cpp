#include "doctest.h"
#include "pexc/errors.hpp"
#include "pexc/io.hpp"
#include "pexc/perm_group.hpp"
#include "support.hpp"

using namespace pexc;

namespace {

PermGroup load(const std::string& stem) { return load_perm_file(support::data_dir() / "perm" / (stem + ".json")).group; }

std::uint64_t factorial(std::uint64_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST_CASE("orders of small groups") {
  for (std::size_t n = 1; n <= 9; ++n) {
    CAPTURE(n);
    CHECK(perm_order(symmetric_group(n)) == factorial(n));
    if (n >= 2) CHECK(perm_order(alternating_group(n)) == factorial(n) / 2);
  }
  CHECK(perm_order(symmetric_group(20)) == factorial(20));
  const PermGroup c5(5, {PermGroup::from_cycles(5, {{0, 1, 2, 3, 4}})});
  CHECK(perm_order(c5) == 5);
  CHECK(perm_order(PermGroup(4, {})) == 1);
}

TEST_CASE("orders agree with a plain Schreier-Sims") {
  for (const char* stem : {"M11", "M11_12", "L2_11", "AGL3_2", "AGammaL1_8", "D10", "M23"}) {
    CAPTURE(stem);
    const PermGroup h = load(stem);
    oracle::NaiveChain chain(static_cast<int>(h.degree()), support::to_oracle(h.generators()));
    CHECK(perm_order(h) == chain.order());
  }
  CHECK(perm_order(load("M23")) == 10200960);
}

TEST_CASE("stabilizer chain membership") {
  const PermGroup a6 = alternating_group(6);
  StabChain sc(6, a6.generators());
  CHECK(sc.order() == 360);
  CHECK(sc.contains(PermGroup::from_cycles(6, {{0, 1, 2}})));
  CHECK_FALSE(sc.contains(PermGroup::from_cycles(6, {{0, 1}})));
}

TEST_CASE("point orbits") {
  const PermGroup h(6, {PermGroup::from_cycles(6, {{0, 2}, {3, 5, 4}})});
  const auto orbs = point_orbits(h);
  REQUIRE(orbs.size() == 3);
  CHECK(orbs[0] == std::vector<std::uint32_t>{0, 2});
  CHECK(orbs[1] == std::vector<std::uint32_t>{1});
  CHECK(orbs[2] == std::vector<std::uint32_t>{3, 4, 5});
}

TEST_CASE("subset orbits agree with brute force") {
  std::vector<std::pair<PermGroup, std::uint32_t>> cases{
      {load("D10"), 2}, {load("AGL3_2"), 2}, {load("AGammaL1_8"), 2}, {symmetric_group(5), 2},
      {alternating_group(7), 2}, {load("L2_11"), 3}, {symmetric_group(6), 5}};
  for (const auto& [h, p] : cases) {
    CAPTURE(h.label());
    const auto elems = oracle::perm_closure(support::to_oracle(h.generators()));
    const auto want = oracle::subset_orbit_sizes(elems, static_cast<int>(h.degree()));
    const auto got = subset_orbits(h, p);
    CHECK(got.order == elems.size());
    CHECK(got.levels == want);
    // Per-level pass gives the same partition.
    const auto lv = subset_orbits(h, p, 500);
    CHECK(lv.levels == want);
    CHECK(lv.concealed == got.concealed);
    bool conc = elems.size() % p == 0;
    for (const auto& lvl : want)
      for (auto [s, m] : lvl) conc = conc && s % p != 0;
    CHECK(got.concealed == conc);
    if (!got.concealed && elems.size() % p == 0) {
      REQUIRE(got.witness_size);
      CHECK(*got.witness_size % p == 0);
    }
  }
}

TEST_CASE("concealed examples") {
  CHECK(subset_orbits(load("D10"), 2).concealed);
  CHECK(subset_orbits(load("AGL3_2"), 3).concealed);
  CHECK(subset_orbits(load("AGammaL1_8"), 3).concealed);
  CHECK_FALSE(subset_orbits(load("AGL3_2"), 2).concealed);
  const auto s5 = subset_orbits(symmetric_group(5), 2);
  CHECK_FALSE(s5.concealed);
  REQUIRE(s5.witness);
  CHECK(__builtin_popcountll(*s5.witness) == 2);
  CHECK(*s5.witness_size == 10);
  CHECK_THROWS_AS(subset_orbits(symmetric_group(20), 2, 1000), TooManySubsets);
}

TEST_CASE("binomial valuations") {
  for (unsigned p : {2u, 3u, 5u, 7u, 11u, 13u})
    for (unsigned n = 0; n <= 200; ++n)
      for (unsigned k = 0; k <= n; ++k) {
        const auto v = binom_p_valuation(n, k, p);
        REQUIRE(v == legendre_binom_valuation(n, k, p));
        if (n <= 60) REQUIRE(v == oracle::binom_valuation_exact(n, k, p));
      }
  CHECK(binomial(8, 4) == 70);
  CHECK(binomial(62, 31) == 465428353255261088ULL);
  CHECK_THROWS_AS(binomial(100, 50), InvalidArgument);
}

TEST_CASE("alternating groups") {
  for (std::uint64_t n = 3; n <= 40; ++n)
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
      CAPTURE(n);
      CAPTURE(p);
      CHECK(an_concealed_predicate(n, p) == an_concealed_by_valuations(n, p));
    }
  // Brute force on all subsets.
  for (std::size_t n = 3; n <= 8; ++n)
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
      CAPTURE(n);
      CAPTURE(p);
      CHECK(subset_orbits(alternating_group(n), p).concealed == an_concealed_predicate(n, p));
    }
  CHECK(an_concealed_predicate(7, 2));
  CHECK(an_concealed_predicate(15, 2));
  CHECK_FALSE(an_concealed_predicate(3, 2));
  CHECK_FALSE(an_concealed_predicate(5, 2));
  CHECK(an_concealed_predicate(5, 3));
  CHECK(an_concealed_predicate(8, 3));
}
