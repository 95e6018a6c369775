#include <doctest.h>

#include <random>
#include <set>

#include "symdig/permaction.hpp"

using namespace symdig;

namespace {

Permutation perm(std::vector<Vertex> images) { return Permutation(std::move(images)); }

GeneratedAction sym3() {
  GeneratedAction a;
  a.domain = 3;
  a.generators = {perm({1, 0, 2}), perm({1, 2, 0})};
  return a;
}

}  // namespace

TEST_CASE("permutation validation and composition") {
  CHECK_THROWS_AS(perm({0, 0, 1}), Error);
  CHECK_THROWS_AS(perm({0, 3, 1}), Error);

  const auto id = Permutation::identity(3);
  const auto swap01 = perm({1, 0, 2});
  CHECK(compose(id, swap01) == swap01);
  CHECK(compose(swap01, swap01) == id);

  // x^((0 1)(1 2)) applied pointwise: 0 -> 2, 1 -> 0, 2 -> 1.
  const auto swap12 = perm({0, 2, 1});
  CHECK(compose(swap01, swap12) == perm({2, 0, 1}));

  CHECK_THROWS_AS(compose(swap01, Permutation::identity(4)), Error);
  CHECK(swap01.inverse() == swap01);
  CHECK(perm({1, 2, 0}).inverse() == perm({2, 0, 1}));
}

TEST_CASE("wreath apply matches the coordinate formula") {
  const auto h = perm({1, 2, 3, 0});
  const auto id4 = Permutation::identity(4);

  // Pure coordinate swap.
  WreathElement swap_coords{perm({1, 0}), {id4, id4}};
  CHECK(wreath_apply(swap_coords, {0, 1}) == std::vector<Vertex>{1, 0});
  CHECK(wreath_apply(swap_coords, {2, 3}) == std::vector<Vertex>{3, 2});

  // Coordinate-wise action in coordinate 0.
  WreathElement base_only{Permutation::identity(2), {h, id4}};
  CHECK(wreath_apply(base_only, {0, 0}) == std::vector<Vertex>{1, 0});

  CHECK_THROWS_AS(wreath_apply(base_only, {0, 1, 2}), Error);
}

TEST_CASE("wreath composition is coherent with application") {
  // Randomized elements of Sym(4) wr Sym(2), checked on every tuple.
  std::mt19937_64 rng(12345);
  const auto random_perm = [&](Vertex n) {
    std::vector<Vertex> images(n);
    for (Vertex i = 0; i < n; ++i) images[i] = i;
    std::shuffle(images.begin(), images.end(), rng);
    return perm(std::move(images));
  };
  for (int trial = 0; trial < 200; ++trial) {
    const WreathElement g{random_perm(2), {random_perm(4), random_perm(4)}};
    const WreathElement h{random_perm(2), {random_perm(4), random_perm(4)}};
    const auto gh = wreath_compose(g, h);
    for (Vertex t = 0; t < 16; ++t) {
      const auto tuple = tuple_of_index(t, 4, 2);
      CHECK(wreath_apply(gh, tuple) == wreath_apply(h, wreath_apply(g, tuple)));
    }
  }
}

TEST_CASE("wreath generators build the product action") {
  GeneratedAction s3 = sym3();
  s3.labels = {{0}, {1}, {2}};
  s3.alphabet = {"0", "1", "2"};

  const auto w = wreath_generators(s3, 2);
  CHECK(w.domain == 9);
  CHECK(w.labels[5] == std::vector<Vertex>{1, 2});  // index = 3*1 + 2
  CHECK(group_enumerate(w, 100).size() == 72);      // |Sym(3) wr Sym(2)|

  const auto w1 = wreath_generators(s3, 1);
  CHECK(w1.domain == 3);
  REQUIRE(w1.generators.size() == s3.generators.size());
  for (std::size_t i = 0; i < w1.generators.size(); ++i)
    CHECK(w1.generators[i] == s3.generators[i]);

  CHECK_THROWS_AS(wreath_generators(s3, 0), Error);
  CHECK_THROWS_AS(wreath_generators(s3, 20), Error);  // 3^20 over the size guard
}

TEST_CASE("orbit computation") {
  GeneratedAction identity_only;
  identity_only.domain = 5;
  identity_only.generators = {Permutation::identity(5)};
  CHECK(orbit(identity_only, 2) == std::vector<Vertex>{2});
  CHECK_THROWS_AS(orbit(identity_only, 5), Error);

  CHECK(orbit(sym3(), 0) == std::vector<Vertex>{0, 1, 2});

  GeneratedAction partial;
  partial.domain = 3;
  partial.generators = {perm({1, 0, 2})};
  CHECK(orbit(partial, 0) == std::vector<Vertex>{0, 1});
  CHECK(orbit(partial, 2) == std::vector<Vertex>{2});

  const auto blocks = orbit_partition(partial);
  REQUIRE(blocks.size() == 2);
  CHECK(blocks[0] == std::vector<Vertex>{0, 1});
  CHECK(blocks[1] == std::vector<Vertex>{2});
}

TEST_CASE("orbits partition the domain") {
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 20; ++trial) {
    GeneratedAction a;
    a.domain = 12;
    for (int g = 0; g < 2; ++g) {
      std::vector<Vertex> images(12);
      for (Vertex i = 0; i < 12; ++i) images[i] = i;
      std::shuffle(images.begin(), images.end(), rng);
      a.generators.emplace_back(std::move(images));
    }
    const auto blocks = orbit_partition(a);
    std::set<Vertex> all;
    std::size_t total = 0;
    for (const auto& block : blocks) {
      total += block.size();
      all.insert(block.begin(), block.end());
    }
    CHECK(total == 12);
    CHECK(all.size() == 12);
  }
}

TEST_CASE("pair orbits") {
  GeneratedAction identity_only;
  identity_only.domain = 4;
  identity_only.generators = {Permutation::identity(4)};
  CHECK(pair_orbit(identity_only, {1, 3}) == std::vector<VertexPair>{{1, 3}});

  // Sym(3) is 2-transitive: one orbit on the 6 ordered distinct pairs.
  const auto pairs = pair_orbit(sym3(), {0, 1});
  CHECK(pairs == std::vector<VertexPair>{{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}});

  CHECK_THROWS_AS(pair_orbit(identity_only, {0, 4}), Error);
}

TEST_CASE("pair orbits are closed under the generators") {
  const auto pairs = pair_orbit(sym3(), {0, 1});
  CHECK(pair_set_invariant(sym3().generators, pairs));
}

TEST_CASE("transitivity testing") {
  CHECK(is_transitive_on(sym3(), {0, 1, 2}).transitive);

  GeneratedAction partial;
  partial.domain = 3;
  partial.generators = {perm({1, 0, 2})};
  const auto full = is_transitive_on(partial, {0, 1, 2});
  CHECK_FALSE(full.transitive);
  CHECK(is_transitive_on(partial, {0, 1}).transitive);

  const auto empty = is_transitive_on(partial, {});
  CHECK(empty.transitive);
  CHECK(empty.vacuous);
  const auto empty_pairs = is_transitive_on_pairs(partial, {});
  CHECK(empty_pairs.transitive);
  CHECK(empty_pairs.vacuous);
}

TEST_CASE("group enumeration") {
  GeneratedAction identity_only;
  identity_only.domain = 4;
  identity_only.generators = {Permutation::identity(4)};
  CHECK(group_enumerate(identity_only, 10).size() == 1);

  CHECK(group_enumerate(sym3(), 10).size() == 6);
  CHECK_THROWS_AS(group_enumerate(sym3(), 3), Error);
  CHECK_THROWS_AS(group_enumerate(sym3(), 0), Error);
}

TEST_CASE("orbit length duality") {
  const auto dual = orbit_length_duality(sym3(), 0, 1, 100);
  CHECK(dual.equal);
  CHECK(dual.eta_under_stab_nu == 2);
  CHECK(dual.nu_under_stab_eta == 2);
  CHECK(orbit_length_duality_check(sym3(), 2, 2, 100));
}

TEST_CASE("orbit-stabilizer on Sym(3)") {
  const auto elements = group_enumerate(sym3(), 100);
  std::size_t stab = 0;
  for (const auto& g : elements)
    if (g(0) == 0) ++stab;
  CHECK(elements.size() == orbit(sym3(), 0).size() * stab);
}
