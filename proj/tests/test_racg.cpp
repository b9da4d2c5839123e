#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "coxrh/io.hpp"
#include "coxrh/racg.hpp"
#include "coxrh/relhyp.hpp"
#include "coxrh/testkit.hpp"

using namespace coxrh;

namespace {

// K(2,2) plus an apex adjacent to everything: the smallest graph where the
// common-neighbor condition fails, and it fails only through a non-triangle
// whose witness parabolic is disconnected.
SimpleGraph k22_apex() {
  return SimpleGraph(5, {{0, 2}, {0, 3}, {1, 2}, {1, 3},
                         {4, 0}, {4, 1}, {4, 2}, {4, 3}});
}

}  // namespace

TEST_CASE("graph validation") {
  CHECK_THROWS_AS(SimpleGraph(3, {{0, 0}}), Error);
  CHECK_THROWS_AS(SimpleGraph(3, {{0, 1}, {1, 0}}), Error);
  CHECK_THROWS_AS(SimpleGraph(3, {{0, 5}}), Error);
  CHECK_THROWS_AS(SimpleGraph(30, {}), Error);
  SimpleGraph g(3, {{2, 0}});
  CHECK(g.has_edge(0, 2));
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 2}});
  CHECK(g.name(0) == "v1");
}

TEST_CASE("from_graph") {
  SimpleGraph c4 = SimpleGraph::cycle(4);
  CoxeterMatrix m = from_graph(c4);
  CHECK(m.order(0, 1) == 2);
  CHECK(m.order(0, 2) == kInfinity);
  CHECK(m.order(1, 3) == kInfinity);
  CHECK(m.name(2) == "v3");
  CoxeterMatrix k = from_graph(SimpleGraph::complete(4));
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) CHECK(k.order(i, j) == 2);
}

TEST_CASE("condition (ii) on small graphs") {
  CHECK(condition_ii_graph(SimpleGraph::cycle(4)).holds);
  CHECK(condition_ii_graph(SimpleGraph::cycle(5)).holds);
  CHECK(condition_ii_graph(SimpleGraph::complete(5)).holds);

  ConditionIiResult bad = condition_ii_graph(k22_apex());
  CHECK(!bad.holds);
  REQUIRE(bad.witness.has_value());
  // the only failing triples are {v1,v2,v5} and {v3,v4,v5}
  auto [x, y, z] = *bad.witness;
  GenSet w = GenSet::of({x, y, z});
  CHECK((w == GenSet::of({0, 1, 4}) || w == GenSet::of({2, 3, 4})));
}

TEST_CASE("k22 apex regression fixture") {
  std::ifstream file(std::string(FIXTURE_DIR) + "/k22_apex.json");
  REQUIRE(file.good());
  std::stringstream buf;
  buf << file.rdbuf();
  InputDocument doc = parse_input(buf.str(), InputFormat::Json);
  const SimpleGraph& g = doc.require_graph();
  REQUIRE(g.vertex_count() == 5);
  CHECK(g.edges() == k22_apex().edges());
  CHECK(!condition_ii_graph(g).holds);
}

TEST_CASE("five vertices is the smallest failing size") {
  // every graph on <= 4 vertices satisfies the condition: a common
  // neighborhood of three vertices has at most one member
  std::vector<std::pair<int, int>> pairs4;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) pairs4.emplace_back(i, j);
  for (std::uint32_t mask = 0; mask < (1u << 6); ++mask) {
    std::vector<std::pair<int, int>> edges;
    for (int b = 0; b < 6; ++b)
      if ((mask >> b) & 1) edges.push_back(pairs4[b]);
    CHECK(condition_ii_graph(SimpleGraph(4, std::move(edges))).holds);
  }

  // at 5 vertices failures appear, and the recorded fixture is one of them
  std::vector<std::pair<int, int>> pairs5;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) pairs5.emplace_back(i, j);
  int failing = 0;
  for (std::uint32_t mask = 0; mask < (1u << 10); ++mask) {
    std::vector<std::pair<int, int>> edges;
    for (int b = 0; b < 10; ++b)
      if ((mask >> b) & 1) edges.push_back(pairs5[b]);
    if (!condition_ii_graph(SimpleGraph(5, std::move(edges))).holds) ++failing;
  }
  CHECK(failing > 0);
  CHECK(!condition_ii_graph(k22_apex()).holds);
}

TEST_CASE("k22 apex fails only through a disconnected witness") {
  CoxeterMatrix m = from_graph(k22_apex());
  IsolatedFlatsResult r = isolated_flats(m);
  CHECK(!r.holds);
  REQUIRE(r.violating_subset.has_value());
  CHECK(!m.connected(*r.violating_subset));

  // every connected minimal hyperbolic subset has spherical perp here
  SubsetTable table(m);
  for (GenSet j : minimal_hyperbolic_subsets(m).sets)
    if (m.connected(j)) CHECK(table.spherical(m.perp(j)));
}

TEST_CASE("racg minimal hyperbolic sets are the non-triangle triples") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    SimpleGraph a = random_graph(6, seed);
    CoxeterMatrix m = from_graph(a);
    SubsetTable table(m);
    const std::uint32_t full = GenSet::full(6).mask();
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
      GenSet j = GenSet::from_mask(mask);
      bool non_triangle_triple = false;
      if (j.size() == 3) {
        non_triangle_triple = !table.spherical(j);
      }
      CAPTURE(seed);
      CAPTURE(j.to_string());
      CHECK(table.minimal_hyperbolic(j) == non_triangle_triple);
    }
  }
}

TEST_CASE("bridge: graph condition equals the matrix condition") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    SimpleGraph a = random_graph(4 + static_cast<int>(seed % 4), seed);
    CAPTURE(seed);
    CHECK(condition_ii_graph(a).holds == isolated_flats(from_graph(a)).holds);
  }
}

TEST_CASE("join sets are Euclidean and match the maximal Euclidean sets") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    SimpleGraph a = random_graph(5 + static_cast<int>(seed % 3), seed);
    CoxeterMatrix m = from_graph(a);
    SubsetTable table(m);

    auto sets = enumerate_iaff(a);
    for (const auto& js : sets) {
      CAPTURE(seed);
      CHECK(table.euclidean(js.members));
      CHECK(!table.spherical(js.members));
    }

    if (!condition_ii_graph(a).holds) continue;

    // Under the common-neighbor condition, stripping the spherical
    // components from each maximal Euclidean non-spherical subset with at
    // least two infinite pairs recovers exactly the maximal join sets.
    std::vector<GenSet> from_euclidean;
    for (GenSet k : maximal_euclidean_subsets(m)) {
      GenSet core;
      int pairs = 0;
      for (GenSet comp : m.components(k))
        if (!table.spherical(comp)) {
          core |= comp;
          ++pairs;
        }
      if (pairs >= 2) from_euclidean.push_back(core);
    }
    std::sort(from_euclidean.begin(), from_euclidean.end());
    from_euclidean.erase(
        std::unique(from_euclidean.begin(), from_euclidean.end()),
        from_euclidean.end());

    std::vector<GenSet> from_joins;
    for (const auto& js : sets)
      if (js.maximal) from_joins.push_back(js.members);
    std::sort(from_joins.begin(), from_joins.end());

    CAPTURE(seed);
    CHECK(from_euclidean == from_joins);
  }
}

TEST_CASE("enumerate_iaff") {
  auto sets = enumerate_iaff(SimpleGraph::cycle(4));
  REQUIRE(sets.size() == 1);
  CHECK(sets[0].members == GenSet::full(4));
  CHECK(sets[0].maximal);
  CHECK(sets[0].pairs == std::vector<std::pair<int, int>>{{0, 2}, {1, 3}});

  CHECK(enumerate_iaff(SimpleGraph::cycle(5)).empty());
  CHECK(enumerate_iaff(SimpleGraph::complete(6)).empty());

  // single non-edge counts when min_pairs is 1
  SimpleGraph path(2, {});
  auto singles = enumerate_iaff(path, 1);
  REQUIRE(singles.size() == 1);
  CHECK(singles[0].pairs == std::vector<std::pair<int, int>>{{0, 1}});
  CHECK_THROWS_AS(enumerate_iaff(path, 0), Error);

  // octahedron = 3-fold join of non-edges: one 3-pair set, three 2-pair
  // subsets inside it
  SimpleGraph oct(6, {{0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {1, 4},
                      {1, 5}, {2, 4}, {2, 5}, {3, 4}, {3, 5}});
  auto oct_sets = enumerate_iaff(oct);
  CHECK(oct_sets.size() == 4);
  int maximal = 0;
  for (const auto& js : oct_sets) maximal += js.maximal;
  CHECK(maximal == 1);
}

TEST_CASE("gamma_structure") {
  SimpleGraph c4 = SimpleGraph::cycle(4);
  auto sets = enumerate_iaff(c4);
  REQUIRE(sets.size() == 1);
  CHECK(gamma_structure(c4, sets[0]) == "(P1 * P3) × (P2 * P4)");
  CHECK(gamma_structure(c4, sets[0], {"A", "B", "C", "D"}) ==
        "(A * C) × (B * D)");

  AffJoinSet bad;
  bad.pairs = {{0, 1}};
  bad.members = GenSet::of({0, 1});
  CHECK_THROWS_AS(gamma_structure(c4, bad), Error);  // {0,1} is an edge
  try {
    gamma_structure(c4, bad);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidJoinSet);
  }

  AffJoinSet mismatch;
  mismatch.pairs = {{0, 2}};
  mismatch.members = GenSet::of({0, 2, 3});
  CHECK_THROWS_AS(gamma_structure(c4, mismatch), Error);
}
