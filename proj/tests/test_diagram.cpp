#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coxrh/diagram.hpp"

using namespace coxrh;

namespace {

CoxeterMatrix triangle(int a, int b, int c) {
  return CoxeterMatrix(3, {{1, a, b}, {a, 1, c}, {b, c, 1}});
}

}  // namespace

TEST_CASE("genset basics") {
  GenSet s = GenSet::of({0, 2, 5});
  CHECK(s.size() == 3);
  CHECK(s.contains(2));
  CHECK(!s.contains(1));
  CHECK(s.lowest() == 0);
  CHECK(s.to_string() == "{0,2,5}");
  CHECK(GenSet::full(3) == GenSet::of({0, 1, 2}));
  CHECK((s - GenSet::of({2})) == GenSet::of({0, 5}));
  CHECK(GenSet::of({0, 1}).subset_of(s) == false);
  CHECK(GenSet::of({0, 5}).subset_of(s));

  std::vector<int> seen;
  for (int i : s) seen.push_back(i);
  CHECK(seen == std::vector<int>{0, 2, 5});
}

TEST_CASE("matrix validation") {
  CHECK_THROWS_WITH_AS(CoxeterMatrix(2, {{1, 3}, {4, 1}}),
                       doctest::Contains("transpose"), Error);
  CHECK_THROWS_AS(CoxeterMatrix(2, {{2, 3}, {3, 1}}), Error);
  CHECK_THROWS_AS(CoxeterMatrix(2, {{1, 1}, {1, 1}}), Error);
  CHECK_THROWS_AS(CoxeterMatrix(2, {{1, 3}}), Error);
  try {
    CoxeterMatrix(25, std::vector<std::vector<int>>(25, std::vector<int>(25, 2)));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooLarge);
    CHECK(e.is_capacity());
  }
}

TEST_CASE("names") {
  CoxeterMatrix m = triangle(3, 2, 4);
  CHECK(m.name(0) == "s1");
  CHECK(m.name(2) == "s3");
  CoxeterMatrix named(2, {{1, 5}, {5, 1}}, {"a", "b"});
  CHECK(named.name(1) == "b");
  CHECK_THROWS_AS(CoxeterMatrix(2, {{1, 5}, {5, 1}}, {"a"}), Error);
}

TEST_CASE("adjacency and perp") {
  // path a-3-b-2-c-4-d
  CoxeterMatrix m(4, {{1, 3, 2, 2}, {3, 1, 2, 2}, {2, 2, 1, 4}, {2, 2, 4, 1}});
  CHECK(m.adjacent(0) == GenSet::of({1}));
  CHECK(m.commuting(0) == GenSet::of({2, 3}));
  CHECK(m.perp(GenSet::of({0, 1})) == GenSet::of({2, 3}));
  CHECK(m.perp(GenSet::of({0, 2})).empty());
  CHECK(m.perp(GenSet::of({2})) == GenSet::of({0, 1}));
  CHECK(m.perp(GenSet::of({})) == m.all());
  CHECK(m.commutes(GenSet::of({0, 1}), GenSet::of({2, 3})));
  CHECK(!m.commutes(GenSet::of({0, 2}), GenSet::of({1, 3})));
}

TEST_CASE("components") {
  CoxeterMatrix m(5, {{1, 3, 2, 2, 2},
                      {3, 1, 2, 2, 2},
                      {2, 2, 1, 0, 2},
                      {2, 2, 0, 1, 2},
                      {2, 2, 2, 2, 1}});
  auto comps = m.components(m.all());
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == GenSet::of({0, 1}));
  CHECK(comps[1] == GenSet::of({2, 3}));
  CHECK(comps[2] == GenSet::of({4}));
  CHECK(m.connected(GenSet::of({0, 1})));
  CHECK(!m.connected(GenSet::of({0, 4})));
  CHECK(m.connected(GenSet::of({})));
  CHECK(m.connected(GenSet::of({2, 3})));  // infinity counts as an edge
}

TEST_CASE("induced submatrix") {
  CoxeterMatrix m = triangle(3, 5, 7);
  CoxeterMatrix sub = m.induced(GenSet::of({0, 2}));
  CHECK(sub.rank() == 2);
  CHECK(sub.order(0, 1) == 5);
  CHECK(sub.name(0) == "s1");
  CHECK(sub.name(1) == "s3");
}

TEST_CASE("subset range checking") {
  CoxeterMatrix m = triangle(3, 3, 3);
  CHECK_THROWS_AS(m.perp(GenSet::of({3})), Error);
  try {
    m.components(GenSet::of({0, 5}));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IndexOutOfRange);
  }
}

TEST_CASE("infinite order encoding") {
  CoxeterMatrix m(2, {{1, kInfinity}, {kInfinity, 1}});
  CHECK(m.order(0, 1) == kInfinity);
  CHECK(!order_is_finite(m.order(0, 1)));
  CHECK(m.adjacent(0) == GenSet::of({1}));
  CHECK(m.commuting(0).empty());
}
