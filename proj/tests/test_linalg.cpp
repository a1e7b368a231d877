#include <doctest.h>

#include "qsw/linalg.hpp"

using namespace qsw;

TEST_CASE("echelon basis") {
  EchelonBasis b(3);
  CHECK(b.insert({{0, 1}, {1, 2}}));
  CHECK(b.insert({{1, 1}, {2, 1}}));
  CHECK_FALSE(b.insert({{0, 1}, {1, 3}, {2, 1}}));
  CHECK(b.rank() == 2);
  CHECK(b.contains({{0, 2}, {1, 5}, {2, 1}}));
  CHECK_FALSE(b.contains({{2, 1}}));
  CHECK(b.free_columns() == std::vector<std::size_t>{2});
  for (const auto& [pivot, row] : b.rows()) CHECK(row.at(pivot) == 1);
}

TEST_CASE("nullspace") {
  // x0 + x1 + x2 = 0, x0 - x2 = 0.
  const auto ns = nullspace({{{0, 1}, {1, 1}, {2, 1}}, {{0, 1}, {2, -1}}}, 3);
  REQUIRE(ns.size() == 1);
  const SparseVec& x = ns[0];
  auto get = [&](std::size_t k) { return x.count(k) ? x.at(k) : Rational(0); };
  CHECK(get(0) + get(1) + get(2) == 0);
  CHECK(get(0) == get(2));
  CHECK(get(1) != 0);
  CHECK(nullspace({}, 4).size() == 4);
}

TEST_CASE("rank and containment") {
  const std::vector<SparseVec> vs = {{{0, 1}}, {{1, Rational(1, 2)}}, {{0, 3}, {1, -4}}};
  CHECK(rank_of(vs, 2) == 2);
  EchelonBasis b(2);
  b.insert({{0, 1}});
  CHECK_FALSE(span_contains(b, vs));
  b.insert({{1, 7}});
  CHECK(span_contains(b, vs));
  SparseVec y = {{0, 1}};
  axpy(y, -1, {{0, 1}, {1, 2}});
  CHECK(y == SparseVec{{1, -2}});
}
