#include <doctest.h>

#include "quiverforge/cone.hpp"

using namespace quiverforge;

namespace {
RationalVector rv(std::initializer_list<long> xs) {
  RationalVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}
IntegerVector iv(std::initializer_list<long> xs) {
  IntegerVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}
}  // namespace

TEST_CASE("positive orthant") {
  ConeConstraints c{3, {}, {rv({-1, 0, 0}), rv({0, -1, 0}), rv({0, 0, -1})}};
  const auto g = double_description(c);
  CHECK(g.dimension == 3);
  CHECK(g.lineality.empty());
  CHECK(g.rays == std::vector<IntegerVector>{iv({0, 0, 1}), iv({0, 1, 0}), iv({1, 0, 0})});
  CHECK(g.facets.size() == 3);
  for (const auto& f : g.facets) CHECK(f.rays.size() == 2);
}

TEST_CASE("cone over a square has four rays and four facets") {
  // z >= |x|, z >= |y|
  ConeConstraints c{3, {}, {rv({1, 0, -1}), rv({-1, 0, -1}), rv({0, 1, -1}), rv({0, -1, -1})}};
  const auto g = double_description(c);
  CHECK(g.dimension == 3);
  CHECK(g.rays.size() == 4);
  CHECK(g.facets.size() == 4);
  for (const auto& r : g.rays) CHECK(cone_contains(c, to_rational(r)));
}

TEST_CASE("lineality and equalities") {
  ConeConstraints half{2, {}, {rv({0, -1})}};
  const auto g = double_description(half);
  CHECK(g.dimension == 2);
  CHECK(g.lineality == std::vector<IntegerVector>{iv({1, 0})});
  CHECK(g.rays == std::vector<IntegerVector>{iv({0, 1})});
  REQUIRE(g.facets.size() == 1);
  CHECK(g.facets[0].rays.empty());

  ConeConstraints ray{2, {rv({3, 3})}, {rv({0, 1})}};
  const auto r = double_description(ray);
  CHECK(r.dimension == 1);
  CHECK(r.rays == std::vector<IntegerVector>{iv({1, -1})});

  ConeConstraints point{2, {rv({1, 0})}, {rv({0, 1}), rv({0, -1})}};
  CHECK(double_description(point).dimension == 0);
}

TEST_CASE("redundant inequalities do not create facets") {
  ConeConstraints c{2, {}, {rv({-1, 0}), rv({0, -1}), rv({-1, -1})}};
  const auto g = double_description(c);
  CHECK(g.rays.size() == 2);
  CHECK(g.facets.size() == 2);
}
