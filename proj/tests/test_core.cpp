#include <doctest.h>

#include "fixtures.hpp"
#include "quiverforge/errors.hpp"
#include "quiverforge/pipeline.hpp"

using namespace quiverforge;
using fixtures::dv;

TEST_CASE("quiver construction checks ids") {
  CHECK_THROWS_AS(Quiver({"1", "1"}, {}), InputError);
  CHECK_THROWS_AS(Quiver({"1"}, {{"a", "1", "2"}}), InputError);
  CHECK_THROWS_AS(Quiver({"1", "2"}, {{"a", "1", "2"}, {"a", "2", "1"}}), InputError);
  const Quiver q({"2", "1"}, {{"b", "1", "2"}, {"a", "1", "2"}});
  CHECK(q.vertices() == std::vector<std::string>{"1", "2"});
  CHECK(q.arrow(0).id == "a");
  CHECK(q.arrows_between(0, 1) == 2);
  CHECK_FALSE(q.has_oriented_cycle());
  CHECK(Quiver({"1", "2"}, {{"a", "1", "2"}, {"b", "2", "1"}}).has_oriented_cycle());
}

TEST_CASE("relations must be parallel paths of length at least two") {
  const Quiver q = fixtures::load("commutative_square")->quiver();
  CHECK_THROWS_AS(Relation::make(q, {{Rational(1), {"p1"}}}), InputError);
  CHECK_THROWS_AS(Relation::make(q, {{Rational(1), {"p1", "q2"}}}), InputError);
  CHECK_THROWS_AS(Relation::make(q, {{Rational(1), {"p1", "p2"}}, {Rational(1), {"q1"}}}), InputError);
  const Relation r = Relation::make(q, {{Rational(1), {"p1", "p2"}}, {Rational(-1), {"q1", "q2"}}});
  CHECK(r.tail == 0);
  CHECK(r.head == 3);
}

TEST_CASE("validation of representations") {
  const auto k2 = fixtures::kronecker();
  CHECK(validate_representation(*k2, zwara_module().dim(), zwara_module().matrices()).ok());
  CHECK(Representation::zero(k2).is_zero());

  const auto sq = fixtures::load("commutative_square");
  RawRepresentation raw;
  raw.dim = {{"1", 1}, {"2", 1}, {"3", 1}, {"4", 1}};
  raw.matrices = {{"p1", Matrix{{1}}}, {"p2", Matrix{{1}}}, {"q1", Matrix{{1}}}, {"q2", Matrix{{2}}}};
  auto report = validate_representation(*sq, raw);
  REQUIRE_FALSE(report.ok());
  CHECK(report.violations[0].kind == Violation::Kind::relation_violation);
  CHECK(report.violations[0].value == Matrix{{-1}});
  raw.matrices["q2"] = Matrix{{1}};
  CHECK(validate_representation(*sq, raw).ok());

  raw.matrices["q2"] = Matrix{{1, 0}};
  CHECK(validate_representation(*sq, raw).violations[0].kind == Violation::Kind::shape_mismatch);
  raw.matrices["zz"] = Matrix{{1}};
  bool unknown = false;
  for (const auto& v : validate_representation(*sq, raw).violations)
    unknown = unknown || v.kind == Violation::Kind::unknown_arrow;
  CHECK(unknown);
  CHECK_THROWS_AS(Representation::from_raw(sq, raw), InvalidRepresentation);
}

TEST_CASE("path evaluation") {
  const Representation z = zwara_module();
  CHECK(evaluate_trivial_path(z, 0) == Matrix::identity(3));
  // both arrows run 1 -> 2, so no path of length two
  CHECK_THROWS_AS(evaluate_path(z, std::vector<std::string>{"a", "b"}), InputError);
  CHECK_THROWS_AS(evaluate_path(z, std::vector<std::string>{"a", "a"}), InputError);
  const auto a3 = fixtures::a3();
  const Representation p(a3, dv({1, 2, 2}), {Matrix{{1}, {2}}, Matrix{{1, 1}, {0, 3}}});
  CHECK(evaluate_path(p, std::vector<std::string>{"a", "b"}) == Matrix{{3}, {6}});
  const auto sq = fixtures::load("commutative_square");
  RawRepresentation raw;
  raw.dim = {{"1", 1}, {"2", 2}, {"3", 1}, {"4", 1}};
  raw.matrices = {{"p1", Matrix{{1}, {2}}}, {"p2", Matrix{{1, 1}}}, {"q1", Matrix{{3}}}, {"q2", Matrix{{1}}}};
  const Representation m = Representation::from_raw(sq, raw);
  CHECK(evaluate_path(m, std::vector<std::string>{"p1", "p2"}) == Matrix{{3}});
}

TEST_CASE("direct sums") {
  const auto k2 = fixtures::kronecker();
  const Representation s = direct_sum(Representation::simple(k2, 0), Representation::simple(k2, 1));
  CHECK(s.dim() == dv({1, 1}));
  CHECK(s.matrix(0).is_zero());
  const Representation zz = direct_sum(zwara_module(), zwara_module());
  CHECK(zz.dim() == dv({6, 6}));
  CHECK(zz.matrix(0).block(0, 0, 3, 3) == zwara_module().matrix(0));
  CHECK(zz.matrix(0).block(0, 3, 3, 3).is_zero());
  CHECK(direct_sum(zwara_module(), Representation::zero(k2)) == zwara_module());
}

TEST_CASE("subdimension vectors are enumerated with the first vertex fastest") {
  const auto subs = subdimension_vectors(dv({1, 2}));
  REQUIRE(subs.size() == 6);
  CHECK(subs[0] == dv({0, 0}));
  CHECK(subs[1] == dv({1, 0}));
  CHECK(subs[2] == dv({0, 1}));
  CHECK(subs[5] == dv({1, 2}));
  CHECK(dv({2, 4}).gcd() == 2);
  CHECK_FALSE(dv({2, 4}).indivisible());
}
