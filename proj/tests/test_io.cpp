#include <doctest.h>

#include "fixtures.hpp"
#include "quiverforge/errors.hpp"
#include "quiverforge/io.hpp"
#include "quiverforge/pipeline.hpp"

using namespace quiverforge;
using fixtures::dv;
using fixtures::wt;
using io::json;

TEST_CASE("algebra round trip") {
  for (const auto& a : {fixtures::kronecker(), fixtures::d4(), fixtures::canonical(), fixtures::load("commutative_square")}) {
    const auto b = io::algebra_from_json(io::to_json(*a));
    CHECK(*a == *b);
  }
}

TEST_CASE("malformed algebras") {
  CHECK_THROWS_AS(io::algebra_from_json(json::parse(R"({"vertices":["1"],"arrows":[{"id":"a","tail":"1","head":"9"}]})")),
                  InputError);
  CHECK_THROWS_AS(io::algebra_from_json(json::parse(R"({"arrows":[]})")), InputError);
  CHECK_THROWS_AS(io::algebra_from_json(json::parse(R"({"vertices":["1","1"],"arrows":[]})")), InputError);
  CHECK_THROWS_AS(io::read_json_file("/nonexistent/file.json"), InputError);
}

TEST_CASE("representation round trip") {
  const auto a = fixtures::d4();
  auto m = fixtures::random_module(a, dv({2, 1, 1, 1, 1}), 3);
  auto mats = m.matrices();
  mats[0](0, 0) = Rational(1, 3);
  m = Representation(a, m.dim(), mats);
  const json j = io::to_json(m);
  CHECK(j["matrices"]["a1"][0][0] == "1/3");
  CHECK(io::representation_from_json(a, j) == m);

  json bad = j;
  bad["matrices"]["a1"] = json::array({json::array({"1"})});
  CHECK_THROWS(io::representation_from_json(a, bad));

  const auto w = fixtures::canonical_witness(fixtures::canonical());
  CHECK(io::representation_from_json(w.algebra(), io::to_json(w)) == w);
}

TEST_CASE("dimension vectors and weights") {
  const auto a = fixtures::d4();
  const auto& q = a->quiver();
  CHECK(io::parse_dim(q, "2,1,1,1,1") == dv({2, 1, 1, 1, 1}));
  CHECK_THROWS_AS(io::parse_dim(q, "2,1"), InputError);
  CHECK_THROWS_AS(io::parse_dim(q, "2,1,1,1,-1"), InputError);
  CHECK(io::dim_from_json(q, io::dim_to_json(q, dv({6, 3, 3, 3, 3}))) == dv({6, 3, 3, 3, 3}));
  CHECK(io::parse_weight(q, "-3,0,2,2,2") == wt({-3, 0, 2, 2, 2}));
  const Weight half(std::vector<Rational>{Rational(1, 2), 0, 0, 0, Rational(-1, 2)});
  CHECK(io::weight_from_json(q, io::weight_to_json(q, half)) == half);
}

TEST_CASE("effective cone and stable pair round trip") {
  const auto a = fixtures::d4();
  const auto c = effective_cone(a, dv({2, 1, 1, 1, 1}));
  const auto back = io::eff_cone_from_json(a->quiver(), io::to_json(a->quiver(), c));
  CHECK(back.rays == c.rays);
  CHECK(back.dimension == c.dimension);
  CHECK(back.facets.size() == c.facets.size());
  CHECK(back.inequalities == c.inequalities);
  const StablePair p{dv({0, 1, 0, 0, 0}), dv({2, 0, 1, 1, 1}), 1, 1, 2};
  const auto pb = io::stable_pair_from_json(a->quiver(), io::to_json(a->quiver(), p));
  CHECK(pb.h1 == p.h1);
  CHECK(pb.h2 == p.h2);
  CHECK(pb.l == 2);
}

TEST_CASE("instance round trip") {
  for (const auto& a : {fixtures::d4(), fixtures::kronecker()}) {
    const auto inst = build_bad_orbit_instance(a);
    const json j = io::to_json(inst);
    CHECK(j["schema_version"] == io::schema_version);
    CHECK(j["kind"] == "bad_orbit_instance");
    const auto back = io::instance_from_json(j);
    CHECK(back.d == inst.d);
    CHECK(back.m == inst.m);
    CHECK(io::dump(io::to_json(back)) == io::dump(j));
    CHECK(verify_instance(back).ok());
  }
}

TEST_CASE("stored modules that break relations are rejected") {
  const auto a = fixtures::canonical();
  PipelineOptions opt;
  opt.witness = fixtures::canonical_witness(a);
  json j = io::to_json(build_bad_orbit_instance(a, opt));
  j["module"]["matrices"]["b1"][0][1] = "17";
  CHECK_THROWS_AS(io::instance_from_json(j), CertificateError);
}
