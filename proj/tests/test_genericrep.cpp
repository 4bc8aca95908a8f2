#include <doctest.h>

#include <thread>

#include "fixtures.hpp"
#include "quiverforge/errors.hpp"
#include "quiverforge/genericrep.hpp"

using namespace quiverforge;
using fixtures::dv;
using fixtures::wt;

TEST_CASE("generic subdimension vectors of Kronecker modules") {
  GenericSubdims g(fixtures::kronecker());
  for (std::int64_t k = 0; k <= 3; ++k) CHECK(g.is_generic_sub(dv({0, k}), dv({3, 3})));
  CHECK_FALSE(g.is_generic_sub(dv({1, 0}), dv({3, 3})));
  CHECK(g.is_generic_sub(dv({1, 1}), dv({3, 3})));
  CHECK(g.is_generic_sub(dv({2, 2}), dv({3, 3})));
  CHECK_FALSE(g.is_generic_sub(dv({1, 0}), dv({1, 2})));
  CHECK(g.is_generic_sub(dv({1, 2}), dv({2, 4})));
  CHECK_FALSE(g.is_generic_sub(dv({2, 1}), dv({2, 4})));
  const auto all = g.of(dv({1, 1}));
  CHECK(all == std::vector<DimVector>{dv({0, 0}), dv({0, 1}), dv({1, 1})});
  CHECK_THROWS_AS(generic_subdims(fixtures::canonical(), dv({1, 1, 1, 1, 1})), InputError);
}

TEST_CASE("generic answers bound every module") {
  // Gr_e is nonempty on a closed set: a generic yes holds for all modules,
  // and a generic no must show up on some random module.
  const auto k2 = fixtures::kronecker();
  GenericSubdims g(k2);
  const std::vector<DimVector> dims{dv({2, 2}), dv({2, 3}), dv({3, 2}), dv({1, 3})};
  for (const auto& d : dims) {
    std::vector<Representation> mods;
    for (std::uint64_t s = 0; s < 4; ++s) mods.push_back(fixtures::random_module(k2, d, 300 + s, 3));
    for (const auto& e : subdimension_vectors(d)) {
      CAPTURE(d);
      CAPTURE(e);
      int yes = 0;
      for (const auto& m : mods) yes += subrep_exists(m, e).decision == Decision::yes;
      if (g.is_generic_sub(e, d))
        CHECK(yes == 4);
      else
        CHECK(yes < 4);
    }
  }
}

TEST_CASE("memo is consistent across threads") {
  const auto a = fixtures::d4();
  GenericSubdims shared(a);
  const DimVector d = dv({4, 2, 2, 2, 2});
  std::vector<std::vector<DimVector>> results(4);
  std::vector<std::thread> threads;
  for (std::size_t t = 0; t < 4; ++t) threads.emplace_back([&, t] { results[t] = shared.of(d); });
  for (auto& t : threads) t.join();
  GenericSubdims fresh(a);
  const auto expected = fresh.of(d);
  for (const auto& r : results) CHECK(r == expected);
}

TEST_CASE("effective cones of Kronecker modules") {
  const auto k2 = fixtures::kronecker();
  const auto c33 = effective_cone(k2, dv({3, 3}));
  CHECK(c33.dimension == 1);
  CHECK(c33.rays == std::vector<Weight>{wt({1, -1})});
  CHECK(c33.lineality.empty());
  CHECK(c33.contains(wt({2, -2})));
  CHECK_FALSE(c33.contains(wt({-1, 1})));
  CHECK_FALSE(c33.contains(wt({1, 0})));
  const auto c11 = effective_cone(k2, dv({1, 1}));
  CHECK(c11.dimension == 1);
  CHECK(c11.rays == std::vector<Weight>{wt({1, -1})});
  const auto c12 = effective_cone(k2, dv({1, 2}));
  CHECK(c12.dimension == 1);
  CHECK(c12.rays == std::vector<Weight>{wt({2, -1})});
}

TEST_CASE("effective cone of the four-subspace dimension vector") {
  const auto a = fixtures::d4();
  const DimVector h = dv({2, 1, 1, 1, 1});
  const auto c = effective_cone(a, h);
  CHECK(c.dimension == 4);
  CHECK(c.contains(defect_weight(*a, h)));
  CHECK_FALSE(c.facets.empty());
  for (const auto& f : c.facets) {
    CHECK(f.dimension == 3);
    const Weight w = facet_interior_weight(c, f);
    CHECK(c.contains(w));
    CHECK(w(h) == 0);
  }
  // four distinct lines in the plane
  const Representation generic(a, h, {Matrix{{1}, {0}}, Matrix{{0}, {1}}, Matrix{{1}, {1}}, Matrix{{1}, {2}}});
  const auto g = effective_cone(generic);
  CHECK(g.backend == EffBackend::witness);
  CHECK(g.dimension == 4);
  CHECK(g.rays == c.rays);
  // a special module has more subrepresentations, so its cone sits inside
  const Representation special(a, h, {Matrix{{1}, {0}}, Matrix{{1}, {0}}, Matrix{{0}, {1}}, Matrix{{1}, {1}}});
  const auto s = effective_cone(special);
  for (const auto& r : s.rays) CHECK(c.contains(r));
  CHECK(s.rays != c.rays);
}

TEST_CASE("facet interior weight rejects degenerate facets") {
  const auto k2 = fixtures::kronecker();
  const auto c = effective_cone(k2, dv({3, 3}));
  REQUIRE(c.facets.size() == 1);
  CHECK(c.facets[0].rays.empty());
  CHECK_THROWS_AS(facet_interior_weight(c, c.facets[0]), InputError);
}

TEST_CASE("stable pairs on facets") {
  const auto a = fixtures::d4();
  const DimVector h = dv({2, 1, 1, 1, 1});
  const auto p = facet_stable_pair(a, h, wt({-1, 0, 1, 1, 0}));
  CHECK(p.h1 == dv({0, 1, 0, 0, 0}));
  CHECK(p.h2 == dv({2, 0, 1, 1, 1}));
  CHECK(p.n1 == 1);
  CHECK(p.n2 == 1);
  CHECK(p.l == 2);
  CHECK(euler_form(*a, p.h1, p.h2) == -2);
  CHECK_THROWS_AS(facet_stable_pair(a, h, wt({1, 1, 1, 1, 1})), InputError);

  const auto c = effective_cone(a, h);
  std::size_t matched = 0;
  for (const auto& f : c.facets) {
    const Weight w = facet_interior_weight(c, f);
    for (const auto& q : facet_stable_pairs(a, h, w)) {
      CHECK(q.h1 + q.h2 == h);
      matched += facet_matches_pair(c, f, q);
    }
  }
  CHECK(matched > 0);
}
