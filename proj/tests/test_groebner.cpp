#include <doctest.h>

#include "quiverforge/polynomial.hpp"

using namespace quiverforge;
using namespace quiverforge::groebner;

namespace {
Polynomial var(std::size_t n, std::size_t i) { return Polynomial::variable(n, i); }
Polynomial cst(std::size_t n, long c) { return Polynomial::constant(n, Rational(c)); }
}  // namespace

TEST_CASE("unit ideals") {
  const std::size_t n = 2;
  const auto x = var(n, 0), y = var(n, 1);
  // x y - 1, x
  auto r = groebner_basis({x * y - cst(n, 1), x});
  CHECK(r.verdict == IdealVerdict::unit);
  // x^2 + 1 has no rational root but is a proper ideal over the closure
  r = groebner_basis({x * x + cst(n, 1)});
  CHECK(r.verdict == IdealVerdict::proper);
  r = groebner_basis({});
  CHECK(r.verdict == IdealVerdict::proper);
  r = groebner_basis({cst(n, 3)});
  CHECK(r.verdict == IdealVerdict::unit);
}

TEST_CASE("a reduced basis reduces its generators to zero") {
  const std::size_t n = 3;
  const auto x = var(n, 0), y = var(n, 1), z = var(n, 2);
  const std::vector<Polynomial> gens{x * x - y, x * y - z, x * z - cst(n, 1) * y * y};
  const auto r = groebner_basis(gens);
  REQUIRE(r.verdict == IdealVerdict::proper);
  for (const auto& g : gens) CHECK(normal_form(g, r.basis).is_zero());
  // twisted cubic-like ideal contains y^3 - z^2 * ... check a product lies in it
  CHECK(normal_form((x * x - y) * z, r.basis).is_zero());
}

TEST_CASE("inconsistent linear system") {
  const std::size_t n = 3;
  const auto x = var(n, 0), y = var(n, 1), z = var(n, 2);
  const auto r = groebner_basis({x + y - cst(n, 1), y + z, x - z - cst(n, 2)});
  CHECK(r.verdict == IdealVerdict::unit);
}

TEST_CASE("resource caps give undecided") {
  const std::size_t n = 3;
  const auto x = var(n, 0), y = var(n, 1), z = var(n, 2);
  GroebnerLimits tight;
  tight.max_basis = 1;
  const auto r = groebner_basis({x * x - y, y * y - z, z * z - x}, tight);
  CHECK(r.verdict == IdealVerdict::undecided);
}

TEST_CASE("grevlex ordering") {
  const std::size_t n = 2;
  const auto x = var(n, 0), y = var(n, 1);
  const Polynomial p = y * y + x * y * y + x;
  CHECK(p.leading().monomial.degree() == 3);
  CHECK(p.evaluate({Rational(2), Rational(1)}) == Rational(5));
}
