#include <doctest.h>

#include "oracles.hpp"
#include "quiverforge/errors.hpp"
#include "quiverforge/matrix.hpp"
#include "quiverforge/random.hpp"

using namespace quiverforge;

TEST_CASE("rational text round trip") {
  CHECK(format_rational(parse_rational("6/4")) == "3/2");
  CHECK(format_rational(parse_rational("-0/5")) == "0");
  CHECK(format_rational(parse_rational("+7")) == "7");
  CHECK_THROWS_AS(parse_rational("3/-6"), InputError);
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("abc"), InputError);
  CHECK_THROWS_AS(parse_rational(""), InputError);
  CHECK_THROWS_AS(parse_rational("1.5"), InputError);
}

TEST_CASE("rref, rank and nullspace") {
  const Matrix m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  const Echelon e = rref(m);
  CHECK(e.rank() == 2);
  CHECK(e.pivots == std::vector<std::size_t>{0, 1});
  const auto ker = nullspace(m);
  REQUIRE(ker.size() == 1);
  CHECK(m.apply(ker[0]) == std::vector<Rational>(3));
  CHECK(rank(Matrix(0, 4)) == 0);
  CHECK(nullspace(Matrix(0, 3)).size() == 3);
}

TEST_CASE("rank agrees with an independent elimination on random matrices") {
  Rng rng(11);
  for (int t = 0; t < 40; ++t) {
    const auto r = static_cast<std::size_t>(rng.uniform(1, 6));
    const auto c = static_cast<std::size_t>(rng.uniform(1, 6));
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = Rational(rng.uniform(-2, 2), rng.uniform(1, 3));
    CHECK(rank(m) == oracle::rank(oracle::plain(m)));
    CHECK(nullspace(m).size() == c - rank(m));
  }
}

TEST_CASE("solve, inverse and kron") {
  const Matrix a{{2, 1}, {1, 1}};
  CHECK(a * inverse(a) == Matrix::identity(2));
  CHECK_THROWS(inverse(Matrix{{1, 2}, {2, 4}}));
  const Matrix tall{{1, 0}, {0, 1}, {1, 1}};
  CHECK(solve(tall, Matrix{{2}, {3}, {5}}) == Matrix{{2}, {3}});
  CHECK_THROWS(solve(tall, Matrix{{2}, {3}, {4}}));
  const Matrix k = kron(Matrix{{1, 2}}, Matrix::identity(2));
  CHECK(k == Matrix{{1, 0, 2, 0}, {0, 1, 0, 2}});
  CHECK(kron(Matrix(0, 3), Matrix(2, 2)).rows() == 0);
}

TEST_CASE("primitive integer vectors") {
  const std::vector<Rational> v{Rational(1, 2), Rational(-3, 4), Rational(0)};
  CHECK(primitive_integer(v) == std::vector<Integer>{2, -3, 0});
  CHECK(primitive_integer(std::vector<Rational>{0, 0}) == std::vector<Integer>{0, 0});
}
