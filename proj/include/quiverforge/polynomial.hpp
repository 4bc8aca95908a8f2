#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "quiverforge/rational.hpp"

namespace quiverforge::groebner {

/// Exponent vector with cached total degree. Ordered by graded reverse
/// lexicographic order.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint16_t> exps);

  std::size_t nvars() const noexcept { return exps_.size(); }
  unsigned degree() const noexcept { return degree_; }
  std::uint16_t operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<std::uint16_t>& exponents() const noexcept { return exps_; }

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// a / b, requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
  /// grevlex: a < b.
  friend bool operator<(const Monomial& a, const Monomial& b);

 private:
  std::vector<std::uint16_t> exps_;
  unsigned degree_ = 0;
};

struct Term {
  Monomial monomial;
  Rational coeff;
};

/// Sparse polynomial over Q; terms sorted by decreasing grevlex order, no
/// zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t i);

  std::size_t nvars() const noexcept { return nvars_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Nonzero constant.
  bool is_unit() const noexcept { return terms_.size() == 1 && terms_.front().monomial.degree() == 0; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  const Term& leading() const { return terms_.front(); }
  unsigned degree() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& s, const Polynomial& a);

  /// this -= c * m * other.
  void subtract_multiple(const Rational& c, const Monomial& m, const Polynomial& other);
  void make_monic();
  /// Removes and returns the leading term.
  Term pop_leading();
  /// Appends a term smaller than every current term.
  void append_smaller(Term t);

  Rational evaluate(const std::vector<Rational>& point) const;
  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

struct GroebnerLimits {
  std::size_t max_basis = 20000;
  unsigned max_degree = 40;
};

enum class IdealVerdict { unit, proper, undecided };

struct GroebnerResult {
  IdealVerdict verdict = IdealVerdict::proper;
  std::vector<Polynomial> basis;  // active basis elements; {1} for the unit ideal
  std::string detail;             // reason when undecided
};

/// Buchberger's algorithm with the Gebauer-Moeller criteria, normal selection
/// strategy, grevlex order. Stops as soon as a nonzero constant appears.
GroebnerResult groebner_basis(const std::vector<Polynomial>& generators, const GroebnerLimits& limits = {});

/// Normal form of f modulo the polynomials in g (full reduction).
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& g);

}  // namespace quiverforge::groebner
