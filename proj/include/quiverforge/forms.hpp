#pragma once

#include <cstdint>
#include <vector>

#include "quiverforge/core.hpp"

namespace quiverforge {

/// Rational weight over the vertices (canonical vertex order).
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<Rational> entries) : v_(std::move(entries)) {}
  static Weight from_integers(const std::vector<std::int64_t>& entries);

  std::size_t size() const noexcept { return v_.size(); }
  const Rational& operator[](std::size_t i) const { return v_[i]; }
  Rational& operator[](std::size_t i) { return v_[i]; }
  const std::vector<Rational>& entries() const noexcept { return v_; }
  bool is_zero() const;
  bool is_integral() const;

  /// theta(d) = sum_i theta(i) d(i).
  Rational operator()(const DimVector& d) const;

  friend bool operator==(const Weight&, const Weight&) = default;

 private:
  std::vector<Rational> v_;
};

/// Entry (i,j) = sum_l (-1)^l dim Ext^l(S_i, S_j) = delta_ij - #arrows(i->j) + r(i,j)
/// for triangular algebras, or the user-supplied table otherwise.
std::vector<std::vector<std::int64_t>> euler_matrix(const BoundQuiverAlgebra& a);

std::int64_t euler_form(const BoundQuiverAlgebra& a, const DimVector& d, const DimVector& e);
std::int64_t tits_form(const BoundQuiverAlgebra& a, const DimVector& d);

/// Unique indivisible positive generator of the radical of the symmetrized
/// Euler form. Throws InputError when the radical is not one-dimensional or
/// not spanned by a strictly positive vector.
DimVector find_isotropic_root(const BoundQuiverAlgebra& a);

/// theta_h(i) = <h, e_i>.
Weight defect_weight(const BoundQuiverAlgebra& a, const DimVector& h);

enum class DefectClass { preprojective, regular, preinjective };
const char* to_string(DefectClass c);

DefectClass classify_by_defect(const Weight& theta_h, const DimVector& d);
DefectClass classify_by_defect(const Weight& theta_h, const Representation& x);

}  // namespace quiverforge
