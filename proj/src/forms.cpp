#include "quiverforge/forms.hpp"

#include <algorithm>

#include "quiverforge/errors.hpp"

namespace quiverforge {

Weight Weight::from_integers(const std::vector<std::int64_t>& entries) {
  std::vector<Rational> v;
  v.reserve(entries.size());
  for (auto x : entries) v.emplace_back(static_cast<long>(x));
  return Weight(std::move(v));
}

bool Weight::is_zero() const {
  return std::all_of(v_.begin(), v_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

bool Weight::is_integral() const {
  return std::all_of(v_.begin(), v_.end(), [](const Rational& x) { return x.get_den() == 1; });
}

Rational Weight::operator()(const DimVector& d) const {
  if (d.size() != v_.size()) throw InputError("weight and dimension vector sizes differ");
  Rational s = 0;
  for (std::size_t i = 0; i < v_.size(); ++i) s += v_[i] * static_cast<long>(d[i]);
  return s;
}

std::vector<std::vector<std::int64_t>> euler_matrix(const BoundQuiverAlgebra& a) {
  const std::size_t n = a.vertex_count();
  std::vector<std::vector<std::int64_t>> e(n, std::vector<std::int64_t>(n, 0));
  if (const auto& table = a.euler_matrix_override()) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Rational& x = (*table)(i, j);
        if (x.get_den() != 1) throw InputError("euler_matrix entries must be integers");
        e[i][j] = x.get_num().get_si();
      }
    return e;
  }
  if (!a.triangular())
    throw InputError("Euler form needs a triangular algebra or an explicit euler_matrix");
  for (std::size_t i = 0; i < n; ++i) e[i][i] = 1;
  for (const auto& arr : a.quiver().arrows()) e[arr.tail][arr.head] -= 1;
  for (const auto& r : a.relations()) e[r.tail][r.head] += 1;
  return e;
}

std::int64_t euler_form(const BoundQuiverAlgebra& a, const DimVector& d, const DimVector& e) {
  const std::size_t n = a.vertex_count();
  if (d.size() != n || e.size() != n) throw InputError("dimension vector size does not match the quiver");
  const auto m = euler_matrix(a);
  std::int64_t s = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s += d[i] * m[i][j] * e[j];
  return s;
}

std::int64_t tits_form(const BoundQuiverAlgebra& a, const DimVector& d) {
  if (a.euler_matrix_override() || !a.triangular()) return euler_form(a, d, d);
  // sum d(i)^2 - sum_a d(ta) d(ha) + sum r(i,j) d(i) d(j)
  std::int64_t q = 0;
  for (auto x : d) q += x * x;
  for (const auto& arr : a.quiver().arrows()) q -= d[arr.tail] * d[arr.head];
  for (const auto& r : a.relations()) q += d[r.tail] * d[r.head];
  return q;
}

DimVector find_isotropic_root(const BoundQuiverAlgebra& a) {
  const std::size_t n = a.vertex_count();
  const auto e = euler_matrix(a);
  Matrix sym(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) sym(i, j) = static_cast<long>(e[i][j] + e[j][i]);
  const auto kernel = nullspace(sym);
  if (kernel.size() != 1)
    throw InputError("radical of the Euler form has dimension " + std::to_string(kernel.size()) +
                     ", expected 1 (algebra outside the tame concealed class)");
  auto generator = primitive_integer(kernel.front());
  const bool positive = std::all_of(generator.begin(), generator.end(), [](const Integer& x) { return x > 0; });
  const bool negative = std::all_of(generator.begin(), generator.end(), [](const Integer& x) { return x < 0; });
  if (!positive && !negative)
    throw InputError("radical generator is not sign-definite (algebra outside the tame concealed class)");
  std::vector<std::int64_t> h;
  for (const auto& x : generator) h.push_back(Integer(abs(x)).get_si());
  return DimVector(std::move(h));
}

Weight defect_weight(const BoundQuiverAlgebra& a, const DimVector& h) {
  std::vector<std::int64_t> theta;
  for (std::size_t i = 0; i < a.vertex_count(); ++i)
    theta.push_back(euler_form(a, h, DimVector::unit(a.vertex_count(), i)));
  return Weight::from_integers(theta);
}

const char* to_string(DefectClass c) {
  switch (c) {
    case DefectClass::preprojective: return "P";
    case DefectClass::regular: return "R";
    case DefectClass::preinjective: return "Q";
  }
  return "?";
}

DefectClass classify_by_defect(const Weight& theta_h, const DimVector& d) {
  const int s = sgn(theta_h(d));
  if (s < 0) return DefectClass::preprojective;
  if (s == 0) return DefectClass::regular;
  return DefectClass::preinjective;
}

DefectClass classify_by_defect(const Weight& theta_h, const Representation& x) {
  return classify_by_defect(theta_h, x.dim());
}

}  // namespace quiverforge
