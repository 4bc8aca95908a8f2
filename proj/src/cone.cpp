#include "quiverforge/cone.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "quiverforge/matrix.hpp"

namespace quiverforge {

Rational dot(const RationalVector& a, const RationalVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  return s;
}

RationalVector to_rational(const IntegerVector& v) {
  RationalVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

bool cone_contains(const ConeConstraints& c, const RationalVector& x) {
  if (x.size() != c.ambient) return false;
  for (const auto& e : c.equalities)
    if (sgn(dot(e, x)) != 0) return false;
  for (const auto& a : c.inequalities)
    if (sgn(dot(a, x)) > 0) return false;
  return true;
}

namespace {

RationalVector primitive(const RationalVector& v) { return to_rational(primitive_integer(v)); }

void axpy(RationalVector& y, const Rational& s, const RationalVector& x) {
  for (std::size_t i = 0; i < y.size(); ++i)
    if (sgn(x[i]) != 0) y[i] += s * x[i];
}

std::size_t span_rank(const std::vector<RationalVector>& rows, std::size_t n) {
  if (rows.empty()) return 0;
  return rank(from_rows(rows, n));
}

std::vector<bool> zero_set(const RationalVector& r, const std::vector<RationalVector>& ineq, std::size_t processed) {
  std::vector<bool> z(processed);
  for (std::size_t i = 0; i < processed; ++i) z[i] = sgn(dot(ineq[i], r)) == 0;
  return z;
}

}  // namespace

ConeGenerators double_description(const ConeConstraints& c) {
  const std::size_t n = c.ambient;
  for (const auto& e : c.equalities)
    if (e.size() != n) throw std::invalid_argument("double_description: equality of wrong length");
  for (const auto& a : c.inequalities)
    if (a.size() != n) throw std::invalid_argument("double_description: inequality of wrong length");

  std::vector<RationalVector> lineality;
  if (c.equalities.empty()) {
    for (std::size_t i = 0; i < n; ++i) {
      RationalVector v(n);
      v[i] = 1;
      lineality.push_back(std::move(v));
    }
  } else {
    lineality = nullspace(from_rows(c.equalities, n));
  }
  std::vector<RationalVector> rays;

  for (std::size_t k = 0; k < c.inequalities.size(); ++k) {
    const RationalVector& a = c.inequalities[k];
    auto pivot = std::find_if(lineality.begin(), lineality.end(),
                              [&](const RationalVector& l) { return sgn(dot(a, l)) != 0; });
    if (pivot != lineality.end()) {
      RationalVector l = std::move(*pivot);
      lineality.erase(pivot);
      Rational al = dot(a, l);
      if (sgn(al) > 0) {
        for (auto& x : l) x = -x;
        al = -al;
      }
      for (auto& other : lineality) {
        const Rational s = dot(a, other) / al;
        if (sgn(s) != 0) axpy(other, -s, l);
      }
      for (auto& r : rays) {
        const Rational s = dot(a, r) / al;
        if (sgn(s) != 0) {
          axpy(r, -s, l);
          r = primitive(r);
        }
      }
      rays.push_back(primitive(l));
      continue;
    }

    std::vector<std::size_t> plus, minus;
    std::vector<RationalVector> next;
    std::vector<Rational> values(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) {
      values[i] = dot(a, rays[i]);
      if (sgn(values[i]) > 0) plus.push_back(i);
      else {
        if (sgn(values[i]) < 0) minus.push_back(i);
        next.push_back(rays[i]);
      }
    }
    if (plus.empty()) continue;
    std::vector<std::vector<bool>> zeros;
    for (const auto& r : rays) zeros.push_back(zero_set(r, c.inequalities, k));
    for (auto p : plus) {
      for (auto m : minus) {
        std::vector<bool> common(k);
        for (std::size_t i = 0; i < k; ++i) common[i] = zeros[p][i] && zeros[m][i];
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == m) continue;
          bool contains = true;
          for (std::size_t i = 0; i < k && contains; ++i)
            if (common[i] && !zeros[r][i]) contains = false;
          if (contains) adjacent = false;
        }
        if (!adjacent) continue;
        RationalVector combo(n);
        axpy(combo, values[p], rays[m]);
        axpy(combo, -values[m], rays[p]);
        next.push_back(primitive(combo));
      }
    }
    rays = std::move(next);
  }

  ConeGenerators out;
  out.ambient = n;
  for (const auto& l : lineality) {
    auto v = primitive_integer(l);
    auto first = std::find_if(v.begin(), v.end(), [](const Integer& x) { return sgn(x) != 0; });
    if (first != v.end() && sgn(*first) < 0)
      for (auto& x : v) x = -x;
    out.lineality.push_back(std::move(v));
  }
  for (const auto& r : rays) out.rays.push_back(primitive_integer(r));
  std::sort(out.rays.begin(), out.rays.end());
  out.rays.erase(std::unique(out.rays.begin(), out.rays.end()), out.rays.end());

  std::vector<RationalVector> lin_rows = lineality;
  std::vector<RationalVector> all = lin_rows;
  for (const auto& r : out.rays) all.push_back(to_rational(r));
  out.dimension = span_rank(all, n);
  if (out.dimension == 0) return out;

  std::map<std::vector<std::size_t>, ConeFace> faces;
  for (std::size_t i = 0; i < c.inequalities.size(); ++i) {
    std::vector<std::size_t> tight;
    std::vector<RationalVector> rows = lin_rows;
    for (std::size_t r = 0; r < out.rays.size(); ++r) {
      RationalVector v = to_rational(out.rays[r]);
      if (sgn(dot(c.inequalities[i], v)) == 0) {
        tight.push_back(r);
        rows.push_back(std::move(v));
      }
    }
    const std::size_t dim = span_rank(rows, n);
    if (dim + 1 != out.dimension) continue;
    auto& face = faces[tight];
    face.rays = tight;
    face.dimension = dim;
    face.inequalities.push_back(i);
  }
  for (auto& [key, face] : faces) out.facets.push_back(std::move(face));
  return out;
}

}  // namespace quiverforge
