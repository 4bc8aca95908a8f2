#include "quiverforge/genericrep.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "quiverforge/errors.hpp"

namespace quiverforge {

namespace {

std::int64_t pairing(const std::vector<std::vector<std::int64_t>>& euler, const DimVector& d, const DimVector& e) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < e.size(); ++j) s += d[i] * euler[i][j] * e[j];
  return s;
}

void require_hereditary(const BoundQuiverAlgebra& a, const char* what) {
  if (!a.hereditary() || !a.triangular())
    throw InputError(std::string(what) + " needs a path algebra without relations or oriented cycles");
}

RationalVector as_rational(const DimVector& d) {
  RationalVector v;
  for (auto x : d) v.emplace_back(static_cast<long>(x));
  return v;
}

Weight as_weight(const IntegerVector& v) { return Weight(to_rational(v)); }

IntegerVector primitive_sum(const std::vector<IntegerVector>& vs, std::size_t n) {
  RationalVector s(n);
  for (const auto& v : vs)
    for (std::size_t i = 0; i < n; ++i) s[i] += v[i];
  return primitive_integer(s);
}

EffCone build_cone(std::size_t n, const DimVector& d, std::vector<DimVector> ineq, EffBackend backend) {
  EffCone cone;
  cone.ambient = n;
  cone.d = d;
  cone.backend = backend;
  cone.inequalities = std::move(ineq);
  const ConeGenerators gen = double_description(cone.constraints());
  for (const auto& r : gen.rays) cone.rays.push_back(as_weight(r));
  for (const auto& l : gen.lineality) cone.lineality.push_back(as_weight(l));
  cone.dimension = gen.dimension;

  std::vector<std::pair<IntegerVector, EffFacet>> keyed;
  for (const auto& f : gen.facets) {
    EffFacet facet;
    facet.rays = f.rays;
    facet.dimension = f.dimension;
    for (auto i : f.inequalities) facet.supports.push_back(cone.inequalities[i]);
    std::vector<IntegerVector> rays;
    for (auto r : f.rays) rays.push_back(gen.rays[r]);
    keyed.emplace_back(primitive_sum(rays, n), std::move(facet));
  }
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  for (auto& [key, facet] : keyed) cone.facets.push_back(std::move(facet));
  return cone;
}

}  // namespace

GenericSubdims::GenericSubdims(AlgebraPtr algebra) : algebra_(std::move(algebra)) {
  require_hereditary(*algebra_, "generic_subdims");
  euler_ = euler_matrix(*algebra_);
}

bool GenericSubdims::compute(const DimVector& e, const DimVector& d) {
  if (e.is_zero() || e == d) return true;
  const DimVector rest = d - e;
  for (const auto& sub : subdimension_vectors(e)) {
    if (!is_generic_sub(sub, e)) continue;
    if (pairing(euler_, sub, rest) < 0) return false;
  }
  return true;
}

bool GenericSubdims::is_generic_sub(const DimVector& e, const DimVector& d) {
  if (e.size() != d.size() || !e.nonnegative() || !e.leq(d))
    throw InputError("generic_subdims: " + to_string(e) + " is not bounded by " + to_string(d));
  const auto key = std::make_pair(e, d);
  {
    std::lock_guard lock(mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  const bool value = compute(e, d);
  std::lock_guard lock(mutex_);
  memo_.emplace(key, value);
  return value;
}

std::vector<DimVector> GenericSubdims::of(const DimVector& d) {
  std::vector<DimVector> out;
  for (const auto& e : subdimension_vectors(d))
    if (is_generic_sub(e, d)) out.push_back(e);
  return out;
}

std::vector<DimVector> generic_subdims(const AlgebraPtr& a, const DimVector& d) {
  if (d.size() != a->vertex_count() || !d.nonnegative()) throw InputError("generic_subdims: bad dimension vector");
  GenericSubdims oracle(a);
  return oracle.of(d);
}

ConeConstraints EffCone::constraints() const {
  ConeConstraints c;
  c.ambient = ambient;
  c.equalities.push_back(as_rational(d));
  for (const auto& e : inequalities) c.inequalities.push_back(as_rational(e));
  return c;
}

bool EffCone::contains(const Weight& theta) const {
  return theta.size() == ambient && cone_contains(constraints(), theta.entries());
}

EffCone effective_cone(const AlgebraPtr& a, const DimVector& d) {
  if (d.size() != a->vertex_count() || !d.nonnegative()) throw InputError("effective_cone: bad dimension vector");
  require_hereditary(*a, "effective_cone (recursion backend)");
  std::vector<DimVector> ineq;
  for (const auto& e : generic_subdims(a, d))
    if (!e.is_zero() && e != d) ineq.push_back(e);
  return build_cone(a->vertex_count(), d, std::move(ineq), EffBackend::recursion);
}

EffCone effective_cone(const Representation& witness, const SubrepOptions& options) {
  const DimVector& d = witness.dim();
  std::vector<DimVector> ineq;
  std::vector<DimVector> undecided;
  for (const auto& e : subdimension_vectors(d)) {
    if (e.is_zero() || e == d) continue;
    const auto r = subrep_exists(witness, e, options);
    if (r.decision == Decision::yes) ineq.push_back(e);
    else if (r.decision == Decision::undecided) undecided.push_back(e);
  }
  if (!undecided.empty())
    throw UndecidedError("effective_cone: subrepresentation query undecided for e=" + to_string(undecided.front()));
  return build_cone(witness.quiver().vertex_count(), d, std::move(ineq), EffBackend::witness);
}

Weight facet_interior_weight(const EffCone& cone, const EffFacet& facet) {
  if (facet.dimension >= cone.dimension) throw InputError("facet_interior_weight: not a proper face");
  for (auto r : facet.rays)
    if (r >= cone.rays.size()) throw InputError("facet_interior_weight: facet does not belong to the cone");
  std::vector<IntegerVector> rays;
  for (auto r : facet.rays) {
    IntegerVector v;
    for (const auto& x : cone.rays[r].entries()) v.push_back(x.get_num());
    rays.push_back(std::move(v));
  }
  const IntegerVector sum = primitive_sum(rays, cone.ambient);
  if (std::all_of(sum.begin(), sum.end(), [](const Integer& x) { return sgn(x) == 0; }))
    throw InputError("facet_interior_weight: degenerate facet (no rays)");
  const Weight theta = as_weight(sum);
  if (!cone.contains(theta)) throw CertificateError("facet_interior_weight: weight left the cone");
  for (const auto& e : cone.inequalities) {
    bool tight_on_facet = true;
    for (auto r : facet.rays)
      if (sgn(cone.rays[r](e)) != 0) tight_on_facet = false;
    for (const auto& l : cone.lineality)
      if (sgn(l(e)) != 0) tight_on_facet = false;
    if ((sgn(theta(e)) == 0) != tight_on_facet)
      throw CertificateError("facet_interior_weight: tightness pattern differs at e=" + to_string(e));
  }
  for (const auto& e : facet.supports)
    if (sgn(theta(e)) != 0) throw CertificateError("facet_interior_weight: support not tight");
  return theta;
}

std::vector<StablePair> facet_stable_pairs(const AlgebraPtr& a, const DimVector& h, const Weight& theta0) {
  const auto n = a->vertex_count();
  if (h.size() != n || theta0.size() != n) throw InputError("facet_stable_pair: size mismatch");
  std::vector<StablePair> out;
  std::set<std::pair<DimVector, DimVector>> seen;
  for (const auto& h1 : subdimension_vectors(h)) {
    if (h1.is_zero() || !h1.indivisible() || sgn(theta0(h1)) != 0) continue;
    if (tits_form(*a, h1) != 1) continue;
    for (std::int64_t n1 = 1;; ++n1) {
      const DimVector used = n1 * h1;
      if (!used.leq(h)) break;
      const DimVector rest = h - used;
      if (rest.is_zero()) break;
      const std::int64_t n2 = rest.gcd();
      DimVector h2 = rest;
      for (std::size_t i = 0; i < n; ++i) h2[i] /= n2;
      if (h2 == h1 || sgn(theta0(h2)) != 0 || tits_form(*a, h2) != 1) continue;
      const std::int64_t p12 = euler_form(*a, h1, h2);
      const std::int64_t p21 = euler_form(*a, h2, h1);
      if (p12 > 0 || p21 > 0) continue;
      const auto key = h1 < h2 ? std::make_pair(h1, h2) : std::make_pair(h2, h1);
      if (!seen.insert(key).second) continue;
      StablePair p{h1, h2, n1, n2, -p12 - p21};
      if (2 * p.n1 != p.n2 * p.l || 2 * p.n2 != p.n1 * p.l || p.n1 * p.n1 + p.n2 * p.n2 != p.l * p.n1 * p.n2)
        throw CertificateError("facet_stable_pair: pair " + to_string(h1) + ", " + to_string(h2) +
                               " breaks the multiplicity identities");
      if (p.n1 != 1 || p.n2 != 1 || p.l != 2)
        throw CertificateError("facet_stable_pair: expected n1 = n2 = 1 and l = 2");
      out.push_back(std::move(p));
    }
  }
  return out;
}

StablePair facet_stable_pair(const AlgebraPtr& a, const DimVector& h, const Weight& theta0) {
  auto pairs = facet_stable_pairs(a, h, theta0);
  if (pairs.empty())
    throw InputError("facet_stable_pair: no pair of real roots on the hyperplane of the given weight");
  return pairs.front();
}

bool facet_matches_pair(const EffCone& cone, const EffFacet& facet, const StablePair& pair) {
  ConeConstraints cut = cone.constraints();
  cut.equalities.push_back(as_rational(pair.h1));
  cut.equalities.push_back(as_rational(pair.h2));
  const ConeGenerators gen = double_description(cut);

  ConeConstraints face = cone.constraints();
  for (const auto& e : facet.supports) face.equalities.push_back(as_rational(e));

  // generators of the cut lie on the facet
  for (const auto& r : gen.rays)
    if (!cone_contains(face, to_rational(r))) return false;
  for (const auto& l : gen.lineality) {
    auto v = to_rational(l);
    if (!cone_contains(face, v)) return false;
    for (auto& x : v) x = -x;
    if (!cone_contains(face, v)) return false;
  }
  // generators of the facet lie in the cut
  for (auto r : facet.rays)
    if (!cone_contains(cut, cone.rays[r].entries())) return false;
  for (const auto& l : cone.lineality) {
    if (!cone_contains(cut, l.entries())) return false;
  }
  return true;
}

}  // namespace quiverforge
