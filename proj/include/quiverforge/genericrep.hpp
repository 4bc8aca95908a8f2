#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "quiverforge/cone.hpp"
#include "quiverforge/core.hpp"
#include "quiverforge/forms.hpp"
#include "quiverforge/stability.hpp"

namespace quiverforge {

/// Memoized generic-subdimension recursion for one hereditary algebra.
/// Safe to share between threads; answers do not depend on query order.
class GenericSubdims {
 public:
  explicit GenericSubdims(AlgebraPtr algebra);

  /// Does a generic module of dimension d have a subrepresentation of dimension e?
  bool is_generic_sub(const DimVector& e, const DimVector& d);
  /// All such e, in subdimension_vectors order.
  std::vector<DimVector> of(const DimVector& d);

  const AlgebraPtr& algebra() const noexcept { return algebra_; }

 private:
  bool compute(const DimVector& e, const DimVector& d);

  AlgebraPtr algebra_;
  std::vector<std::vector<std::int64_t>> euler_;
  std::mutex mutex_;
  std::map<std::pair<DimVector, DimVector>, bool> memo_;
};

/// Throws InputError for algebras with relations.
std::vector<DimVector> generic_subdims(const AlgebraPtr& a, const DimVector& d);

enum class EffBackend { recursion, witness };

struct EffFacet {
  std::vector<std::size_t> rays;     // indices into EffCone::rays
  std::vector<DimVector> supports;   // subdimension vectors whose hyperplane cuts out the facet
  std::size_t dimension = 0;
};

struct EffCone {
  std::size_t ambient = 0;
  DimVector d;
  EffBackend backend = EffBackend::recursion;
  /// theta(e) <= 0 for each listed e (proper, nonzero).
  std::vector<DimVector> inequalities;
  std::vector<Weight> rays;
  std::vector<Weight> lineality;
  std::size_t dimension = 0;
  /// Sorted by their primitive relative-interior weight.
  std::vector<EffFacet> facets;

  ConeConstraints constraints() const;
  bool contains(const Weight& theta) const;
};

/// Recursion backend; A must be hereditary.
EffCone effective_cone(const AlgebraPtr& a, const DimVector& d);
/// Witness backend: the inequalities are the subdimension vectors of an
/// explicit module (assumed generic). Throws UndecidedError if any
/// subrepresentation query is undecided.
EffCone effective_cone(const Representation& witness, const SubrepOptions& options = {});

/// Primitive integer sum of the facet's rays, checked to be tight on exactly
/// the facet's supports. Throws InputError for degenerate or non-proper facets.
Weight facet_interior_weight(const EffCone& cone, const EffFacet& facet);

struct StablePair {
  DimVector h1;
  DimVector h2;
  std::int64_t n1 = 0;
  std::int64_t n2 = 0;
  std::int64_t l = 0;
};

/// Pairs (h1, h2) as described for the facet case; scanned over h1 in
/// subdimension_vectors order (last vertex most significant). Throws InputError
/// when nothing qualifies and CertificateError if a candidate breaks the
/// 2 n1 = n2 l, 2 n2 = n1 l, n1^2 + n2^2 = l n1 n2 identities.
StablePair facet_stable_pair(const AlgebraPtr& a, const DimVector& h, const Weight& theta0);
std::vector<StablePair> facet_stable_pairs(const AlgebraPtr& a, const DimVector& h, const Weight& theta0);

/// The facet equals Eff cut by the hyperplanes theta(h1) = 0 and theta(h2) = 0,
/// compared as sets of extreme rays.
bool facet_matches_pair(const EffCone& cone, const EffFacet& facet, const StablePair& pair);

}  // namespace quiverforge
