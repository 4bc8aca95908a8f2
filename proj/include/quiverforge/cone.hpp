#pragma once

#include <cstddef>
#include <vector>

#include "quiverforge/rational.hpp"

namespace quiverforge {

using RationalVector = std::vector<Rational>;
using IntegerVector = std::vector<Integer>;

/// C = { x : E x = 0, A x <= 0 } in Q^n.
struct ConeConstraints {
  std::size_t ambient = 0;
  std::vector<RationalVector> equalities;
  std::vector<RationalVector> inequalities;
};

struct ConeFace {
  std::vector<std::size_t> rays;          // indices into ConeGenerators::rays
  std::vector<std::size_t> inequalities;  // inequalities whose face is exactly this one
  std::size_t dimension = 0;
};

/// V-representation of a cone: C = span(lineality) + cone(rays).
struct ConeGenerators {
  std::size_t ambient = 0;
  std::vector<IntegerVector> rays;        // extreme rays modulo lineality, primitive
  std::vector<IntegerVector> lineality;   // primitive, first nonzero entry positive
  std::size_t dimension = 0;
  std::vector<ConeFace> facets;
};

/// Exact double description. Rays are sorted lexicographically, facets by
/// their sorted ray lists.
ConeGenerators double_description(const ConeConstraints& c);

Rational dot(const RationalVector& a, const RationalVector& b);
RationalVector to_rational(const IntegerVector& v);

/// Checks E x = 0 and A x <= 0.
bool cone_contains(const ConeConstraints& c, const RationalVector& x);

}  // namespace quiverforge
