#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "quiverforge/core.hpp"

namespace quiverforge {

/// phi(i) : M(i) -> N(i), indexed by vertex.
using Morphism = std::vector<Matrix>;
/// Z(a) : M(ta) -> N(ha), indexed by arrow.
using Cocycle = std::vector<Matrix>;

struct HomBasis {
  std::size_t dim = 0;
  std::vector<Morphism> basis;
};

/// Ext^1(M, N) as ker d1 / im d0 of the two-step complex
///   (+)_i Hom(M(i),N(i)) -d0-> (+)_a Hom(M(ta),N(ha)) -d1-> (+)_r Hom(M(tr),N(hr)).
/// The basis holds canonical coset representatives: zero on the pivot
/// coordinates of im d0 and in reduced echelon form among themselves.
struct ExtCocycleBasis {
  std::size_t dim = 0;
  std::vector<Cocycle> basis;
};

HomBasis hom_space(const Representation& m, const Representation& n);
ExtCocycleBasis ext1_space(const Representation& m, const Representation& n);

std::size_t hom_dim(const Representation& m, const Representation& n);
std::size_t ext1_dim(const Representation& m, const Representation& n);

/// phi(ha) M(a) == N(a) phi(ta) for every arrow.
bool is_morphism(const Representation& m, const Representation& n, const Morphism& phi);
/// Every relation, differentiated along Z, vanishes.
bool is_cocycle(const Representation& m, const Representation& n, const Cocycle& z);
/// Z lies in im d0.
bool is_coboundary(const Representation& m, const Representation& n, const Cocycle& z);

/// Middle term of the extension 0 -> N -> X -> M -> 0 given by the cocycle Z:
/// X(i) = N(i) (+) M(i) and X(a) = [[N(a), Z(a)], [0, M(a)]].
Representation extension_module(const Representation& m, const Representation& n, const Cocycle& z);

struct EulerPairingReport {
  std::int64_t hom = 0;
  std::int64_t ext1 = 0;
  std::int64_t pairing = 0;
  /// pairing - hom + ext1, present when gldim <= 2 is known.
  std::optional<std::int64_t> inferred_ext2;
  /// pairing - (hom - ext1), always reported.
  std::int64_t defect = 0;
  bool consistent = true;  // false when inferred ext2 < 0
};

EulerPairingReport euler_pairing_check(const Representation& m, const Representation& n);

std::size_t end_dim(const Representation& m);
bool is_schur(const Representation& m);
/// sum_i d(i)^2 - dim End(M).
std::int64_t orbit_dimension(const Representation& m);

}  // namespace quiverforge
