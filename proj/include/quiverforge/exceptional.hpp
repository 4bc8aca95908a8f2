#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quiverforge/core.hpp"
#include "quiverforge/forms.hpp"
#include "quiverforge/genericrep.hpp"
#include "quiverforge/homology.hpp"
#include "quiverforge/stability.hpp"

namespace quiverforge {

struct ExceptionalOptions {
  std::uint64_t seed = 7;
  std::size_t attempts = 64;
  /// Entries are drawn from [-range, range]; the range grows by one every
  /// `widen_every` failed attempts.
  std::int64_t range = 1;
  std::size_t widen_every = 16;
};

/// Random small-integer module of dimension r with End = k and no
/// self-extensions. Hereditary algebras only; requires q(r) = 1.
Representation construct_exceptional(const AlgebraPtr& a, const DimVector& r, const ExceptionalOptions& options = {});

struct SequenceReport {
  /// table[i][j] compares (E_i, E_j).
  std::vector<std::vector<EulerPairingReport>> table;
  std::vector<std::size_t> end_dims;
  bool condition1 = true;  // each E_i exceptional
  bool condition2 = true;  // Ext^l(E_i, E_j) = 0 for i < j, l = 0, 1, 2
  bool condition3 = true;  // Hom(E_j, E_i) = 0 for i < j
  std::vector<std::string> failures;
  bool ok() const { return condition1 && condition2 && condition3; }
};

SequenceReport verify_orthogonal_exceptional(const std::vector<Representation>& sequence);

struct ExceptionalPair {
  Representation e1;
  Representation e2;
  ExtCocycleBasis cocycles;  // Ext^1(E2, E1)
  SequenceReport report;
};

/// Computes the certificate table and the cocycle basis; does not throw on
/// failed conditions (inspect `report`).
ExceptionalPair make_exceptional_pair(Representation e1, Representation e2);

/// Vertices "1" and "2", one arrow 2 -> 1 per cocycle (named x, y, z, then
/// g004, g005, ...). Throws CertificateError when the pair does not verify or
/// an inferred Ext^2 between the members is nonzero.
AlgebraPtr build_quotient_algebra(const ExceptionalPair& pair);

/// Block-triangular realization of the functor on a module over the quotient
/// algebra. Throws CertificateError if the result breaks a relation of A.
Representation lift(const ExceptionalPair& pair, const Representation& mprime);

/// Moves a module over a two-arrow Kronecker quiver onto the quotient algebra:
/// the source goes to vertex "2", the sink to "1", arrows in id order to x, y.
Representation kronecker_to_quotient(const Representation& kronecker_module, const AlgebraPtr& quotient);

struct PairSearchOptions {
  std::uint64_t seed = 7;
  /// A theta_h-stable module of dimension h; mandatory for algebras with relations.
  std::optional<Representation> witness;
  SubrepOptions subrep;
  std::size_t stable_module_attempts = 64;
};

struct PairSearchResult {
  DimVector h;
  Weight theta_h;
  Representation stable_module;  // dim h, theta_h-stable
  EffCone cone;
  std::size_t facet_index = 0;
  Weight theta0;
  StablePair stable_pair;  // ordered so theta_h(h1) < 0 < theta_h(h2)
  ExceptionalPair pair;
};

/// Throws StageError naming the failing stage.
PairSearchResult find_orthogonal_pair(const AlgebraPtr& a, const PairSearchOptions& options = {});

}  // namespace quiverforge
