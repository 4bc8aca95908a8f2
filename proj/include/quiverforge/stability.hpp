#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quiverforge/core.hpp"
#include "quiverforge/forms.hpp"
#include "quiverforge/polynomial.hpp"

namespace quiverforge {

/// Per-vertex d(i) x e(i) matrices whose columns form a basis of U(i).
using SubrepWitness = std::vector<Matrix>;

enum class Decision { yes, no, undecided };
const char* to_string(Decision d);

enum class SubrepBackend { certifier, decider };

struct SubrepOptions {
  groebner::GroebnerLimits limits;
  std::uint64_t seed = 0x9a11;
  /// Random parameter assignments tried per Schubert cell, split between the
  /// ranges [-2,2] and [-5,5]; the all-zero assignment is always tried first.
  std::size_t samples_per_cell = 12;
  /// Random generated-subrepresentation attempts.
  std::size_t closure_samples = 32;
  bool use_certifier = true;
  /// Run the decider even when the certifier produced a witness.
  bool cross_check = false;
};

struct SubrepResult {
  Decision decision = Decision::undecided;
  SubrepBackend decided_by = SubrepBackend::decider;
  std::optional<SubrepWitness> witness;
  bool certifier_found = false;
  std::optional<Decision> decider_verdict;
  std::string detail;
};

/// Is the quiver Grassmannian Gr_e(M) nonempty over the algebraic closure?
/// Throws InputError unless 0 <= e <= dim M.
SubrepResult subrep_exists(const Representation& m, const DimVector& e, const SubrepOptions& options = {});

/// Backend A alone: a rational witness, or nothing.
std::optional<SubrepWitness> find_rational_subrep(const Representation& m, const DimVector& e,
                                                  const SubrepOptions& options = {});

/// Backend B alone: Schubert-cell decomposition + unit-ideal test per cell.
Decision decide_subrep(const Representation& m, const DimVector& e, const groebner::GroebnerLimits& limits = {},
                       std::string* detail = nullptr);

/// Exact re-validation: shapes, full column rank, arrow invariance.
bool is_subrepresentation(const Representation& m, const SubrepWitness& w);
DimVector witness_dimension(const SubrepWitness& w);

/// The subrepresentation given by `w` as a module (basis coordinates).
Representation restrict_to_subrep(const Representation& m, const SubrepWitness& w);
/// The quotient M / U, with the complement basis chosen from standard vectors.
Representation quotient_by_subrep(const Representation& m, const SubrepWitness& w);

/// Polynomial system of one Schubert cell; exposed for tests.
struct CellSystem {
  std::size_t nvars = 0;
  std::vector<std::vector<std::size_t>> pivots;  // per vertex
  std::vector<groebner::Polynomial> equations;
};
std::vector<CellSystem> schubert_cell_systems(const Representation& m, const DimVector& e);

enum class StabilityStatus { stable, semistable, unstable, undecided };
const char* to_string(StabilityStatus s);

struct StabilityVerdict {
  StabilityStatus status = StabilityStatus::undecided;
  /// Subdimension vector of a destabilizing (theta > 0) or, for a
  /// semistable-but-not-stable module, a theta = 0 proper subrepresentation.
  std::optional<DimVector> violating;
  std::optional<SubrepWitness> witness;
  std::vector<DimVector> undecided;
  std::string reason;
};

StabilityVerdict is_semistable(const Representation& m, const Weight& theta, const SubrepOptions& options = {});
/// Returns stable, semistable (semistable but not stable), unstable or undecided.
StabilityVerdict is_stable(const Representation& m, const Weight& theta, const SubrepOptions& options = {});

}  // namespace quiverforge
