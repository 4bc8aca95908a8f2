#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quiverforge/exceptional.hpp"

namespace quiverforge {

/// Kronecker quiver: vertices "1", "2", arrows a, b : 1 -> 2.
AlgebraPtr kronecker_algebra();

/// The (3,3)-dimensional Kronecker module: M(a) has ones at (2,1) and (3,2)
/// (1-based), M(b) = diag(1,0,1).
Representation zwara_module();

struct PipelineOptions {
  std::uint64_t seed = 7;
  std::optional<Representation> witness;
  SubrepOptions subrep;
};

struct BadOrbitInstance {
  AlgebraPtr algebra;
  DimVector d;
  Representation m;
  std::uint64_t seed = 0;
  /// Empty for the Kronecker base case, where M is the Kronecker module itself.
  std::optional<PairSearchResult> provenance;
};

/// Throws StageError naming the failing stage.
BadOrbitInstance build_bad_orbit_instance(const AlgebraPtr& a, const PipelineOptions& options = {});

/// True for a path algebra on two vertices with exactly two parallel arrows.
bool is_kronecker(const BoundQuiverAlgebra& a);

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<Check> checks;
  bool ok() const;
};

/// Recomputes every certificate from the stored data.
VerifyReport verify_instance(const BadOrbitInstance& instance);

}  // namespace quiverforge
