#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "quiverforge/matrix.hpp"
#include "quiverforge/rational.hpp"

namespace quiverforge {

struct ArrowSpec {
  std::string id;
  std::string tail;
  std::string head;
};

struct Arrow {
  std::string id;
  std::size_t tail;
  std::size_t head;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// Finite quiver. Vertices and arrows are kept sorted by id; every index used
/// elsewhere in the library refers to this canonical order.
class Quiver {
 public:
  Quiver() = default;
  Quiver(std::vector<std::string> vertices, std::vector<ArrowSpec> arrows);

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t arrow_count() const noexcept { return arrows_.size(); }
  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  const Arrow& arrow(std::size_t i) const { return arrows_.at(i); }

  std::optional<std::size_t> find_vertex(std::string_view id) const;
  std::optional<std::size_t> find_arrow(std::string_view id) const;
  std::size_t vertex_index(std::string_view id) const;  // throws InputError
  std::size_t arrow_index(std::string_view id) const;   // throws InputError

  /// Number of arrows i -> j.
  std::size_t arrows_between(std::size_t i, std::size_t j) const;
  bool has_oriented_cycle() const;

  friend bool operator==(const Quiver&, const Quiver&) = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
};

struct RelationTerm {
  Rational coeff;
  std::vector<std::size_t> path;  // arrow indices in traversal order
  friend bool operator==(const RelationTerm&, const RelationTerm&) = default;
};

/// Linear combination of parallel paths of length >= 2.
struct Relation {
  std::vector<RelationTerm> terms;
  std::size_t tail = 0;
  std::size_t head = 0;

  /// Builds and checks a relation from arrow-id paths.
  static Relation make(const Quiver& q,
                       const std::vector<std::pair<Rational, std::vector<std::string>>>& terms);
  friend bool operator==(const Relation&, const Relation&) = default;
};

class BoundQuiverAlgebra;
using AlgebraPtr = std::shared_ptr<const BoundQuiverAlgebra>;

/// A = kQ/I with I generated by a user-declared minimal relation set.
/// The upper admissibility bound (a power of the arrow ideal lies in I) and
/// minimality are caller assertions and are not checked.
class BoundQuiverAlgebra {
 public:
  static AlgebraPtr make(Quiver quiver, std::vector<Relation> relations = {},
                         std::optional<int> gldim_bound = std::nullopt,
                         std::optional<Matrix> euler_matrix = std::nullopt);

  const Quiver& quiver() const noexcept { return quiver_; }
  const std::vector<Relation>& relations() const noexcept { return relations_; }
  std::optional<int> declared_gldim_bound() const noexcept { return gldim_bound_; }
  const std::optional<Matrix>& euler_matrix_override() const noexcept { return euler_override_; }

  bool triangular() const noexcept { return triangular_; }
  bool hereditary() const noexcept { return relations_.empty(); }
  /// 1 for path algebras without oriented cycles, otherwise the declared bound.
  std::optional<int> gldim_bound() const noexcept;
  /// Number of relations from i to j.
  std::size_t relation_count(std::size_t i, std::size_t j) const;

  std::size_t vertex_count() const noexcept { return quiver_.vertex_count(); }
  std::size_t arrow_count() const noexcept { return quiver_.arrow_count(); }

  friend bool operator==(const BoundQuiverAlgebra& a, const BoundQuiverAlgebra& b);

 private:
  BoundQuiverAlgebra() = default;
  Quiver quiver_;
  std::vector<Relation> relations_;
  std::optional<int> gldim_bound_;
  std::optional<Matrix> euler_override_;
  bool triangular_ = true;
};

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

/// Nonnegative integer vector over the vertices, in canonical vertex order.
/// Also used for signed integer vectors in form computations.
class DimVector {
 public:
  DimVector() = default;
  explicit DimVector(std::vector<std::int64_t> entries) : v_(std::move(entries)) {}
  static DimVector zero(std::size_t n) { return DimVector(std::vector<std::int64_t>(n, 0)); }
  static DimVector unit(std::size_t n, std::size_t i);

  std::size_t size() const noexcept { return v_.size(); }
  std::int64_t operator[](std::size_t i) const { return v_[i]; }
  std::int64_t& operator[](std::size_t i) { return v_[i]; }
  const std::vector<std::int64_t>& entries() const noexcept { return v_; }
  auto begin() const { return v_.begin(); }
  auto end() const { return v_.end(); }

  std::int64_t total() const;
  bool is_zero() const;
  bool nonnegative() const;
  /// Entrywise <=.
  bool leq(const DimVector& other) const;
  std::int64_t gcd() const;
  bool indivisible() const { return gcd() == 1; }

  friend DimVector operator+(const DimVector& a, const DimVector& b);
  friend DimVector operator-(const DimVector& a, const DimVector& b);
  friend DimVector operator*(std::int64_t s, const DimVector& a);
  friend bool operator==(const DimVector&, const DimVector&) = default;
  friend auto operator<=>(const DimVector&, const DimVector&) = default;

 private:
  std::vector<std::int64_t> v_;
};

std::string to_string(const DimVector& d);

/// Enumerates all e with 0 <= e <= d. Order: odometer with the first vertex
/// varying fastest, i.e. lexicographic with the last vertex most significant.
std::vector<DimVector> subdimension_vectors(const DimVector& d);

struct Violation {
  enum class Kind { shape_mismatch, relation_violation, unknown_arrow, missing_arrow, bad_dimension };
  Kind kind;
  std::string arrow;                // for shape/arrow problems
  std::size_t relation_index = 0;   // for relation violations
  Matrix value;                     // the nonzero relation value
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const noexcept { return violations.empty(); }
  std::string summary() const;
};

/// Representation data keyed by ids, as read from a file.
struct RawRepresentation {
  std::map<std::string, std::int64_t> dim;
  std::map<std::string, Matrix> matrices;
};

ValidationReport validate_representation(const BoundQuiverAlgebra& a, const DimVector& dim,
                                         const std::vector<Matrix>& matrices);
ValidationReport validate_representation(const BoundQuiverAlgebra& a, const RawRepresentation& raw);

class InvalidRepresentation : public std::runtime_error {
 public:
  explicit InvalidRepresentation(ValidationReport report)
      : std::runtime_error(report.summary()), report_(std::move(report)) {}
  const ValidationReport& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

/// A point of mod(A, d). Construction validates shapes and relations.
class Representation {
 public:
  Representation(AlgebraPtr algebra, DimVector dim, std::vector<Matrix> matrices);
  static Representation from_raw(AlgebraPtr algebra, const RawRepresentation& raw);
  static Representation zero(AlgebraPtr algebra);
  static Representation simple(AlgebraPtr algebra, std::size_t vertex);

  const AlgebraPtr& algebra() const noexcept { return algebra_; }
  const Quiver& quiver() const noexcept { return algebra_->quiver(); }
  const DimVector& dim() const noexcept { return dim_; }
  const Matrix& matrix(std::size_t arrow) const { return matrices_.at(arrow); }
  const std::vector<Matrix>& matrices() const noexcept { return matrices_; }
  std::int64_t total_dim() const { return dim_.total(); }
  bool is_zero() const { return dim_.is_zero(); }

  friend bool operator==(const Representation& a, const Representation& b);

 private:
  AlgebraPtr algebra_;
  DimVector dim_;
  std::vector<Matrix> matrices_;
};

/// Product of arrow matrices along `path` (first arrow applied first).
Matrix evaluate_path(const Representation& m, std::span<const std::size_t> path);
Matrix evaluate_path(const Representation& m, const std::vector<std::string>& arrow_ids);
/// Trivial path e_i.
Matrix evaluate_trivial_path(const Representation& m, std::size_t vertex);

/// Checks that a nonempty path is composable; throws InputError otherwise.
void check_composable(const Quiver& q, std::span<const std::size_t> path);

Representation direct_sum(const Representation& m, const Representation& n);

}  // namespace quiverforge
