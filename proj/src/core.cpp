#include "quiverforge/core.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "quiverforge/errors.hpp"

namespace quiverforge {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<ArrowSpec> arrows) {
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    throw InputError("duplicate vertex id");
  vertices_ = std::move(vertices);

  std::sort(arrows.begin(), arrows.end(),
            [](const ArrowSpec& a, const ArrowSpec& b) { return a.id < b.id; });
  for (std::size_t i = 0; i + 1 < arrows.size(); ++i)
    if (arrows[i].id == arrows[i + 1].id) throw InputError("duplicate arrow id '" + arrows[i].id + "'");
  arrows_.reserve(arrows.size());
  for (auto& a : arrows) {
    const auto t = find_vertex(a.tail);
    const auto h = find_vertex(a.head);
    if (!t || !h) throw InputError("arrow '" + a.id + "' references an unknown vertex");
    arrows_.push_back({std::move(a.id), *t, *h});
  }
}

std::optional<std::size_t> Quiver::find_vertex(std::string_view id) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), id);
  if (it == vertices_.end() || *it != id) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::optional<std::size_t> Quiver::find_arrow(std::string_view id) const {
  auto it = std::lower_bound(arrows_.begin(), arrows_.end(), id,
                             [](const Arrow& a, std::string_view v) { return a.id < v; });
  if (it == arrows_.end() || it->id != id) return std::nullopt;
  return static_cast<std::size_t>(it - arrows_.begin());
}

std::size_t Quiver::vertex_index(std::string_view id) const {
  if (auto i = find_vertex(id)) return *i;
  throw InputError("unknown vertex '" + std::string(id) + "'");
}

std::size_t Quiver::arrow_index(std::string_view id) const {
  if (auto i = find_arrow(id)) return *i;
  throw InputError("unknown arrow '" + std::string(id) + "'");
}

std::size_t Quiver::arrows_between(std::size_t i, std::size_t j) const {
  return static_cast<std::size_t>(std::count_if(
      arrows_.begin(), arrows_.end(), [&](const Arrow& a) { return a.tail == i && a.head == j; }));
}

bool Quiver::has_oriented_cycle() const {
  // Kahn's algorithm; loops count as cycles.
  std::vector<std::size_t> indegree(vertex_count(), 0);
  for (const auto& a : arrows_) ++indegree[a.head];
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < vertex_count(); ++v)
    if (indegree[v] == 0) ready.push_back(v);
  std::size_t seen = 0;
  while (!ready.empty()) {
    const std::size_t v = ready.back();
    ready.pop_back();
    ++seen;
    for (const auto& a : arrows_)
      if (a.tail == v && --indegree[a.head] == 0) ready.push_back(a.head);
  }
  return seen != vertex_count();
}

void check_composable(const Quiver& q, std::span<const std::size_t> path) {
  for (std::size_t k = 0; k < path.size(); ++k) {
    if (path[k] >= q.arrow_count()) throw InputError("path references an unknown arrow");
    if (k > 0 && q.arrow(path[k - 1]).head != q.arrow(path[k]).tail)
      throw InputError("path is not composable at '" + q.arrow(path[k - 1]).id + "' -> '" +
                       q.arrow(path[k]).id + "'");
  }
}

Relation Relation::make(const Quiver& q,
                        const std::vector<std::pair<Rational, std::vector<std::string>>>& terms) {
  if (terms.empty()) throw InputError("relation without terms");
  Relation r;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const auto& [coeff, ids] = terms[k];
    if (ids.size() < 2) throw InputError("relation path of length < 2 (ideal not admissible)");
    RelationTerm t{coeff, {}};
    for (const auto& id : ids) t.path.push_back(q.arrow_index(id));
    check_composable(q, t.path);
    const std::size_t tail = q.arrow(t.path.front()).tail;
    const std::size_t head = q.arrow(t.path.back()).head;
    if (k == 0) {
      r.tail = tail;
      r.head = head;
    } else if (tail != r.tail || head != r.head) {
      throw InputError("relation terms are not parallel paths");
    }
    r.terms.push_back(std::move(t));
  }
  return r;
}

AlgebraPtr BoundQuiverAlgebra::make(Quiver quiver, std::vector<Relation> relations,
                                    std::optional<int> gldim_bound, std::optional<Matrix> euler_matrix) {
  for (const auto& r : relations) {
    for (const auto& t : r.terms) {
      if (t.path.size() < 2) throw InputError("relation path of length < 2 (ideal not admissible)");
      check_composable(quiver, t.path);
    }
  }
  if (euler_matrix && (euler_matrix->rows() != quiver.vertex_count() ||
                       euler_matrix->cols() != quiver.vertex_count()))
    throw InputError("euler_matrix must be square of size |vertices|");
  if (gldim_bound && *gldim_bound < 0) throw InputError("gldim_bound must be nonnegative");
  auto a = std::shared_ptr<BoundQuiverAlgebra>(new BoundQuiverAlgebra());
  a->triangular_ = !quiver.has_oriented_cycle();
  a->quiver_ = std::move(quiver);
  a->relations_ = std::move(relations);
  a->gldim_bound_ = gldim_bound;
  a->euler_override_ = std::move(euler_matrix);
  return a;
}

std::optional<int> BoundQuiverAlgebra::gldim_bound() const noexcept {
  if (hereditary() && triangular_) return gldim_bound_ ? std::min(*gldim_bound_, 1) : 1;
  return gldim_bound_;
}

std::size_t BoundQuiverAlgebra::relation_count(std::size_t i, std::size_t j) const {
  return static_cast<std::size_t>(std::count_if(relations_.begin(), relations_.end(), [&](const Relation& r) {
    return r.tail == i && r.head == j;
  }));
}

bool operator==(const BoundQuiverAlgebra& a, const BoundQuiverAlgebra& b) {
  return a.quiver_ == b.quiver_ && a.relations_ == b.relations_ && a.gldim_bound_ == b.gldim_bound_ &&
         a.euler_override_ == b.euler_override_;
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  return a == b || (a && b && *a == *b);
}

DimVector DimVector::unit(std::size_t n, std::size_t i) {
  DimVector d = zero(n);
  d[i] = 1;
  return d;
}

std::int64_t DimVector::total() const { return std::accumulate(v_.begin(), v_.end(), std::int64_t{0}); }

bool DimVector::is_zero() const {
  return std::all_of(v_.begin(), v_.end(), [](std::int64_t x) { return x == 0; });
}

bool DimVector::nonnegative() const {
  return std::all_of(v_.begin(), v_.end(), [](std::int64_t x) { return x >= 0; });
}

bool DimVector::leq(const DimVector& other) const {
  if (size() != other.size()) return false;
  for (std::size_t i = 0; i < size(); ++i)
    if (v_[i] > other.v_[i]) return false;
  return true;
}

std::int64_t DimVector::gcd() const {
  std::int64_t g = 0;
  for (auto x : v_) g = std::gcd(g, x);
  return g;
}

DimVector operator+(const DimVector& a, const DimVector& b) {
  DimVector out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

DimVector operator-(const DimVector& a, const DimVector& b) {
  DimVector out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

DimVector operator*(std::int64_t s, const DimVector& a) {
  DimVector out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] *= s;
  return out;
}

std::string to_string(const DimVector& d) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
  os << ')';
  return os.str();
}

std::vector<DimVector> subdimension_vectors(const DimVector& d) {
  std::vector<DimVector> out;
  DimVector e = DimVector::zero(d.size());
  while (true) {
    out.push_back(e);
    std::size_t i = 0;
    while (i < d.size() && e[i] == d[i]) e[i++] = 0;
    if (i == d.size()) break;
    ++e[i];
  }
  return out;
}

std::string ValidationReport::summary() const {
  if (ok()) return "ok";
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) os << (i ? "; " : "") << violations[i].message;
  return os.str();
}

namespace {

Matrix evaluate(const std::vector<Matrix>& matrices, const Quiver& q, std::span<const std::size_t> path) {
  Matrix out = matrices.at(path.front());
  for (std::size_t k = 1; k < path.size(); ++k) out = matrices.at(path[k]) * out;
  (void)q;
  return out;
}

}  // namespace

ValidationReport validate_representation(const BoundQuiverAlgebra& a, const DimVector& dim,
                                         const std::vector<Matrix>& matrices) {
  ValidationReport report;
  const Quiver& q = a.quiver();
  if (dim.size() != q.vertex_count() || !dim.nonnegative()) {
    report.violations.push_back({Violation::Kind::bad_dimension, {}, 0, {},
                                 "dimension vector must be nonnegative with one entry per vertex"});
    return report;
  }
  if (matrices.size() != q.arrow_count()) {
    report.violations.push_back({Violation::Kind::missing_arrow, {}, 0, {},
                                 "expected one matrix per arrow"});
    return report;
  }
  for (std::size_t i = 0; i < q.arrow_count(); ++i) {
    const Arrow& arr = q.arrow(i);
    const auto rows = static_cast<std::size_t>(dim[arr.head]);
    const auto cols = static_cast<std::size_t>(dim[arr.tail]);
    if (matrices[i].rows() != rows || matrices[i].cols() != cols) {
      std::ostringstream os;
      os << "shape mismatch at arrow '" << arr.id << "': expected " << rows << "x" << cols << ", got "
         << matrices[i].rows() << "x" << matrices[i].cols();
      report.violations.push_back({Violation::Kind::shape_mismatch, arr.id, 0, {}, os.str()});
    }
  }
  if (!report.ok()) return report;
  for (std::size_t r = 0; r < a.relations().size(); ++r) {
    const Relation& rel = a.relations()[r];
    Matrix value(static_cast<std::size_t>(dim[rel.head]), static_cast<std::size_t>(dim[rel.tail]));
    for (const auto& t : rel.terms) value += t.coeff * evaluate(matrices, q, t.path);
    if (!value.is_zero()) {
      report.violations.push_back({Violation::Kind::relation_violation, {}, r, value,
                                   "relation " + std::to_string(r) + " does not vanish"});
    }
  }
  return report;
}

ValidationReport validate_representation(const BoundQuiverAlgebra& a, const RawRepresentation& raw) {
  ValidationReport report;
  const Quiver& q = a.quiver();
  DimVector dim = DimVector::zero(q.vertex_count());
  for (const auto& [id, value] : raw.dim) {
    auto v = q.find_vertex(id);
    if (!v) {
      report.violations.push_back({Violation::Kind::bad_dimension, {}, 0, {}, "unknown vertex '" + id + "'"});
      continue;
    }
    if (value < 0)
      report.violations.push_back({Violation::Kind::bad_dimension, {}, 0, {}, "negative dimension at '" + id + "'"});
    dim[*v] = value;
  }
  for (const auto& v : q.vertices())
    if (!raw.dim.contains(v))
      report.violations.push_back({Violation::Kind::bad_dimension, {}, 0, {}, "missing dimension at '" + v + "'"});
  std::vector<Matrix> matrices(q.arrow_count());
  std::vector<bool> seen(q.arrow_count(), false);
  for (const auto& [id, m] : raw.matrices) {
    auto i = q.find_arrow(id);
    if (!i) {
      report.violations.push_back({Violation::Kind::unknown_arrow, id, 0, {}, "unknown arrow '" + id + "'"});
      continue;
    }
    matrices[*i] = m;
    seen[*i] = true;
  }
  for (std::size_t i = 0; i < q.arrow_count(); ++i) {
    if (seen[i]) continue;
    // An arrow between zero-dimensional ends may be omitted.
    const Arrow& arr = q.arrow(i);
    if (dim[arr.head] == 0 || dim[arr.tail] == 0) {
      matrices[i] = Matrix(static_cast<std::size_t>(std::max<std::int64_t>(dim[arr.head], 0)),
                           static_cast<std::size_t>(std::max<std::int64_t>(dim[arr.tail], 0)));
    } else {
      report.violations.push_back(
          {Violation::Kind::missing_arrow, arr.id, 0, {}, "missing matrix for arrow '" + arr.id + "'"});
    }
  }
  if (!report.ok()) return report;
  return validate_representation(a, dim, matrices);
}

Representation::Representation(AlgebraPtr algebra, DimVector dim, std::vector<Matrix> matrices)
    : algebra_(std::move(algebra)), dim_(std::move(dim)), matrices_(std::move(matrices)) {
  if (!algebra_) throw InputError("representation without algebra");
  auto report = validate_representation(*algebra_, dim_, matrices_);
  if (!report.ok()) throw InvalidRepresentation(std::move(report));
}

Representation Representation::from_raw(AlgebraPtr algebra, const RawRepresentation& raw) {
  auto report = validate_representation(*algebra, raw);
  if (!report.ok()) throw InvalidRepresentation(std::move(report));
  const Quiver& q = algebra->quiver();
  DimVector dim = DimVector::zero(q.vertex_count());
  for (const auto& [id, value] : raw.dim) dim[q.vertex_index(id)] = value;
  std::vector<Matrix> matrices(q.arrow_count());
  for (std::size_t i = 0; i < q.arrow_count(); ++i) {
    auto it = raw.matrices.find(q.arrow(i).id);
    matrices[i] = it != raw.matrices.end()
                      ? it->second
                      : Matrix(static_cast<std::size_t>(dim[q.arrow(i).head]),
                               static_cast<std::size_t>(dim[q.arrow(i).tail]));
  }
  return Representation(std::move(algebra), std::move(dim), std::move(matrices));
}

Representation Representation::zero(AlgebraPtr algebra) {
  const auto n = algebra->vertex_count();
  std::vector<Matrix> matrices(algebra->arrow_count());
  return Representation(std::move(algebra), DimVector::zero(n), std::move(matrices));
}

Representation Representation::simple(AlgebraPtr algebra, std::size_t vertex) {
  const Quiver& q = algebra->quiver();
  if (vertex >= q.vertex_count()) throw InputError("simple: vertex out of range");
  std::vector<Matrix> matrices;
  for (const auto& a : q.arrows())
    matrices.emplace_back(a.head == vertex ? 1 : 0, a.tail == vertex ? 1 : 0);
  const auto n = q.vertex_count();
  return Representation(std::move(algebra), DimVector::unit(n, vertex), std::move(matrices));
}

bool operator==(const Representation& a, const Representation& b) {
  return same_algebra(a.algebra_, b.algebra_) && a.dim_ == b.dim_ && a.matrices_ == b.matrices_;
}

Matrix evaluate_path(const Representation& m, std::span<const std::size_t> path) {
  if (path.empty()) throw InputError("empty path: use evaluate_trivial_path");
  check_composable(m.quiver(), path);
  return evaluate(m.matrices(), m.quiver(), path);
}

Matrix evaluate_path(const Representation& m, const std::vector<std::string>& arrow_ids) {
  std::vector<std::size_t> path;
  for (const auto& id : arrow_ids) path.push_back(m.quiver().arrow_index(id));
  return evaluate_path(m, path);
}

Matrix evaluate_trivial_path(const Representation& m, std::size_t vertex) {
  return Matrix::identity(static_cast<std::size_t>(m.dim().entries().at(vertex)));
}

Representation direct_sum(const Representation& m, const Representation& n) {
  if (!same_algebra(m.algebra(), n.algebra())) throw InputError("direct_sum: algebra mismatch");
  std::vector<Matrix> matrices;
  matrices.reserve(m.matrices().size());
  for (std::size_t i = 0; i < m.matrices().size(); ++i)
    matrices.push_back(direct_sum(m.matrix(i), n.matrix(i)));
  return Representation(m.algebra(), m.dim() + n.dim(), std::move(matrices));
}

}  // namespace quiverforge
