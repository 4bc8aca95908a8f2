#include "quiverforge/homology.hpp"

#include "quiverforge/errors.hpp"
#include "quiverforge/forms.hpp"

namespace quiverforge {
namespace {

std::size_t sz(std::int64_t d) { return static_cast<std::size_t>(d); }

/// Offsets of the blocks Hom(M(i),N(i)) (vertex blocks) or
/// Hom(M(ta),N(ha)) (arrow blocks) inside the flattened coordinate vector.
struct Layout {
  std::vector<std::size_t> offset;
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  std::size_t total = 0;

  void add(std::size_t r, std::size_t c) {
    offset.push_back(total);
    rows.push_back(r);
    cols.push_back(c);
    total += r * c;
  }
};

Layout vertex_layout(const Representation& m, const Representation& n) {
  Layout l;
  for (std::size_t i = 0; i < m.quiver().vertex_count(); ++i) l.add(sz(n.dim()[i]), sz(m.dim()[i]));
  return l;
}

Layout arrow_layout(const Representation& m, const Representation& n) {
  Layout l;
  for (const auto& a : m.quiver().arrows()) l.add(sz(n.dim()[a.head]), sz(m.dim()[a.tail]));
  return l;
}

Layout relation_layout(const Representation& m, const Representation& n) {
  Layout l;
  for (const auto& r : m.algebra()->relations()) l.add(sz(n.dim()[r.head]), sz(m.dim()[r.tail]));
  return l;
}

/// Adds coeff * (L X R) to the target block at `row_offset`, as a linear
/// function of the unknown block X whose coordinates start at `col_offset`.
/// X has shape L.cols() x R.rows(); the target block has shape L.rows() x R.cols().
void add_sandwich(Matrix& target, std::size_t row_offset, std::size_t col_offset, const Matrix& left,
                  const Matrix& right, const Rational& coeff) {
  const std::size_t x_cols = right.rows();
  const std::size_t out_cols = right.cols();
  for (std::size_t p = 0; p < left.rows(); ++p)
    for (std::size_t s = 0; s < left.cols(); ++s) {
      if (sgn(left(p, s)) == 0) continue;
      const Rational ls = coeff * left(p, s);
      for (std::size_t t = 0; t < right.rows(); ++t)
        for (std::size_t q = 0; q < right.cols(); ++q) {
          if (sgn(right(t, q)) == 0) continue;
          target(row_offset + p * out_cols + q, col_offset + s * x_cols + t) += ls * right(t, q);
        }
    }
}

void check_same_algebra(const Representation& m, const Representation& n) {
  if (!same_algebra(m.algebra(), n.algebra())) throw InputError("representations over different algebras");
}

Matrix d0_matrix(const Representation& m, const Representation& n) {
  const Layout vl = vertex_layout(m, n);
  const Layout al = arrow_layout(m, n);
  Matrix d0(al.total, vl.total);
  const auto& arrows = m.quiver().arrows();
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    const auto& a = arrows[k];
    // phi(ha) M(a)
    add_sandwich(d0, al.offset[k], vl.offset[a.head], Matrix::identity(sz(n.dim()[a.head])), m.matrix(k), 1);
    // - N(a) phi(ta)
    add_sandwich(d0, al.offset[k], vl.offset[a.tail], n.matrix(k), Matrix::identity(sz(m.dim()[a.tail])), -1);
  }
  return d0;
}

Matrix product_along(const std::vector<Matrix>& mats, std::span<const std::size_t> path, std::size_t identity_dim) {
  Matrix out = Matrix::identity(identity_dim);
  for (std::size_t k : path) out = mats[k] * out;
  return out;
}

Matrix d1_matrix(const Representation& m, const Representation& n) {
  const Layout al = arrow_layout(m, n);
  const Layout rl = relation_layout(m, n);
  Matrix d1(rl.total, al.total);
  const Quiver& q = m.quiver();
  const auto& relations = m.algebra()->relations();
  for (std::size_t r = 0; r < relations.size(); ++r) {
    for (const auto& term : relations[r].terms) {
      const std::span<const std::size_t> path(term.path);
      for (std::size_t j = 0; j < path.size(); ++j) {
        const Arrow& a = q.arrow(path[j]);
        const Matrix right = product_along(m.matrices(), path.subspan(0, j), sz(m.dim()[relations[r].tail]));
        const Matrix left = product_along(n.matrices(), path.subspan(j + 1), sz(n.dim()[a.head]));
        add_sandwich(d1, rl.offset[r], al.offset[path[j]], left, right, term.coeff);
      }
    }
  }
  return d1;
}

std::vector<Matrix> unflatten(const Layout& l, std::span<const Rational> v) {
  std::vector<Matrix> out;
  out.reserve(l.offset.size());
  for (std::size_t k = 0; k < l.offset.size(); ++k) {
    Matrix b(l.rows[k], l.cols[k]);
    for (std::size_t i = 0; i < l.rows[k]; ++i)
      for (std::size_t j = 0; j < l.cols[k]; ++j) b(i, j) = v[l.offset[k] + i * l.cols[k] + j];
    out.push_back(std::move(b));
  }
  return out;
}

std::vector<Rational> flatten(const Layout& l, const std::vector<Matrix>& blocks) {
  if (blocks.size() != l.offset.size()) throw InputError("block count mismatch");
  std::vector<Rational> v(l.total);
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    if (blocks[k].rows() != l.rows[k] || blocks[k].cols() != l.cols[k]) throw InputError("block shape mismatch");
    for (std::size_t i = 0; i < l.rows[k]; ++i)
      for (std::size_t j = 0; j < l.cols[k]; ++j) v[l.offset[k] + i * l.cols[k] + j] = blocks[k](i, j);
  }
  return v;
}

/// Subtracts from v its components along the reduced image rows, leaving the
/// unique representative with zeros on the image pivot columns.
void reduce_modulo(std::vector<Rational>& v, const Echelon& image) {
  for (std::size_t r = 0; r < image.rank(); ++r) {
    const std::size_t p = image.pivots[r];
    if (sgn(v[p]) == 0) continue;
    const Rational f = v[p];
    const auto row = image.reduced.row(r);
    for (std::size_t j = 0; j < v.size(); ++j)
      if (sgn(row[j]) != 0) v[j] -= f * row[j];
  }
}

Echelon image_echelon(const Representation& m, const Representation& n) {
  return rref(d0_matrix(m, n).transpose());
}

}  // namespace

HomBasis hom_space(const Representation& m, const Representation& n) {
  check_same_algebra(m, n);
  const Layout vl = vertex_layout(m, n);
  HomBasis out;
  if (vl.total == 0) return out;
  const auto kernel = nullspace(d0_matrix(m, n));
  out.dim = kernel.size();
  for (const auto& v : kernel) out.basis.push_back(unflatten(vl, v));
  return out;
}

std::size_t hom_dim(const Representation& m, const Representation& n) {
  check_same_algebra(m, n);
  const Matrix d0 = d0_matrix(m, n);
  return d0.cols() - rank(d0);
}

ExtCocycleBasis ext1_space(const Representation& m, const Representation& n) {
  check_same_algebra(m, n);
  const Layout al = arrow_layout(m, n);
  ExtCocycleBasis out;
  if (al.total == 0) return out;

  std::vector<std::vector<Rational>> kernel;
  if (m.algebra()->relations().empty()) {
    for (std::size_t i = 0; i < al.total; ++i) {
      std::vector<Rational> e(al.total);
      e[i] = 1;
      kernel.push_back(std::move(e));
    }
  } else {
    kernel = nullspace(d1_matrix(m, n));
  }
  const Echelon image = image_echelon(m, n);
  for (auto& v : kernel) reduce_modulo(v, image);
  const Echelon reps = rref(from_rows(kernel, al.total));
  out.dim = reps.rank();
  for (std::size_t r = 0; r < reps.rank(); ++r) {
    const auto row = reps.reduced.row(r);
    out.basis.push_back(unflatten(al, row));
  }
  return out;
}

std::size_t ext1_dim(const Representation& m, const Representation& n) {
  check_same_algebra(m, n);
  const Matrix d0 = d0_matrix(m, n);
  std::size_t kernel_dim = d0.rows();
  if (!m.algebra()->relations().empty()) {
    const Matrix d1 = d1_matrix(m, n);
    kernel_dim = d1.cols() - rank(d1);
  }
  return kernel_dim - rank(d0);
}

bool is_morphism(const Representation& m, const Representation& n, const Morphism& phi) {
  check_same_algebra(m, n);
  const Quiver& q = m.quiver();
  if (phi.size() != q.vertex_count()) return false;
  for (std::size_t i = 0; i < q.vertex_count(); ++i)
    if (phi[i].rows() != sz(n.dim()[i]) || phi[i].cols() != sz(m.dim()[i])) return false;
  for (std::size_t k = 0; k < q.arrow_count(); ++k) {
    const Arrow& a = q.arrow(k);
    if (!(phi[a.head] * m.matrix(k) == n.matrix(k) * phi[a.tail])) return false;
  }
  return true;
}

bool is_cocycle(const Representation& m, const Representation& n, const Cocycle& z) {
  check_same_algebra(m, n);
  const Layout al = arrow_layout(m, n);
  std::vector<Rational> v;
  try {
    v = flatten(al, z);
  } catch (const InputError&) {
    return false;
  }
  if (m.algebra()->relations().empty()) return true;
  const auto image = d1_matrix(m, n).apply(v);
  for (const auto& x : image)
    if (sgn(x) != 0) return false;
  return true;
}

bool is_coboundary(const Representation& m, const Representation& n, const Cocycle& z) {
  check_same_algebra(m, n);
  auto v = flatten(arrow_layout(m, n), z);
  reduce_modulo(v, image_echelon(m, n));
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

Representation extension_module(const Representation& m, const Representation& n, const Cocycle& z) {
  check_same_algebra(m, n);
  const Quiver& q = m.quiver();
  if (z.size() != q.arrow_count()) throw InputError("cocycle has wrong number of blocks");
  std::vector<Matrix> mats;
  for (std::size_t k = 0; k < q.arrow_count(); ++k) {
    const Arrow& a = q.arrow(k);
    Matrix x(sz(n.dim()[a.head] + m.dim()[a.head]), sz(n.dim()[a.tail] + m.dim()[a.tail]));
    x.set_block(0, 0, n.matrix(k));
    x.set_block(0, sz(n.dim()[a.tail]), z[k]);
    x.set_block(sz(n.dim()[a.head]), sz(n.dim()[a.tail]), m.matrix(k));
    mats.push_back(std::move(x));
  }
  return Representation(m.algebra(), n.dim() + m.dim(), std::move(mats));
}

EulerPairingReport euler_pairing_check(const Representation& m, const Representation& n) {
  EulerPairingReport r;
  r.hom = static_cast<std::int64_t>(hom_dim(m, n));
  r.ext1 = static_cast<std::int64_t>(ext1_dim(m, n));
  r.pairing = euler_form(*m.algebra(), m.dim(), n.dim());
  r.defect = r.pairing - (r.hom - r.ext1);
  const auto bound = m.algebra()->gldim_bound();
  if (bound && *bound <= 2) {
    r.inferred_ext2 = r.pairing - r.hom + r.ext1;
    r.consistent = *r.inferred_ext2 >= 0 && (*bound >= 2 || *r.inferred_ext2 == 0);
  }
  return r;
}

std::size_t end_dim(const Representation& m) { return hom_dim(m, m); }

bool is_schur(const Representation& m) { return end_dim(m) == 1; }

std::int64_t orbit_dimension(const Representation& m) {
  std::int64_t gl = 0;
  for (auto d : m.dim()) gl += d * d;
  return gl - static_cast<std::int64_t>(end_dim(m));
}

}  // namespace quiverforge
