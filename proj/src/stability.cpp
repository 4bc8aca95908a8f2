#include "quiverforge/stability.hpp"

#include <algorithm>

#include "quiverforge/errors.hpp"
#include "quiverforge/random.hpp"

namespace quiverforge {

using groebner::Polynomial;

const char* to_string(Decision d) {
  switch (d) {
    case Decision::yes: return "yes";
    case Decision::no: return "no";
    case Decision::undecided: return "undecided";
  }
  return "?";
}

const char* to_string(StabilityStatus s) {
  switch (s) {
    case StabilityStatus::stable: return "stable";
    case StabilityStatus::semistable: return "semistable";
    case StabilityStatus::unstable: return "unstable";
    case StabilityStatus::undecided: return "undecided";
  }
  return "?";
}

namespace {

std::size_t sz(std::int64_t d) { return static_cast<std::size_t>(d); }

void check_query(const Representation& m, const DimVector& e) {
  if (e.size() != m.dim().size() || !e.nonnegative() || !e.leq(m.dim()))
    throw InputError("subdimension vector " + to_string(e) + " is not bounded by " + to_string(m.dim()));
}

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  if (k > n) return out;
  while (true) {
    out.push_back(c);
    std::size_t i = k;
    while (i > 0 && c[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

/// Pivot patterns per vertex, combined into all Schubert cells of
/// prod_i Gr(e(i), d(i)).
std::vector<std::vector<std::vector<std::size_t>>> cell_patterns(const DimVector& d, const DimVector& e) {
  std::vector<std::vector<std::vector<std::size_t>>> per_vertex;
  for (std::size_t i = 0; i < d.size(); ++i) per_vertex.push_back(combinations(sz(d[i]), sz(e[i])));
  std::vector<std::vector<std::vector<std::size_t>>> cells;
  std::vector<std::size_t> idx(d.size(), 0);
  while (true) {
    std::vector<std::vector<std::size_t>> cell;
    for (std::size_t i = 0; i < d.size(); ++i) cell.push_back(per_vertex[i][idx[i]]);
    cells.push_back(std::move(cell));
    std::size_t i = 0;
    while (i < d.size() && idx[i] + 1 == per_vertex[i].size()) idx[i++] = 0;
    if (i == d.size()) break;
    ++idx[i];
  }
  return cells;
}

/// Free coordinates of a reduced column echelon basis: entry (r, j) with
/// r below the pivot of column j and r not itself a pivot row.
std::vector<std::pair<std::size_t, std::size_t>> free_entries(std::size_t rows,
                                                              const std::vector<std::size_t>& pivots) {
  std::vector<bool> is_pivot(rows, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t j = 0; j < pivots.size(); ++j)
    for (std::size_t r = pivots[j] + 1; r < rows; ++r)
      if (!is_pivot[r]) out.emplace_back(r, j);
  return out;
}

std::size_t cell_parameter_count(const DimVector& d, const std::vector<std::vector<std::size_t>>& cell) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < d.size(); ++i) n += free_entries(sz(d[i]), cell[i]).size();
  return n;
}

SubrepWitness cell_point(const DimVector& d, const std::vector<std::vector<std::size_t>>& cell,
                         const std::vector<Rational>& params) {
  SubrepWitness w;
  std::size_t next = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    Matrix u(sz(d[i]), cell[i].size());
    for (std::size_t j = 0; j < cell[i].size(); ++j) u(cell[i][j], j) = 1;
    for (auto [r, j] : free_entries(sz(d[i]), cell[i])) u(r, j) = params[next++];
    w.push_back(std::move(u));
  }
  return w;
}

/// Smallest subrepresentation containing the given vectors (rows of `gens[i]`
/// at vertex i), as row-echelon bases. Gives up once a vertex exceeds `cap`.
std::optional<std::vector<Matrix>> generated_subrep(const Representation& m, std::vector<Matrix> span,
                                                    const DimVector& cap) {
  const Quiver& q = m.quiver();
  for (std::size_t i = 0; i < span.size(); ++i) {
    Echelon e = rref(span[i]);
    span[i] = e.reduced.block(0, 0, e.rank(), e.reduced.cols());
    if (e.rank() > sz(cap[i])) return std::nullopt;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k < q.arrow_count(); ++k) {
      const Arrow& a = q.arrow(k);
      if (span[a.tail].rows() == 0) continue;
      const Matrix images = (m.matrix(k) * span[a.tail].transpose()).transpose();
      Matrix stacked(span[a.head].rows() + images.rows(), sz(m.dim()[a.head]));
      stacked.set_block(0, 0, span[a.head]);
      stacked.set_block(span[a.head].rows(), 0, images);
      Echelon e = rref(std::move(stacked));
      if (e.rank() > span[a.head].rows()) {
        if (e.rank() > sz(cap[a.head])) return std::nullopt;
        span[a.head] = e.reduced.block(0, 0, e.rank(), e.reduced.cols());
        changed = true;
      }
    }
  }
  return span;
}

std::uint64_t seed_for(const SubrepOptions& options, const DimVector& e) {
  std::uint64_t s = options.seed;
  for (auto x : e) s = mix_seed(s, static_cast<std::uint64_t>(x));
  return s;
}

}  // namespace

DimVector witness_dimension(const SubrepWitness& w) {
  std::vector<std::int64_t> d;
  for (const auto& u : w) d.push_back(static_cast<std::int64_t>(u.cols()));
  return DimVector(std::move(d));
}

bool is_subrepresentation(const Representation& m, const SubrepWitness& w) {
  const Quiver& q = m.quiver();
  if (w.size() != q.vertex_count()) return false;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i].rows() != sz(m.dim()[i]) || w[i].cols() > w[i].rows()) return false;
    if (rank(w[i]) != w[i].cols()) return false;
  }
  for (std::size_t k = 0; k < q.arrow_count(); ++k) {
    const Arrow& a = q.arrow(k);
    const Matrix image = m.matrix(k) * w[a.tail];
    if (rank(hconcat(w[a.head], image)) != w[a.head].cols()) return false;
  }
  return true;
}

Representation restrict_to_subrep(const Representation& m, const SubrepWitness& w) {
  if (!is_subrepresentation(m, w)) throw InputError("restrict_to_subrep: not a subrepresentation");
  const Quiver& q = m.quiver();
  std::vector<Matrix> mats;
  for (std::size_t k = 0; k < q.arrow_count(); ++k) {
    const Arrow& a = q.arrow(k);
    mats.push_back(solve(w[a.head], m.matrix(k) * w[a.tail]));
  }
  return Representation(m.algebra(), witness_dimension(w), std::move(mats));
}

Representation quotient_by_subrep(const Representation& m, const SubrepWitness& w) {
  if (!is_subrepresentation(m, w)) throw InputError("quotient_by_subrep: not a subrepresentation");
  const Quiver& q = m.quiver();
  std::vector<Matrix> bases;  // [W | C] per vertex
  std::vector<std::size_t> sub_dims;
  for (std::size_t i = 0; i < w.size(); ++i) {
    Matrix basis = w[i];
    const std::size_t n = basis.rows();
    for (std::size_t j = 0; j < n && basis.cols() < n; ++j) {
      Matrix unit(n, 1);
      unit(j, 0) = 1;
      Matrix extended = hconcat(basis, unit);
      if (rank(extended) == extended.cols()) basis = std::move(extended);
    }
    sub_dims.push_back(w[i].cols());
    bases.push_back(std::move(basis));
  }
  std::vector<Matrix> mats;
  std::vector<std::int64_t> qdim;
  for (std::size_t i = 0; i < w.size(); ++i) qdim.push_back(m.dim()[i] - static_cast<std::int64_t>(sub_dims[i]));
  for (std::size_t k = 0; k < q.arrow_count(); ++k) {
    const Arrow& a = q.arrow(k);
    const Matrix changed = solve(bases[a.head], m.matrix(k) * bases[a.tail]);
    mats.push_back(changed.block(sub_dims[a.head], sub_dims[a.tail], sz(qdim[a.head]), sz(qdim[a.tail])));
  }
  return Representation(m.algebra(), DimVector(std::move(qdim)), std::move(mats));
}

std::optional<SubrepWitness> find_rational_subrep(const Representation& m, const DimVector& e,
                                                  const SubrepOptions& options) {
  check_query(m, e);
  const DimVector& d = m.dim();
  Rng rng(seed_for(options, e));

  // Subrepresentations generated by random vectors.
  for (std::size_t attempt = 0; attempt < options.closure_samples; ++attempt) {
    std::vector<Matrix> gens;
    for (std::size_t i = 0; i < d.size(); ++i) {
      const auto count = sz(rng.uniform(0, e[i]));
      Matrix g(count, sz(d[i]));
      for (std::size_t r = 0; r < count; ++r)
        for (std::size_t c = 0; c < sz(d[i]); ++c) g(r, c) = static_cast<long>(rng.uniform(-2, 2));
      gens.push_back(std::move(g));
    }
    auto span = generated_subrep(m, std::move(gens), e);
    if (!span) continue;
    SubrepWitness w;
    for (auto& s : *span) w.push_back(s.transpose());
    if (witness_dimension(w) == e && is_subrepresentation(m, w)) return w;
  }

  // Schubert cells with small integer coordinates.
  for (const auto& cell : cell_patterns(d, e)) {
    const std::size_t nparams = cell_parameter_count(d, cell);
    std::vector<Rational> params(nparams);
    for (std::size_t sample = 0; sample <= options.samples_per_cell; ++sample) {
      if (sample > 0) {
        const std::int64_t range = sample <= options.samples_per_cell / 2 ? 2 : 5;
        for (auto& p : params) p = static_cast<long>(rng.uniform(-range, range));
      }
      SubrepWitness w = cell_point(d, cell, params);
      if (is_subrepresentation(m, w)) return w;
      if (nparams == 0) break;
    }
  }
  return std::nullopt;
}

std::vector<CellSystem> schubert_cell_systems(const Representation& m, const DimVector& e) {
  check_query(m, e);
  const DimVector& d = m.dim();
  const Quiver& q = m.quiver();
  std::vector<CellSystem> systems;
  for (const auto& cell : cell_patterns(d, e)) {
    CellSystem sys;
    sys.pivots = cell;
    sys.nvars = cell_parameter_count(d, cell);
    const std::size_t n = sys.nvars;
    // Symbolic basis U(i), entries are 0, 1 or a variable.
    std::vector<std::vector<std::vector<Polynomial>>> u(d.size());
    std::size_t next = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
      u[i].assign(sz(d[i]), std::vector<Polynomial>(cell[i].size(), Polynomial(n)));
      for (std::size_t j = 0; j < cell[i].size(); ++j) u[i][cell[i][j]][j] = Polynomial::constant(n, 1);
      for (auto [r, j] : free_entries(sz(d[i]), cell[i])) u[i][r][j] = Polynomial::variable(n, next++);
    }
    for (std::size_t k = 0; k < q.arrow_count(); ++k) {
      const Arrow& a = q.arrow(k);
      const Matrix& ma = m.matrix(k);
      const auto& head_pivots = cell[a.head];
      std::vector<bool> head_is_pivot(sz(d[a.head]), false);
      for (auto p : head_pivots) head_is_pivot[p] = true;
      for (std::size_t j = 0; j < cell[a.tail].size(); ++j) {
        // v = M(a) u_j
        std::vector<Polynomial> v(sz(d[a.head]), Polynomial(n));
        for (std::size_t r = 0; r < sz(d[a.head]); ++r)
          for (std::size_t s = 0; s < sz(d[a.tail]); ++s)
            if (sgn(ma(r, s)) != 0 && !u[a.tail][s][j].is_zero()) v[r] += ma(r, s) * u[a.tail][s][j];
        // v must equal sum_k v[p_k] * U(ha)[:, k]
        for (std::size_t r = 0; r < sz(d[a.head]); ++r) {
          if (head_is_pivot[r]) continue;
          Polynomial residual = v[r];
          for (std::size_t col = 0; col < head_pivots.size(); ++col)
            if (!u[a.head][r][col].is_zero() && !v[head_pivots[col]].is_zero())
              residual -= v[head_pivots[col]] * u[a.head][r][col];
          if (!residual.is_zero()) sys.equations.push_back(std::move(residual));
        }
      }
    }
    systems.push_back(std::move(sys));
  }
  return systems;
}

Decision decide_subrep(const Representation& m, const DimVector& e, const groebner::GroebnerLimits& limits,
                       std::string* detail) {
  bool undecided = false;
  for (const auto& sys : schubert_cell_systems(m, e)) {
    const auto result = groebner::groebner_basis(sys.equations, limits);
    if (result.verdict == groebner::IdealVerdict::proper) return Decision::yes;
    if (result.verdict == groebner::IdealVerdict::undecided) {
      undecided = true;
      if (detail && detail->empty()) *detail = result.detail;
    }
  }
  return undecided ? Decision::undecided : Decision::no;
}

SubrepResult subrep_exists(const Representation& m, const DimVector& e, const SubrepOptions& options) {
  check_query(m, e);
  SubrepResult out;
  if (options.use_certifier) {
    if (auto w = find_rational_subrep(m, e, options)) {
      out.decision = Decision::yes;
      out.decided_by = SubrepBackend::certifier;
      out.certifier_found = true;
      out.witness = std::move(w);
      if (!options.cross_check) return out;
    }
  }
  std::string detail;
  const Decision verdict = decide_subrep(m, e, options.limits, &detail);
  out.decider_verdict = verdict;
  if (out.certifier_found && verdict != Decision::yes) {
    // A verified witness contradicts the decider; this is a bug, never a guess.
    throw CertificateError("decider rejected a verified subrepresentation witness for e=" + to_string(e));
  }
  out.decision = verdict;
  out.decided_by = SubrepBackend::decider;
  if (verdict == Decision::undecided) out.detail = detail.empty() ? "resource limit exceeded" : detail;
  return out;
}

namespace {

StabilityVerdict scan(const Representation& m, const Weight& theta, bool want_stable, const SubrepOptions& options) {
  StabilityVerdict v;
  if (theta.size() != m.dim().size()) throw InputError("weight size does not match the quiver");
  if (sgn(theta(m.dim())) != 0) {
    v.status = StabilityStatus::unstable;
    v.reason = "theta(dim M) != 0";
    return v;
  }
  const auto subdims = subdimension_vectors(m.dim());
  for (const auto& e : subdims) {
    if (sgn(theta(e)) <= 0) continue;
    const auto r = subrep_exists(m, e, options);
    if (r.decision == Decision::yes) {
      v.status = StabilityStatus::unstable;
      v.violating = e;
      v.witness = r.witness;
      v.reason = "subrepresentation with theta > 0";
      return v;
    }
    if (r.decision == Decision::undecided) v.undecided.push_back(e);
  }
  if (!v.undecided.empty()) {
    v.status = StabilityStatus::undecided;
    v.reason = "decider hit its resource caps";
    return v;
  }
  v.status = StabilityStatus::semistable;
  if (!want_stable) return v;
  if (m.is_zero()) {
    v.reason = "the zero module is not stable";
    return v;
  }
  for (const auto& e : subdims) {
    if (sgn(theta(e)) != 0 || e.is_zero() || e == m.dim()) continue;
    const auto r = subrep_exists(m, e, options);
    if (r.decision == Decision::yes) {
      v.violating = e;
      v.witness = r.witness;
      v.reason = "proper subrepresentation with theta = 0";
      return v;
    }
    if (r.decision == Decision::undecided) v.undecided.push_back(e);
  }
  if (!v.undecided.empty()) {
    v.status = StabilityStatus::undecided;
    v.reason = "decider hit its resource caps";
    return v;
  }
  v.status = StabilityStatus::stable;
  return v;
}

}  // namespace

StabilityVerdict is_semistable(const Representation& m, const Weight& theta, const SubrepOptions& options) {
  return scan(m, theta, false, options);
}

StabilityVerdict is_stable(const Representation& m, const Weight& theta, const SubrepOptions& options) {
  return scan(m, theta, true, options);
}

}  // namespace quiverforge
