#include "quiverforge/pipeline.hpp"

#include "quiverforge/errors.hpp"

namespace quiverforge {

AlgebraPtr kronecker_algebra() {
  return BoundQuiverAlgebra::make(Quiver({"1", "2"}, {{"a", "1", "2"}, {"b", "1", "2"}}));
}

namespace {

Matrix zwara_a() { return Matrix{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}; }
Matrix zwara_b() { return Matrix{{1, 0, 0}, {0, 0, 0}, {0, 0, 1}}; }

Representation zwara_on(const AlgebraPtr& a) {
  const Quiver& q = a->quiver();
  DimVector d = DimVector::zero(2);
  d[q.arrow(0).tail] = 3;
  d[q.arrow(0).head] = 3;
  return Representation(a, std::move(d), {zwara_a(), zwara_b()});
}

void add(VerifyReport& r, std::string name, bool passed, std::string detail = {}) {
  r.checks.push_back({std::move(name), passed, std::move(detail)});
}

}  // namespace

Representation zwara_module() { return zwara_on(kronecker_algebra()); }

bool is_kronecker(const BoundQuiverAlgebra& a) {
  const Quiver& q = a.quiver();
  return a.hereditary() && q.vertex_count() == 2 && q.arrow_count() == 2 && q.arrow(0).tail != q.arrow(0).head &&
         q.arrow(0).tail == q.arrow(1).tail && q.arrow(0).head == q.arrow(1).head;
}

BadOrbitInstance build_bad_orbit_instance(const AlgebraPtr& a, const PipelineOptions& options) {
  if (is_kronecker(*a)) {
    Representation m = zwara_on(a);
    DimVector d = m.dim();
    return BadOrbitInstance{a, std::move(d), std::move(m), options.seed, std::nullopt};
  }
  PairSearchOptions po;
  po.seed = options.seed;
  po.witness = options.witness;
  po.subrep = options.subrep;
  PairSearchResult found = find_orthogonal_pair(a, po);
  std::optional<Representation> m;
  try {
    const AlgebraPtr quotient = build_quotient_algebra(found.pair);
    m = lift(found.pair, kronecker_to_quotient(zwara_module(), quotient));
  } catch (const std::exception& e) {
    throw StageError("lift", e.what(), StageError::Cause::certificate);
  }
  const DimVector expected = 3 * found.pair.e1.dim() + 3 * found.pair.e2.dim();
  if (m->dim() != expected) throw StageError("lift", "dimension identity failed", StageError::Cause::certificate);
  DimVector d = m->dim();
  return BadOrbitInstance{a, std::move(d), std::move(*m), options.seed, std::move(found)};
}

bool VerifyReport::ok() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return !checks.empty();
}

VerifyReport verify_instance(const BadOrbitInstance& inst) {
  VerifyReport r;
  const AlgebraPtr& a = inst.algebra;
  const Representation& m = inst.m;
  add(r, "module-valid", validate_representation(*a, m.dim(), m.matrices()).ok());
  add(r, "dimension", m.dim() == inst.d, to_string(m.dim()));
  const Representation zw = zwara_module();
  const std::size_t zend = end_dim(zw);
  const std::size_t mend = end_dim(m);
  add(r, "end-dim", mend == zend, std::to_string(mend) + " vs " + std::to_string(zend));
  if (a->hereditary()) {
    std::int64_t ambient = 0;
    for (const auto& arrow : a->quiver().arrows()) ambient += m.dim()[arrow.tail] * m.dim()[arrow.head];
    const std::int64_t codim = ambient - orbit_dimension(m);
    add(r, "orbit-codimension", codim == static_cast<std::int64_t>(mend),
        "codim " + std::to_string(codim) + ", end " + std::to_string(mend));
  } else {
    // codimension of the orbit inside the Zariski tangent space at M
    const std::size_t codim = ext1_dim(m, m);
    add(r, "orbit-codimension", codim == mend,
        "tangent codim " + std::to_string(codim) + ", end " + std::to_string(mend));
  }

  if (!inst.provenance) {
    add(r, "kronecker-base-case", is_kronecker(*a) && m == zwara_on(a));
    return r;
  }
  const PairSearchResult& p = *inst.provenance;
  const ExceptionalPair& pair = p.pair;

  std::optional<DimVector> h;
  try {
    h = find_isotropic_root(*a);
  } catch (const std::exception& e) {
    add(r, "isotropic-root", false, e.what());
    return r;
  }
  add(r, "isotropic-root", *h == p.h, to_string(*h));
  add(r, "tits-form-d", tits_form(*a, m.dim()) == 0);
  const Weight theta_h = defect_weight(*a, *h);
  add(r, "theta-h", theta_h == p.theta_h);
  const DimVector f1 = pair.e1.dim(), f2 = pair.e2.dim();
  add(r, "dimension-identity", m.dim() == 3 * f1 + 3 * f2);
  add(r, "pair-dimensions", f1 == p.stable_pair.h1 && f2 == p.stable_pair.h2);
  add(r, "theta-h-signs", sgn(theta_h(f1)) < 0 && sgn(theta_h(f2)) > 0,
      format_rational(theta_h(f1)) + ", " + format_rational(theta_h(f2)));
  add(r, "multiplicities", p.stable_pair.n1 == 1 && p.stable_pair.n2 == 1 && p.stable_pair.l == 2 &&
                               f1 + f2 == *h);
  add(r, "real-roots", tits_form(*a, f1) == 1 && tits_form(*a, f2) == 1);
  const std::int64_t l = -euler_form(*a, f1, f2) - euler_form(*a, f2, f1);
  add(r, "pairing-l", l == 2, std::to_string(l));
  add(r, "theta0-on-pair", sgn(p.theta0(f1)) == 0 && sgn(p.theta0(f2)) == 0);

  const SequenceReport seq = verify_orthogonal_exceptional({pair.e1, pair.e2});
  std::string failures;
  for (const auto& f : seq.failures) failures += f + "; ";
  add(r, "condition-1", seq.condition1, failures);
  add(r, "condition-2", seq.condition2, failures);
  add(r, "condition-3", seq.condition3, failures);
  const auto& back = seq.table[1][0];
  add(r, "ext1-E2-E1", back.ext1 == 2, std::to_string(back.ext1));
  add(r, "ext2-E2-E1", back.inferred_ext2 && *back.inferred_ext2 == 0);
  const ExtCocycleBasis fresh = ext1_space(pair.e2, pair.e1);
  add(r, "cocycle-basis", fresh.dim == pair.cocycles.dim && fresh.basis == pair.cocycles.basis);

  bool lift_ok = false;
  std::string lift_detail;
  try {
    const AlgebraPtr quotient = build_quotient_algebra(pair);
    lift_ok = lift(pair, kronecker_to_quotient(zw, quotient)) == m;
    if (!lift_ok) lift_detail = "stored module differs from the recomputed lift";
  } catch (const std::exception& e) {
    lift_detail = e.what();
  }
  add(r, "lift", lift_ok, lift_detail);

  // E1 (x) k^3 sits inside M as the first block.
  bool sub_ok = true;
  const Quiver& q = a->quiver();
  for (std::size_t k = 0; k < q.arrow_count() && sub_ok; ++k) {
    const Arrow& arrow = q.arrow(k);
    const auto top_h = static_cast<std::size_t>(3 * f1[arrow.head]);
    const auto top_t = static_cast<std::size_t>(3 * f1[arrow.tail]);
    const Matrix& ma = m.matrix(k);
    if (ma.rows() < top_h || ma.cols() < top_t) {
      sub_ok = false;
      break;
    }
    sub_ok = ma.block(0, 0, top_h, top_t) == kron(pair.e1.matrix(k), Matrix::identity(3)) &&
             ma.block(top_h, 0, ma.rows() - top_h, top_t).is_zero();
  }
  add(r, "E1-submodule", sub_ok);
  return r;
}

}  // namespace quiverforge
