#include "quiverforge/exceptional.hpp"

#include <cstdio>

#include "quiverforge/errors.hpp"
#include "quiverforge/random.hpp"

namespace quiverforge {

namespace {

std::size_t sz(std::int64_t d) { return static_cast<std::size_t>(d); }

Representation random_module(const AlgebraPtr& a, const DimVector& d, Rng& rng, std::int64_t range) {
  std::vector<Matrix> mats;
  for (const auto& arrow : a->quiver().arrows()) {
    Matrix m(sz(d[arrow.head]), sz(d[arrow.tail]));
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = static_cast<long>(rng.uniform(-range, range));
    mats.push_back(std::move(m));
  }
  return Representation(a, d, std::move(mats));
}

std::string arrow_name(std::size_t k, std::size_t count) {
  if (count <= 3) return std::string(1, static_cast<char>('x' + k));
  char buf[16];
  std::snprintf(buf, sizeof buf, "g%03zu", k + 1);
  return buf;
}

[[noreturn]] void fail(const std::string& stage, const std::exception& e) {
  if (auto* s = dynamic_cast<const StageError*>(&e)) throw *s;
  if (dynamic_cast<const UndecidedError*>(&e)) throw StageError(stage, e.what(), StageError::Cause::undecided);
  if (dynamic_cast<const CertificateError*>(&e)) throw StageError(stage, e.what(), StageError::Cause::certificate);
  throw StageError(stage, e.what(), StageError::Cause::input);
}

}  // namespace

Representation construct_exceptional(const AlgebraPtr& a, const DimVector& r, const ExceptionalOptions& options) {
  if (!a->hereditary() || !a->triangular())
    throw InputError("construct_exceptional: only path algebras without relations are supported");
  if (r.size() != a->vertex_count() || !r.nonnegative() || r.is_zero())
    throw InputError("construct_exceptional: bad dimension vector " + to_string(r));
  if (tits_form(*a, r) != 1) throw InputError("construct_exceptional: q(" + to_string(r) + ") != 1");
  Rng rng(options.seed);
  std::int64_t range = options.range;
  for (std::size_t attempt = 0; attempt < options.attempts; ++attempt) {
    if (attempt > 0 && options.widen_every > 0 && attempt % options.widen_every == 0) ++range;
    Representation m = random_module(a, r, rng, range);
    if (end_dim(m) == 1 && ext1_dim(m, m) == 0) return m;
  }
  throw CertificateError("construct_exceptional: no exceptional module of dimension " + to_string(r) + " after " +
                         std::to_string(options.attempts) + " attempts");
}

SequenceReport verify_orthogonal_exceptional(const std::vector<Representation>& seq) {
  SequenceReport rep;
  const std::size_t t = seq.size();
  for (std::size_t i = 1; i < t; ++i)
    if (!same_algebra(seq[0].algebra(), seq[i].algebra()))
      throw InputError("verify_orthogonal_exceptional: modules over different algebras");
  rep.table.assign(t, {});
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < t; ++j) rep.table[i].push_back(euler_pairing_check(seq[i], seq[j]));
  auto name = [](std::size_t i) { return "E" + std::to_string(i + 1); };
  for (std::size_t i = 0; i < t; ++i) {
    const auto& self = rep.table[i][i];
    rep.end_dims.push_back(static_cast<std::size_t>(self.hom));
    if (self.hom != 1) {
      rep.condition1 = false;
      rep.failures.push_back("(1) End(" + name(i) + ") has dimension " + std::to_string(self.hom));
    }
    if (self.ext1 != 0) {
      rep.condition1 = false;
      rep.failures.push_back("(1) Ext1(" + name(i) + "," + name(i) + ") = " + std::to_string(self.ext1));
    }
    if (!self.inferred_ext2 || *self.inferred_ext2 != 0) {
      rep.condition1 = false;
      rep.failures.push_back("(1) Ext2(" + name(i) + "," + name(i) + ") not known to vanish");
    }
  }
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = i + 1; j < t; ++j) {
      const auto& fwd = rep.table[i][j];
      const std::string p = "(" + name(i) + "," + name(j) + ")";
      if (fwd.hom != 0 || fwd.ext1 != 0 || !fwd.inferred_ext2 || *fwd.inferred_ext2 != 0) {
        rep.condition2 = false;
        rep.failures.push_back("(2) Hom/Ext1/Ext2" + p + " = " + std::to_string(fwd.hom) + "/" +
                               std::to_string(fwd.ext1) + "/" +
                               (fwd.inferred_ext2 ? std::to_string(*fwd.inferred_ext2) : std::string("?")));
      }
      const auto& back = rep.table[j][i];
      if (back.hom != 0) {
        rep.condition3 = false;
        rep.failures.push_back("(3) Hom(" + name(j) + "," + name(i) + ") = " + std::to_string(back.hom));
      }
    }
  return rep;
}

ExceptionalPair make_exceptional_pair(Representation e1, Representation e2) {
  SequenceReport report = verify_orthogonal_exceptional({e1, e2});
  ExtCocycleBasis cocycles = ext1_space(e2, e1);
  return ExceptionalPair{std::move(e1), std::move(e2), std::move(cocycles), std::move(report)};
}

AlgebraPtr build_quotient_algebra(const ExceptionalPair& pair) {
  if (!pair.report.ok()) throw CertificateError("build_quotient_algebra: the pair is not orthogonal exceptional");
  const auto& back = pair.report.table[1][0];
  if (!back.inferred_ext2 || *back.inferred_ext2 != 0)
    throw CertificateError("build_quotient_algebra: Ext2(E2,E1) is not known to vanish; the quotient would need relations");
  const std::size_t k = pair.cocycles.dim;
  std::vector<ArrowSpec> arrows;
  for (std::size_t g = 0; g < k; ++g) arrows.push_back({arrow_name(g, k), "2", "1"});
  return BoundQuiverAlgebra::make(Quiver({"1", "2"}, std::move(arrows)));
}

Representation lift(const ExceptionalPair& pair, const Representation& mprime) {
  const Quiver& qe = mprime.quiver();
  if (qe.vertex_count() != 2 || qe.vertices()[0] != "1" || qe.vertices()[1] != "2" ||
      qe.arrow_count() != pair.cocycles.dim)
    throw InputError("lift: module is not over the quotient algebra of this pair");
  for (const auto& g : qe.arrows())
    if (g.tail != 1 || g.head != 0) throw InputError("lift: quotient algebra arrows must run 2 -> 1");
  const AlgebraPtr& a = pair.e1.algebra();
  const Quiver& q = a->quiver();
  for (const auto& z : pair.cocycles.basis) {
    bool shaped = z.size() == q.arrow_count();
    for (std::size_t k = 0; k < q.arrow_count() && shaped; ++k)
      shaped = z[k].rows() == sz(pair.e1.dim()[q.arrow(k).head]) && z[k].cols() == sz(pair.e2.dim()[q.arrow(k).tail]);
    if (!shaped) throw CertificateError("lift: cocycle does not map E2 to E1");
  }
  const std::size_t d1 = sz(mprime.dim()[0]);
  const std::size_t d2 = sz(mprime.dim()[1]);
  const DimVector& f1 = pair.e1.dim();
  const DimVector& f2 = pair.e2.dim();
  const DimVector d = static_cast<std::int64_t>(d1) * f1 + static_cast<std::int64_t>(d2) * f2;
  std::vector<Matrix> mats;
  for (std::size_t k = 0; k < q.arrow_count(); ++k) {
    const Arrow& arrow = q.arrow(k);
    const std::size_t top_h = sz(f1[arrow.head]) * d1, top_t = sz(f1[arrow.tail]) * d1;
    Matrix m(sz(d[arrow.head]), sz(d[arrow.tail]));
    m.set_block(0, 0, kron(pair.e1.matrix(k), Matrix::identity(d1)));
    Matrix glue(top_h, sz(f2[arrow.tail]) * d2);
    for (std::size_t g = 0; g < qe.arrow_count(); ++g) glue += kron(pair.cocycles.basis[g][k], mprime.matrix(g));
    m.set_block(0, top_t, glue);
    m.set_block(top_h, top_t, kron(pair.e2.matrix(k), Matrix::identity(d2)));
    mats.push_back(std::move(m));
  }
  try {
    return Representation(a, d, std::move(mats));
  } catch (const InvalidRepresentation& e) {
    throw CertificateError(std::string("lift: result is not a module (cocycle basis defect): ") + e.what());
  }
}

Representation kronecker_to_quotient(const Representation& km, const AlgebraPtr& quotient) {
  const Quiver& q = km.quiver();
  if (q.vertex_count() != 2 || q.arrow_count() != 2 || q.arrow(0).tail != q.arrow(1).tail ||
      q.arrow(0).head != q.arrow(1).head || q.arrow(0).tail == q.arrow(0).head)
    throw InputError("kronecker_to_quotient: module is not over a Kronecker quiver");
  if (quotient->arrow_count() != 2) throw InputError("kronecker_to_quotient: quotient algebra is not Kronecker");
  const std::size_t source = q.arrow(0).tail, sink = q.arrow(0).head;
  DimVector d({km.dim()[sink], km.dim()[source]});
  return Representation(quotient, std::move(d), {km.matrix(0), km.matrix(1)});
}

PairSearchResult find_orthogonal_pair(const AlgebraPtr& a, const PairSearchOptions& options) {
  const std::size_t n = a->vertex_count();
  DimVector h;
  Weight theta_h;
  try {
    h = find_isotropic_root(*a);
    theta_h = defect_weight(*a, h);
  } catch (const std::exception& e) {
    fail("isotropic-root", e);
  }

  std::optional<Representation> stable;
  try {
    if (options.witness) {
      if (!same_algebra(options.witness->algebra(), a) || options.witness->dim() != h)
        throw InputError("witness must be a module of dimension " + to_string(h) + " over the algebra");
      const auto v = is_stable(*options.witness, theta_h, options.subrep);
      if (v.status == StabilityStatus::undecided) throw UndecidedError("stability of the witness is undecided");
      if (v.status != StabilityStatus::stable) throw CertificateError("witness is not theta_h-stable");
      stable = *options.witness;
    } else {
      if (!a->hereditary()) throw InputError("algebras with relations need a theta_h-stable witness module");
      Rng rng(mix_seed(options.seed, 0x51ab1e));
      bool undecided = false;
      for (std::size_t attempt = 0; attempt < options.stable_module_attempts && !stable; ++attempt) {
        Representation m = random_module(a, h, rng, 2);
        const auto v = is_stable(m, theta_h, options.subrep);
        if (v.status == StabilityStatus::stable) stable = std::move(m);
        else if (v.status == StabilityStatus::undecided) undecided = true;
      }
      if (!stable) {
        if (undecided) throw UndecidedError("no decided theta_h-stable module of dimension h");
        throw CertificateError("no theta_h-stable module of dimension h found");
      }
    }
  } catch (const std::exception& e) {
    fail("stable-module", e);
  }

  std::optional<EffCone> cone;
  try {
    cone = a->hereditary() ? effective_cone(a, h) : effective_cone(*options.witness, options.subrep);
    if (cone->dimension + 1 != n)
      throw CertificateError("Eff(A,h) has dimension " + std::to_string(cone->dimension) + ", expected " +
                             std::to_string(n - 1));
    if (!cone->contains(theta_h)) throw CertificateError("theta_h is not an effective weight");
  } catch (const std::exception& e) {
    fail("effective-cone", e);
  }

  std::optional<std::size_t> facet_index;
  Weight theta0;
  std::optional<StablePair> sp;
  try {
    for (std::size_t f = 0; f < cone->facets.size() && !sp; ++f) {
      Weight w;
      try {
        w = facet_interior_weight(*cone, cone->facets[f]);
      } catch (const InputError&) {
        continue;
      }
      auto pairs = facet_stable_pairs(a, h, w);
      if (pairs.empty()) continue;
      facet_index = f;
      theta0 = w;
      sp = pairs.front();
    }
    if (!sp) throw InputError("no facet of Eff(A,h) carries a pair of real roots");
    if (!facet_matches_pair(*cone, cone->facets[*facet_index], *sp))
      throw CertificateError("facet differs from Eff cut by the hyperplanes of the pair");
    const Rational t1 = theta_h(sp->h1), t2 = theta_h(sp->h2);
    if (sgn(t1) == 0 || sgn(t2) == 0 || sgn(t1) == sgn(t2))
      throw CertificateError("theta_h does not separate the pair");
    if (sgn(t1) > 0) {
      std::swap(sp->h1, sp->h2);
      std::swap(sp->n1, sp->n2);
    }
  } catch (const std::exception& e) {
    fail("stable-pair", e);
  }

  std::optional<ExceptionalPair> pair;
  try {
    if (a->hereditary()) {
      ExceptionalOptions eo;
      eo.seed = mix_seed(options.seed, 1);
      Representation e1 = construct_exceptional(a, sp->h1, eo);
      eo.seed = mix_seed(options.seed, 2);
      Representation e2 = construct_exceptional(a, sp->h2, eo);
      pair = make_exceptional_pair(std::move(e1), std::move(e2));
    } else {
      auto w = find_rational_subrep(*stable, sp->h1, options.subrep);
      if (!w) throw UndecidedError("no rational subrepresentation of dimension " + to_string(sp->h1) + " in the witness");
      pair = make_exceptional_pair(restrict_to_subrep(*stable, *w), quotient_by_subrep(*stable, *w));
    }
  } catch (const std::exception& e) {
    fail("exceptional", e);
  }

  try {
    if (!pair->report.ok()) {
      std::string msg = "pair is not orthogonal exceptional:";
      for (const auto& f : pair->report.failures) msg += " " + f;
      throw CertificateError(msg);
    }
    const auto& back = pair->report.table[1][0];
    if (back.ext1 != 2) throw CertificateError("dim Ext1(E2,E1) = " + std::to_string(back.ext1) + ", expected 2");
    if (!back.inferred_ext2 || *back.inferred_ext2 != 0) throw CertificateError("Ext2(E2,E1) does not vanish");
  } catch (const std::exception& e) {
    fail("certificates", e);
  }

  return PairSearchResult{h, theta_h, std::move(*stable), std::move(*cone), *facet_index, theta0, *sp, std::move(*pair)};
}

}  // namespace quiverforge
