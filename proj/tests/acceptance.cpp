#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "quiverforge/errors.hpp"
#include "quiverforge/pipeline.hpp"

#ifndef QF_CLI
#define QF_CLI "quiverforge"
#endif

using namespace quiverforge;
using fixtures::dv;
using fixtures::wt;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

void expect(Outcome& o, bool cond, const std::string& what) {
  if (!cond) {
    o.pass = false;
    if (!o.detail.empty()) o.detail += "; ";
    o.detail += what;
  }
}

std::string str(const DimVector& d) {
  std::ostringstream os;
  os << d;
  return os.str();
}

// ---- F_5 brute force for Kronecker modules ---------------------------------

constexpr int P = 5;
using Vec3 = std::array<int, 3>;
using Mat3 = std::array<Vec3, 3>;  // rows

int rank_mod_p(std::vector<Vec3> rows) {
  int r = 0;
  for (int c = 0; c < 3 && r < static_cast<int>(rows.size()); ++c) {
    int piv = -1;
    for (int i = r; i < static_cast<int>(rows.size()); ++i)
      if (rows[i][c] % P) piv = i;
    if (piv < 0) continue;
    std::swap(rows[r], rows[piv]);
    int inv = 1;
    while ((rows[r][c] * inv) % P != 1) ++inv;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == r || rows[i][c] % P == 0) continue;
      const int f = rows[i][c] * inv % P;
      for (int k = 0; k < 3; ++k) rows[i][k] = ((rows[i][k] - f * rows[r][k]) % P + P) % P;
    }
    ++r;
  }
  return r;
}

Vec3 apply(const Mat3& m, const Vec3& v) {
  Vec3 out{};
  for (int i = 0; i < 3; ++i) {
    int s = 0;
    for (int j = 0; j < 3; ++j) s += m[i][j] * v[j];
    out[i] = s % P;
  }
  return out;
}

// smallest dim(aU + bU) over all k-dimensional U in F_5^3, by enumerating spanning k-tuples
std::array<int, 4> min_image(const Mat3& a, const Mat3& b) {
  std::array<int, 4> best{0, 3, 3, 3};
  for (int k = 1; k <= 3; ++k) {
    long total = 1;
    for (int i = 0; i < 3 * k; ++i) total *= P;
    for (long code = 0; code < total; ++code) {
      std::vector<Vec3> u(k);
      long c = code;
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < 3; ++j) {
          u[i][j] = static_cast<int>(c % P);
          c /= P;
        }
      if (rank_mod_p(u) != k) continue;
      std::vector<Vec3> img;
      for (const auto& v : u) {
        img.push_back(apply(a, v));
        img.push_back(apply(b, v));
      }
      best[k] = std::min(best[k], rank_mod_p(img));
    }
  }
  return best;
}

// ---- criteria ---------------------------------------------------------------

Outcome criterion1() {
  Outcome o;
  const auto z = zwara_module();
  const Matrix a{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}};
  const Matrix b{{1, 0, 0}, {0, 0, 0}, {0, 0, 1}};
  const auto& q = z.algebra()->quiver();
  expect(o, z.matrix(q.arrow_index("a")) == a, "M(a) differs");
  expect(o, z.matrix(q.arrow_index("b")) == b, "M(b) differs");
  expect(o, z.dim() == dv({3, 3}), "dimension");
  expect(o, validate_representation(*z.algebra(), z.dim(), z.matrices()).ok(), "does not validate");
  expect(o, is_kronecker(*z.algebra()), "algebra is not K2");
  return o;
}

Outcome criterion2() {
  Outcome o;
  std::size_t pairs = 0;
  for (const auto& a : {fixtures::kronecker(), fixtures::d4()}) {
    Rng rng(2024 + a->vertex_count());
    for (int i = 0; i < 20; ++i) {
      const auto d = fixtures::random_dim(a->vertex_count(), 3, rng);
      const auto e = fixtures::random_dim(a->vertex_count(), 3, rng);
      const auto m = fixtures::random_module(a, d, rng.next(), 2, 20);
      const auto n = fixtures::random_module(a, e, rng.next(), 2, 20);
      const auto rep = euler_pairing_check(m, n);
      const auto h = static_cast<std::int64_t>(oracle::hom_dim(m, n));
      const auto x = static_cast<std::int64_t>(oracle::ext1_dim(m, n));
      const auto expected = oracle::euler(*a, d, e);
      expect(o, rep.hom == h && rep.ext1 == x, "hom/ext1 disagree with oracle at pair " + std::to_string(pairs));
      expect(o, euler_form(*a, d, e) == expected, "Euler form disagrees with expansion");
      expect(o, expected == h - x, "<d,e> != hom - ext1 at pair " + std::to_string(pairs));
      expect(o, rep.inferred_ext2 && *rep.inferred_ext2 == 0, "inferred ext2 nonzero");
      ++pairs;
    }
  }
  o.detail = std::to_string(pairs) + " pairs" + (o.detail.empty() ? "" : ": " + o.detail);
  return o;
}

Outcome criterion3() {
  Outcome o;
  const auto check = [&](const AlgebraPtr& a, const DimVector& want) {
    const auto h = find_isotropic_root(*a);
    expect(o, h == want, "root " + str(h));
    expect(o, tits_form(*a, h) == 0, "q(h) != 0");
    std::int64_t g = 0;
    for (std::size_t i = 0; i < h.size(); ++i) g = std::gcd(g, h[i]);
    expect(o, g == 1, "root divisible");
  };
  check(fixtures::kronecker(), dv({1, 1}));
  check(fixtures::d4(), dv({2, 1, 1, 1, 1}));
  for (const auto& a : {fixtures::a3(), fixtures::d4_dynkin()}) {
    bool threw = false;
    try {
      find_isotropic_root(*a);
    } catch (const InputError&) {
      threw = true;
    }
    expect(o, threw, "Dynkin input accepted");
  }
  return o;
}

Outcome criterion4() {
  Outcome o;
  SubrepOptions only_groebner;
  only_groebner.use_certifier = false;
  for (const auto& a : {fixtures::kronecker(), fixtures::d4()}) {
    const auto h = find_isotropic_root(*a);
    const auto theta = defect_weight(*a, h);
    bool found = false;
    std::size_t tried = 0;
    for (std::uint64_t s = 1; s <= 20 && !found; ++s, ++tried) {
      const auto m = fixtures::random_module(a, h, 7000 + s, 3);
      const auto v = is_stable(m, theta, only_groebner);
      expect(o, v.status != StabilityStatus::undecided, "undecided at " + str(h));
      found = v.status == StabilityStatus::stable;
    }
    expect(o, found, "no stable module of dim " + str(h));
    o.detail += (o.detail.empty() ? "" : ", ") + str(h) + " stable after " + std::to_string(tried) + " draws";
  }
  return o;
}

Outcome criterion5() {
  Outcome o;
  const auto k2 = fixtures::kronecker();
  const DimVector d = dv({3, 3});
  // a = I, b = diag(1,2,3): eigenvectors are rational, so F_5 sees every subspace type
  const Mat3 a{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  const Mat3 b{{{1, 0, 0}, {0, 2, 0}, {0, 0, 3}}};
  const auto best = min_image(a, b);
  std::vector<DimVector> subs;
  for (std::int64_t e1 = 0; e1 <= 3; ++e1)
    for (std::int64_t e2 = 0; e2 <= 3; ++e2)
      if (e1 == 0 || best[e1] <= e2) subs.push_back(dv({e1, e2}));
  const auto cone = effective_cone(k2, d);
  std::size_t members = 0;
  for (long x = -4; x <= 4; ++x)
    for (long y = -4; y <= 4; ++y) {
      const Weight t = wt({x, y});
      bool in = t(d) == 0;
      for (const auto& e : subs)
        if (t(e) > 0) in = false;
      members += in;
      expect(o, in == cone.contains(t), "grid point (" + std::to_string(x) + "," + std::to_string(y) + ")");
      if (in) expect(o, x >= 0 && x == -y, "oracle point off the ray");
    }
  expect(o, cone.dimension == 1 && cone.rays == std::vector<Weight>{wt({1, -1})} && cone.lineality.empty(),
         "K2 cone is not the ray (1,-1)");
  const auto c4 = effective_cone(fixtures::d4(), dv({2, 1, 1, 1, 1}));
  expect(o, c4.dimension == 4, "Eff(D4~, h) has dimension " + std::to_string(c4.dimension));
  o.detail = std::to_string(members) + " oracle grid points on the ray, D4~ dimension " + std::to_string(c4.dimension) +
             (o.detail.empty() ? "" : ": " + o.detail);
  return o;
}

Outcome criterion6() {
  Outcome o;
  for (const auto& a : {fixtures::d4(), fixtures::a2_tilde()}) {
    const auto r = find_orthogonal_pair(a);
    const auto& p = r.stable_pair;
    expect(o, p.n1 == 1 && p.n2 == 1 && p.l == 2, "n1, n2, l");
    expect(o, tits_form(*a, p.h1) == 1 && tits_form(*a, p.h2) == 1, "q(h_i) != 1");
    const auto& e1 = r.pair.e1;
    const auto& e2 = r.pair.e2;
    const auto back = euler_pairing_check(e2, e1);
    expect(o, back.ext1 == 2, "dim Ext1(E2,E1) = " + std::to_string(back.ext1));
    expect(o, back.inferred_ext2 && *back.inferred_ext2 == 0, "inferred Ext2(E2,E1) nonzero");
    expect(o, back.hom == 0, "Hom(E2,E1) nonzero");
    const auto fwd = euler_pairing_check(e1, e2);
    expect(o, fwd.hom == 0 && fwd.ext1 == 0 && fwd.inferred_ext2 && *fwd.inferred_ext2 == 0, "forward order not orthogonal");
    expect(o, end_dim(e1) == 1 && end_dim(e2) == 1 && ext1_dim(e1, e1) == 0 && ext1_dim(e2, e2) == 0, "not exceptional");
    expect(o, r.theta_h(e1.dim()) < 0 && r.theta_h(e2.dim()) > 0, "theta_h signs");
    expect(o, oracle::hom_dim(e2, e1) == 0 && oracle::ext1_dim(e2, e1) == 2, "oracle disagrees");
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  const auto r = find_orthogonal_pair(fixtures::d4());
  const auto q = build_quotient_algebra(r.pair);
  const auto k2 = kronecker_algebra();
  Rng rng(77);
  std::vector<Representation> mods, lifted;
  for (int i = 0; i < 10; ++i) {
    const auto d = dv({rng.uniform(0, 3), rng.uniform(0, 3)});
    const auto m = kronecker_to_quotient(fixtures::random_module(k2, d, rng.next(), 2, 25), q);
    mods.push_back(m);
    lifted.push_back(lift(r.pair, m));
  }
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < mods.size(); ++i)
    for (std::size_t j = 0; j < mods.size(); ++j, ++pairs) {
      expect(o, oracle::hom_dim(mods[i], mods[j]) == oracle::hom_dim(lifted[i], lifted[j]),
             "hom " + std::to_string(i) + "," + std::to_string(j));
      expect(o, oracle::ext1_dim(mods[i], mods[j]) == oracle::ext1_dim(lifted[i], lifted[j]),
             "ext1 " + std::to_string(i) + "," + std::to_string(j));
    }
  const auto lz = lift(r.pair, kronecker_to_quotient(zwara_module(), q));
  const auto ez = end_dim(zwara_module());
  expect(o, end_dim(lz) == ez && oracle::hom_dim(lz, lz) == ez, "end_dim(lift(Zwara))");
  o.detail = std::to_string(pairs) + " ordered pairs, end_dim " + std::to_string(ez) +
             (o.detail.empty() ? "" : ": " + o.detail);
  return o;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run(const std::string& cmd) {
  const int rc = std::system((cmd + " >/dev/null 2>&1").c_str());
  return rc == -1 ? -1 : WEXITSTATUS(rc);
}

Outcome criterion8() {
  Outcome o;
  const auto dir = std::filesystem::temp_directory_path() / ("qf_acceptance_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  const std::string cli = QF_CLI;
  const std::vector<std::pair<std::string, DimVector>> cases{{"d4_subspace", dv({6, 3, 3, 3, 3})},
                                                            {"a2_tilde", dv({3, 3, 3})}};
  for (const auto& [name, want] : cases) {
    const std::string alg = std::string(QF_TEST_DATA) + "/" + name + ".json";
    const auto f1 = dir / (name + "_1.json");
    const auto f2 = dir / (name + "_2.json");
    expect(o, run(cli + " theorem11 " + alg + " --seed 7 -o " + f1.string()) == 0, name + ": theorem11 failed");
    expect(o, run(cli + " theorem11 " + alg + " --seed 7 -o " + f2.string()) == 0, name + ": second run failed");
    const auto t1 = slurp(f1);
    expect(o, !t1.empty() && t1 == slurp(f2), name + ": runs differ");
    expect(o, run(cli + " verify " + f1.string()) == 0, name + ": verify failed");
    try {
      const auto inst = io::instance_from_json(io::json::parse(t1));
      expect(o, inst.d == want, name + ": d = " + str(inst.d));
      expect(o, validate_representation(*inst.algebra, inst.m.dim(), inst.m.matrices()).ok(), name + ": M invalid");
    } catch (const std::exception& e) {
      expect(o, false, name + ": " + e.what());
    }
  }
  std::filesystem::remove_all(dir);
  return o;
}

Outcome criterion9() {
  Outcome o;
  const std::vector<AlgebraPtr> algebras{fixtures::kronecker(), fixtures::d4(), fixtures::a2_tilde(), fixtures::a3()};
  Rng rng(9);
  std::size_t a_true = 0, stable = 0, verdicts = 0;
  for (int i = 0; i < 50; ++i) {
    const auto& a = algebras[i % algebras.size()];
    const std::size_t n = a->vertex_count();
    DimVector d = fixtures::random_dim(n, 3, rng);
    if (d.is_zero()) d[0] = 1;
    const auto m = fixtures::random_module(a, d, rng.next(), 2, 30);
    const auto subs = subdimension_vectors(d);
    const auto& e = subs[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(subs.size()) - 1))];
    if (const auto w = find_rational_subrep(m, e)) {
      ++a_true;
      expect(o, is_subrepresentation(m, *w) && witness_dimension(*w) == e, "witness fails at instance " + std::to_string(i));
      expect(o, decide_subrep(m, e) == Decision::yes, "A true but B not true at instance " + std::to_string(i));
    }
    // a random weight with theta(d) = 0
    std::vector<Rational> t(n);
    for (auto& x : t) x = static_cast<long>(rng.uniform(-3, 3));
    std::size_t piv = 0;
    while (d[piv] == 0) ++piv;
    Rational s = 0;
    for (std::size_t k = 0; k < n; ++k)
      if (k != piv) s += t[k] * static_cast<long>(d[k]);
    t[piv] = -s / static_cast<long>(d[piv]);
    const auto v = is_stable(m, Weight(t));
    ++verdicts;
    if (v.status == StabilityStatus::stable) {
      ++stable;
      expect(o, is_schur(m), "stable but not Schur at instance " + std::to_string(i));
    }
    if (v.witness) expect(o, is_subrepresentation(m, *v.witness), "verdict witness fails at " + std::to_string(i));
    const auto z = is_semistable(m, Weight(std::vector<Rational>(n)));
    expect(o, z.status == StabilityStatus::semistable, "theta = 0 not semistable at " + std::to_string(i));
  }
  o.detail = std::to_string(a_true) + " certifier witnesses, " + std::to_string(stable) + "/" +
             std::to_string(verdicts) + " stable verdicts" + (o.detail.empty() ? "" : ": " + o.detail);
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    double bound_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, 1, criterion1},   {2, 10, criterion2},  {3, 1, criterion3},    {4, 300, criterion4}, {5, 30, criterion5},
      {6, 120, criterion6}, {7, 120, criterion7}, {8, 300, criterion8}, {9, 600, criterion9},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.bound_s) {
      o.pass = false;
      o.detail += " (over runtime bound)";
    }
    failed += !o.pass;
    std::printf("criterion %d: %s  %.3fs (bound %.0fs)  %s\n", c.id, o.pass ? "PASS" : "FAIL", secs, c.bound_s,
                o.detail.c_str());
  }
  std::fflush(stdout);
  return failed ? 1 : 0;
}
