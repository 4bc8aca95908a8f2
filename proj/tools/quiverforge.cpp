#include <CLI11.hpp>

#include <iostream>

#include "quiverforge/errors.hpp"
#include "quiverforge/io.hpp"

using namespace quiverforge;
namespace qio = quiverforge::io;
using qio::json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_input = 1;
constexpr int exit_certificate = 2;
constexpr int exit_undecided = 3;

json stamped(json j) {
  j["schema_version"] = qio::schema_version;
  return j;
}

Representation load_module(const AlgebraPtr& a, const std::string& path) {
  return qio::representation_from_json(a, qio::read_json_file(path));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quiverforge: exact invariants of quiver representations"};
  app.require_subcommand(1);

  std::string algebra_path, m_path, n_path, out_path = "-", extra_path, witness_path;
  std::vector<std::string> euler_args;
  std::string tits_arg, theta_arg, dim_arg, theta0_arg;
  bool isotropic = false, want_stable = false, cross_check = false, all_pairs = false;
  std::uint64_t seed = 7;

  auto* hom = app.add_subcommand("hom", "basis of Hom(M, N)");
  auto* ext1 = app.add_subcommand("ext1", "cocycle basis of Ext^1(M, N)");
  for (auto* sub : {hom, ext1}) {
    sub->add_option("algebra", algebra_path)->required();
    sub->add_option("M", m_path)->required();
    sub->add_option("N", n_path)->required();
    sub->add_option("-o,--output", out_path);
  }

  auto* forms = app.add_subcommand("forms", "Euler and Tits forms, isotropic root");
  forms->add_option("algebra", algebra_path)->required();
  forms->add_option("--euler", euler_args, "two dimension vectors d e")->expected(2);
  forms->add_option("--tits", tits_arg);
  forms->add_flag("--isotropic", isotropic);
  forms->add_option("-o,--output", out_path);

  auto* stab = app.add_subcommand("stability", "theta-(semi)stability of a module");
  stab->add_option("algebra", algebra_path)->required();
  stab->add_option("M", m_path)->required();
  stab->add_option("--theta", theta_arg)->required();
  stab->add_flag("--stable", want_stable);
  stab->add_flag("--cross-check", cross_check, "run the Groebner decider even when a witness is found");
  stab->add_option("--seed", seed);
  stab->add_option("-o,--output", out_path);

  auto* eff = app.add_subcommand("effcone", "cone of effective weights");
  eff->add_option("algebra", algebra_path)->required();
  eff->add_option("--dim", dim_arg, "dimension vector (default: the isotropic root)");
  eff->add_option("--witness", witness_path, "explicit generic module (algebras with relations)");
  eff->add_option("-o,--output", out_path);

  auto* sp = app.add_subcommand("stablepair", "pair of real roots on a facet hyperplane");
  sp->add_option("algebra", algebra_path)->required();
  sp->add_option("--theta0", theta0_arg)->required();
  sp->add_option("--dim", dim_arg, "dimension vector (default: the isotropic root)");
  sp->add_flag("--all", all_pairs);
  sp->add_option("-o,--output", out_path);

  auto* pair = app.add_subcommand("pair", "orthogonal exceptional pair");
  pair->add_option("algebra", algebra_path)->required();
  pair->add_option("--seed", seed);
  pair->add_option("--witness", witness_path, "theta_h-stable module of dimension h (algebras with relations)");
  pair->add_option("-o,--output", out_path);

  auto* lft = app.add_subcommand("lift", "lift a module over the quotient algebra");
  lft->add_option("algebra", algebra_path)->required();
  lft->add_option("pair", extra_path)->required();
  lft->add_option("Mprime", m_path)->required();
  lft->add_option("-o,--output", out_path);

  auto* thm = app.add_subcommand("theorem11", "lift the Kronecker (3,3) module into the algebra");
  thm->add_option("algebra", algebra_path)->required();
  thm->add_option("--seed", seed);
  thm->add_option("--witness", witness_path);
  thm->add_option("-o,--output", out_path);

  auto* ver = app.add_subcommand("verify", "recheck every certificate of an instance");
  ver->add_option("instance", extra_path)->required();
  ver->add_option("-o,--output", out_path);

  auto* zw = app.add_subcommand("zwara", "the Kronecker (3,3) module");
  zw->add_option("-o,--output", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_input;
  }

  try {
    if (*zw) {
      qio::write_json(stamped(qio::to_json(zwara_module())), out_path);
      return exit_ok;
    }
    if (*ver) {
      const BadOrbitInstance inst = qio::instance_from_json(qio::read_json_file(extra_path));
      const VerifyReport report = verify_instance(inst);
      qio::write_json(qio::to_json(report), out_path);
      for (const auto& c : report.checks)
        if (!c.passed) std::cerr << "FAILED " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
      return report.ok() ? exit_ok : exit_certificate;
    }

    const AlgebraPtr a = qio::algebra_from_json(qio::read_json_file(algebra_path));
    const Quiver& q = a->quiver();
    auto dim_or_root = [&]() { return dim_arg.empty() ? find_isotropic_root(*a) : qio::parse_dim(q, dim_arg); };

    if (*hom || *ext1) {
      const Representation m = load_module(a, m_path);
      const Representation n = load_module(a, n_path);
      qio::write_json(*hom ? qio::to_json(m, n, hom_space(m, n)) : qio::to_json(m, n, ext1_space(m, n)), out_path);
    } else if (*forms) {
      json j;
      if (!euler_args.empty()) {
        const DimVector d = qio::parse_dim(q, euler_args[0]), e = qio::parse_dim(q, euler_args[1]);
        j["euler"] = euler_form(*a, d, e);
      }
      if (!tits_arg.empty()) j["tits"] = tits_form(*a, qio::parse_dim(q, tits_arg));
      if (isotropic) {
        const DimVector h = find_isotropic_root(*a);
        j["isotropic_root"] = qio::dim_to_json(q, h);
        j["defect_weight"] = qio::weight_to_json(q, defect_weight(*a, h));
      }
      j["euler_matrix"] = euler_matrix(*a);
      qio::write_json(stamped(j), out_path);
    } else if (*stab) {
      const Representation m = load_module(a, m_path);
      const Weight theta = qio::parse_weight(q, theta_arg);
      SubrepOptions opts;
      opts.seed = seed;
      opts.cross_check = cross_check;
      const StabilityVerdict v = want_stable ? is_stable(m, theta, opts) : is_semistable(m, theta, opts);
      qio::write_json(qio::to_json(q, v), out_path);
      return v.status == StabilityStatus::undecided ? exit_undecided : exit_ok;
    } else if (*eff) {
      if (!witness_path.empty()) {
        qio::write_json(qio::to_json(q, effective_cone(load_module(a, witness_path))), out_path);
      } else {
        qio::write_json(qio::to_json(q, effective_cone(a, dim_or_root())), out_path);
      }
    } else if (*sp) {
      const DimVector h = dim_or_root();
      const Weight theta0 = qio::parse_weight(q, theta0_arg);
      json j;
      if (all_pairs) {
        j["pairs"] = json::array();
        for (const auto& p : facet_stable_pairs(a, h, theta0)) j["pairs"].push_back(qio::to_json(q, p));
      } else {
        j = qio::to_json(q, facet_stable_pair(a, h, theta0));
      }
      qio::write_json(stamped(j), out_path);
    } else if (*pair) {
      PairSearchOptions opts;
      opts.seed = seed;
      if (!witness_path.empty()) opts.witness = load_module(a, witness_path);
      const PairSearchResult r = find_orthogonal_pair(a, opts);
      json j = qio::to_json(r.pair);
      j["h"] = qio::dim_to_json(q, r.h);
      j["theta0"] = qio::weight_to_json(q, r.theta0);
      j["stable_pair"] = qio::to_json(q, r.stable_pair);
      qio::write_json(j, out_path);
    } else if (*lft) {
      const ExceptionalPair p = qio::exceptional_pair_from_json(a, qio::read_json_file(extra_path));
      const AlgebraPtr quotient = build_quotient_algebra(p);
      const json mj = qio::read_json_file(m_path);
      bool kronecker_labels = false;
      if (mj.contains("matrices") && mj.at("matrices").is_object())
        for (const auto& [id, value] : mj.at("matrices").items())
          if (!quotient->quiver().find_arrow(id)) kronecker_labels = true;
      const Representation mprime = kronecker_labels
                                        ? kronecker_to_quotient(qio::representation_from_json(kronecker_algebra(), mj), quotient)
                                        : qio::representation_from_json(quotient, mj);
      qio::write_json(stamped(qio::to_json(lift(p, mprime))), out_path);
    } else if (*thm) {
      PipelineOptions opts;
      opts.seed = seed;
      if (!witness_path.empty()) opts.witness = load_module(a, witness_path);
      qio::write_json(qio::to_json(build_bad_orbit_instance(a, opts)), out_path);
    }
    return exit_ok;
  } catch (const StageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.cause()) {
      case StageError::Cause::input: return exit_input;
      case StageError::Cause::certificate: return exit_certificate;
      case StageError::Cause::undecided: return exit_undecided;
    }
  } catch (const UndecidedError& e) {
    std::cerr << "undecided: " << e.what() << "\n";
    return exit_undecided;
  } catch (const CertificateError& e) {
    std::cerr << "certificate failure: " << e.what() << "\n";
    return exit_certificate;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return exit_input;
  } catch (const InvalidRepresentation& e) {
    std::cerr << "invalid representation: " << e.what() << "\n";
    return exit_input;
  } catch (const json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return exit_input;
  }
  return exit_input;
}
