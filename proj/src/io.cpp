#include "quiverforge/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "quiverforge/errors.hpp"

namespace quiverforge::io {

namespace {

const json& need(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t sz(std::int64_t d) { return static_cast<std::size_t>(d); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
  throw InputError("expected a rational as \"p/q\" string or an integer");
}

std::int64_t int_from_json(const json& j) {
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_string()) {
    const Rational r = parse_rational(j.get<std::string>());
    if (r.get_den() != 1 || !r.get_num().fits_slong_p()) throw InputError("expected an integer");
    return r.get_num().get_si();
  }
  throw InputError("expected an integer");
}

std::vector<std::string> split(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',' || c == ';' || c == ' ') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

json morphism_json(const Quiver& q, const std::vector<Matrix>& parts, bool by_arrow) {
  json o = json::object();
  for (std::size_t i = 0; i < parts.size(); ++i)
    o[by_arrow ? q.arrow(i).id : q.vertices()[i]] = to_json(parts[i]);
  return o;
}

json dims_list(const Quiver& q, const std::vector<DimVector>& ds) {
  json a = json::array();
  for (const auto& d : ds) a.push_back(dim_to_json(q, d));
  return a;
}

}  // namespace

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void write_json(const json& j, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << dump(j);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << dump(j);
}

Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array()) throw InputError("matrix must be a list of rows");
  std::size_t width = j.empty() ? cols : (j[0].is_array() ? j[0].size() : 0);
  if (j.size() == 0 && rows != 0) width = 0;
  Matrix m(j.size(), width);
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array() || j[r].size() != width) throw InputError("ragged matrix");
    for (std::size_t c = 0; c < width; ++c) m(r, c) = rational_from_json(j[r][c]);
  }
  return m;
}

json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(format_rational(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

AlgebraPtr algebra_from_json(const json& j) {
  std::vector<std::string> vertices;
  for (const auto& v : need(j, "vertices")) {
    if (v.is_string()) vertices.push_back(v.get<std::string>());
    else if (v.is_number_integer()) vertices.push_back(std::to_string(v.get<std::int64_t>()));
    else throw InputError("vertex ids must be strings");
  }
  std::vector<ArrowSpec> arrows;
  if (j.contains("arrows"))
    for (const auto& a : j.at("arrows")) {
      auto id = [](const json& x) {
        return x.is_string() ? x.get<std::string>() : std::to_string(x.get<std::int64_t>());
      };
      arrows.push_back({id(need(a, "id")), id(need(a, "tail")), id(need(a, "head"))});
    }
  Quiver q(std::move(vertices), std::move(arrows));
  std::vector<Relation> relations;
  if (j.contains("relations"))
    for (const auto& r : j.at("relations")) {
      std::vector<std::pair<Rational, std::vector<std::string>>> terms;
      for (const auto& t : need(r, "terms"))
        terms.emplace_back(t.contains("coeff") ? rational_from_json(t.at("coeff")) : Rational(1),
                           need(t, "path").get<std::vector<std::string>>());
      relations.push_back(Relation::make(q, terms));
    }
  std::optional<int> gldim;
  if (j.contains("gldim_bound") && !j.at("gldim_bound").is_null())
    gldim = static_cast<int>(int_from_json(j.at("gldim_bound")));
  std::optional<Matrix> euler;
  if (j.contains("euler_matrix") && !j.at("euler_matrix").is_null()) {
    const auto n = q.vertex_count();
    euler = matrix_from_json(j.at("euler_matrix"), n, n);
  }
  return BoundQuiverAlgebra::make(std::move(q), std::move(relations), gldim, std::move(euler));
}

json to_json(const BoundQuiverAlgebra& a) {
  const Quiver& q = a.quiver();
  json j;
  j["vertices"] = q.vertices();
  j["arrows"] = json::array();
  for (const auto& arrow : q.arrows())
    j["arrows"].push_back({{"id", arrow.id}, {"tail", q.vertices()[arrow.tail]}, {"head", q.vertices()[arrow.head]}});
  j["relations"] = json::array();
  for (const auto& r : a.relations()) {
    json terms = json::array();
    for (const auto& t : r.terms) {
      std::vector<std::string> path;
      for (auto k : t.path) path.push_back(q.arrow(k).id);
      terms.push_back({{"coeff", format_rational(t.coeff)}, {"path", path}});
    }
    j["relations"].push_back({{"terms", terms}});
  }
  if (a.declared_gldim_bound()) j["gldim_bound"] = *a.declared_gldim_bound();
  if (a.euler_matrix_override()) j["euler_matrix"] = to_json(*a.euler_matrix_override());
  return j;
}

RawRepresentation raw_representation_from_json(const BoundQuiverAlgebra& a, const json& j) {
  const Quiver& q = a.quiver();
  RawRepresentation raw;
  const json& dim = need(j, "dim");
  if (!dim.is_object()) throw InputError("'dim' must map vertex ids to integers");
  for (const auto& [id, value] : dim.items()) raw.dim[id] = int_from_json(value);
  if (j.contains("matrices")) {
    const json& mats = j.at("matrices");
    if (!mats.is_object()) throw InputError("'matrices' must map arrow ids to matrices");
    for (const auto& [id, value] : mats.items()) {
      std::size_t rows = 0, cols = 0;
      if (auto k = q.find_arrow(id)) {
        const Arrow& arrow = q.arrow(*k);
        auto d = [&](std::size_t v) {
          auto it = raw.dim.find(q.vertices()[v]);
          return it == raw.dim.end() || it->second < 0 ? std::size_t{0} : sz(it->second);
        };
        rows = d(arrow.head);
        cols = d(arrow.tail);
      }
      raw.matrices[id] = matrix_from_json(value, rows, cols);
    }
  }
  return raw;
}

Representation representation_from_json(const AlgebraPtr& a, const json& j) {
  return Representation::from_raw(a, raw_representation_from_json(*a, j));
}

json to_json(const Representation& m) {
  const Quiver& q = m.quiver();
  json j;
  j["dim"] = dim_to_json(q, m.dim());
  j["matrices"] = morphism_json(q, m.matrices(), true);
  return j;
}

namespace {

DimVector nonnegative(DimVector d) {
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] < 0) throw InputError("dimension entries must be nonnegative");
  return d;
}

}  // namespace

DimVector dim_from_json(const Quiver& q, const json& j) {
  if (j.is_string()) return parse_dim(q, j.get<std::string>());
  DimVector d = DimVector::zero(q.vertex_count());
  if (j.is_array()) {
    if (j.size() != q.vertex_count()) throw InputError("dimension vector has the wrong length");
    for (std::size_t i = 0; i < j.size(); ++i) d[i] = int_from_json(j[i]);
    return nonnegative(d);
  }
  if (!j.is_object()) throw InputError("dimension vector must be an object keyed by vertex");
  for (const auto& [id, value] : j.items()) d[q.vertex_index(id)] = int_from_json(value);
  return nonnegative(d);
}

DimVector parse_dim(const Quiver& q, std::string_view text) {
  const auto parts = split(text);
  if (parts.size() != q.vertex_count())
    throw InputError("expected " + std::to_string(q.vertex_count()) + " entries in '" + std::string(text) + "'");
  DimVector d = DimVector::zero(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const Rational r = parse_rational(parts[i]);
    if (r.get_den() != 1 || !r.get_num().fits_slong_p()) throw InputError("dimension entries must be integers");
    d[i] = r.get_num().get_si();
  }
  return nonnegative(d);
}

json dim_to_json(const Quiver& q, const DimVector& d) {
  json o = json::object();
  for (std::size_t i = 0; i < d.size(); ++i) o[q.vertices()[i]] = d[i];
  return o;
}

Weight weight_from_json(const Quiver& q, const json& j) {
  if (j.is_string()) return parse_weight(q, j.get<std::string>());
  std::vector<Rational> w(q.vertex_count());
  if (j.is_array()) {
    if (j.size() != q.vertex_count()) throw InputError("weight has the wrong length");
    for (std::size_t i = 0; i < j.size(); ++i) w[i] = rational_from_json(j[i]);
    return Weight(std::move(w));
  }
  if (!j.is_object()) throw InputError("weight must be an object keyed by vertex");
  for (const auto& [id, value] : j.items()) w[q.vertex_index(id)] = rational_from_json(value);
  return Weight(std::move(w));
}

Weight parse_weight(const Quiver& q, std::string_view text) {
  const auto parts = split(text);
  if (parts.size() != q.vertex_count())
    throw InputError("expected " + std::to_string(q.vertex_count()) + " entries in '" + std::string(text) + "'");
  std::vector<Rational> w;
  for (const auto& p : parts) w.push_back(parse_rational(p));
  return Weight(std::move(w));
}

json weight_to_json(const Quiver& q, const Weight& w) {
  json o = json::object();
  for (std::size_t i = 0; i < w.size(); ++i) o[q.vertices()[i]] = format_rational(w[i]);
  return o;
}

json to_json(const Representation& m, const Representation&, const HomBasis& b) {
  json j{{"schema_version", schema_version}, {"dim", b.dim}, {"basis", json::array()}};
  for (const auto& phi : b.basis) j["basis"].push_back(morphism_json(m.quiver(), phi, false));
  return j;
}

json to_json(const Representation& m, const Representation&, const ExtCocycleBasis& b) {
  json j{{"schema_version", schema_version}, {"dim", b.dim}, {"basis", json::array()}};
  for (const auto& z : b.basis) j["basis"].push_back(morphism_json(m.quiver(), z, true));
  return j;
}

json to_json(const Quiver& q, const StabilityVerdict& v) {
  json j{{"schema_version", schema_version}, {"status", to_string(v.status)}, {"reason", v.reason}};
  j["violating"] = v.violating ? dim_to_json(q, *v.violating) : json(nullptr);
  if (v.witness) {
    json w = json::object();
    for (std::size_t i = 0; i < v.witness->size(); ++i) w[q.vertices()[i]] = to_json((*v.witness)[i]);
    j["witness"] = w;
  } else {
    j["witness"] = nullptr;
  }
  j["undecided"] = dims_list(q, v.undecided);
  return j;
}

json to_json(const Quiver& q, const EffCone& c) {
  json j;
  j["schema_version"] = schema_version;
  j["d"] = dim_to_json(q, c.d);
  j["backend"] = c.backend == EffBackend::recursion ? "recursion" : "witness";
  j["dimension"] = c.dimension;
  j["inequalities"] = dims_list(q, c.inequalities);
  j["rays"] = json::array();
  for (const auto& r : c.rays) j["rays"].push_back(weight_to_json(q, r));
  j["lineality"] = json::array();
  for (const auto& l : c.lineality) j["lineality"].push_back(weight_to_json(q, l));
  j["facets"] = json::array();
  for (const auto& f : c.facets)
    j["facets"].push_back({{"rays", f.rays}, {"supports", dims_list(q, f.supports)}, {"dimension", f.dimension}});
  return j;
}

EffCone eff_cone_from_json(const Quiver& q, const json& j) {
  EffCone c;
  c.ambient = q.vertex_count();
  c.d = dim_from_json(q, need(j, "d"));
  c.backend = need(j, "backend").get<std::string>() == "witness" ? EffBackend::witness : EffBackend::recursion;
  c.dimension = need(j, "dimension").get<std::size_t>();
  for (const auto& e : need(j, "inequalities")) c.inequalities.push_back(dim_from_json(q, e));
  for (const auto& r : need(j, "rays")) c.rays.push_back(weight_from_json(q, r));
  for (const auto& l : need(j, "lineality")) c.lineality.push_back(weight_from_json(q, l));
  for (const auto& f : need(j, "facets")) {
    EffFacet facet;
    facet.rays = need(f, "rays").get<std::vector<std::size_t>>();
    for (const auto& s : need(f, "supports")) facet.supports.push_back(dim_from_json(q, s));
    facet.dimension = need(f, "dimension").get<std::size_t>();
    c.facets.push_back(std::move(facet));
  }
  return c;
}

json to_json(const Quiver& q, const StablePair& p) {
  return {{"h1", dim_to_json(q, p.h1)}, {"h2", dim_to_json(q, p.h2)}, {"n1", p.n1}, {"n2", p.n2}, {"l", p.l}};
}

StablePair stable_pair_from_json(const Quiver& q, const json& j) {
  return StablePair{dim_from_json(q, need(j, "h1")), dim_from_json(q, need(j, "h2")), int_from_json(need(j, "n1")),
                    int_from_json(need(j, "n2")), int_from_json(need(j, "l"))};
}

json to_json(const SequenceReport& r) {
  json table = json::array();
  for (std::size_t i = 0; i < r.table.size(); ++i)
    for (std::size_t j = 0; j < r.table[i].size(); ++j) {
      const auto& e = r.table[i][j];
      table.push_back({{"pair", {i + 1, j + 1}},
                       {"hom", e.hom},
                       {"ext1", e.ext1},
                       {"pairing", e.pairing},
                       {"inferred_ext2", e.inferred_ext2 ? json(*e.inferred_ext2) : json(nullptr)}});
    }
  return {{"table", table},
          {"end_dims", r.end_dims},
          {"condition1", r.condition1},
          {"condition2", r.condition2},
          {"condition3", r.condition3},
          {"failures", r.failures},
          {"ok", r.ok()}};
}

json to_json(const ExceptionalPair& p) {
  const Quiver& q = p.e1.quiver();
  json j;
  j["schema_version"] = schema_version;
  j["E1"] = to_json(p.e1);
  j["E2"] = to_json(p.e2);
  j["cocycles"] = json::array();
  for (const auto& z : p.cocycles.basis) j["cocycles"].push_back(morphism_json(q, z, true));
  j["certificates"] = to_json(p.report);
  try {
    j["quotient_algebra"] = to_json(*build_quotient_algebra(p));
  } catch (const CertificateError&) {
    j["quotient_algebra"] = nullptr;
  }
  return j;
}

ExceptionalPair exceptional_pair_from_json(const AlgebraPtr& a, const json& j) {
  Representation e1 = representation_from_json(a, need(j, "E1"));
  Representation e2 = representation_from_json(a, need(j, "E2"));
  const Quiver& q = a->quiver();
  ExtCocycleBasis cocycles;
  for (const auto& z : need(j, "cocycles")) {
    Cocycle c;
    for (const auto& arrow : q.arrows()) {
      const auto rows = sz(e1.dim()[arrow.head]), cols = sz(e2.dim()[arrow.tail]);
      if (z.contains(arrow.id)) {
        c.push_back(matrix_from_json(z.at(arrow.id), rows, cols));
      } else {
        c.emplace_back(rows, cols);
      }
    }
    cocycles.basis.push_back(std::move(c));
  }
  cocycles.dim = cocycles.basis.size();
  SequenceReport report = verify_orthogonal_exceptional({e1, e2});
  return ExceptionalPair{std::move(e1), std::move(e2), std::move(cocycles), std::move(report)};
}

json to_json(const BadOrbitInstance& inst) {
  const Quiver& q = inst.algebra->quiver();
  json j;
  j["schema_version"] = schema_version;
  j["kind"] = "bad_orbit_instance";
  j["algebra"] = to_json(*inst.algebra);
  j["seed"] = inst.seed;
  j["d"] = dim_to_json(q, inst.d);
  j["module"] = to_json(inst.m);
  j["assumptions"] = "the input algebra is supplied as tame concealed or tame hereditary; no reduction is performed";
  j["cited_conclusion"] =
      "the orbit closure of the Kronecker (3,3) module is neither unibranch nor Cohen-Macaulay, and the lift "
      "transfers both properties; quoted, not computed";
  if (!inst.provenance) {
    j["provenance"] = {{"base_case", "kronecker"}};
    return j;
  }
  const auto& p = *inst.provenance;
  json pr;
  pr["h"] = dim_to_json(q, p.h);
  pr["theta_h"] = weight_to_json(q, p.theta_h);
  pr["stable_module"] = to_json(p.stable_module);
  pr["eff_cone"] = to_json(q, p.cone);
  pr["facet_index"] = p.facet_index;
  pr["theta0"] = weight_to_json(q, p.theta0);
  pr["stable_pair"] = to_json(q, p.stable_pair);
  pr["pair"] = to_json(p.pair);
  j["provenance"] = pr;
  return j;
}

BadOrbitInstance instance_from_json(const json& j) {
  AlgebraPtr a = algebra_from_json(need(j, "algebra"));
  const Quiver& q = a->quiver();
  DimVector d = dim_from_json(q, need(j, "d"));
  RawRepresentation raw = raw_representation_from_json(*a, need(j, "module"));
  // keep tampered data loadable so that verify can report it
  DimVector md = DimVector::zero(q.vertex_count());
  for (const auto& [id, v] : raw.dim) md[q.vertex_index(id)] = v;
  std::vector<Matrix> mats;
  for (const auto& arrow : q.arrows()) {
    auto it = raw.matrices.find(arrow.id);
    mats.push_back(it != raw.matrices.end() ? it->second : Matrix(sz(md[arrow.head]), sz(md[arrow.tail])));
  }
  const auto report = validate_representation(*a, md, mats);
  if (!report.ok()) throw CertificateError("stored module is invalid: " + report.summary());
  Representation m(a, md, std::move(mats));
  const std::uint64_t seed = j.contains("seed") ? j.at("seed").get<std::uint64_t>() : 0;
  const json& pr = need(j, "provenance");
  if (pr.contains("base_case")) return BadOrbitInstance{a, std::move(d), std::move(m), seed, std::nullopt};
  PairSearchResult p{dim_from_json(q, need(pr, "h")),
                     weight_from_json(q, need(pr, "theta_h")),
                     representation_from_json(a, need(pr, "stable_module")),
                     eff_cone_from_json(q, need(pr, "eff_cone")),
                     need(pr, "facet_index").get<std::size_t>(),
                     weight_from_json(q, need(pr, "theta0")),
                     stable_pair_from_json(q, need(pr, "stable_pair")),
                     exceptional_pair_from_json(a, need(pr, "pair"))};
  return BadOrbitInstance{a, std::move(d), std::move(m), seed, std::move(p)};
}

json to_json(const VerifyReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"schema_version", schema_version}, {"ok", r.ok()}, {"checks", checks}};
}

}  // namespace quiverforge::io
