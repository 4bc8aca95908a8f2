#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "quiverforge/pipeline.hpp"

namespace quiverforge::io {

using nlohmann::json;

inline constexpr int schema_version = 1;

json read_json_file(const std::string& path);
void write_json(const json& j, const std::string& path);  // "-" or empty: stdout
/// Two-space indented text with a trailing newline.
std::string dump(const json& j);

Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols);
json to_json(const Matrix& m);

AlgebraPtr algebra_from_json(const json& j);
json to_json(const BoundQuiverAlgebra& a);

RawRepresentation raw_representation_from_json(const BoundQuiverAlgebra& a, const json& j);
/// Throws InvalidRepresentation when the data break shapes or relations.
Representation representation_from_json(const AlgebraPtr& a, const json& j);
json to_json(const Representation& m);

/// Vertex-keyed object, or a comma separated list in canonical vertex order.
DimVector dim_from_json(const Quiver& q, const json& j);
DimVector parse_dim(const Quiver& q, std::string_view text);
json dim_to_json(const Quiver& q, const DimVector& d);
Weight weight_from_json(const Quiver& q, const json& j);
Weight parse_weight(const Quiver& q, std::string_view text);
json weight_to_json(const Quiver& q, const Weight& w);

json to_json(const Representation& m, const Representation& n, const HomBasis& b);
json to_json(const Representation& m, const Representation& n, const ExtCocycleBasis& b);
json to_json(const Quiver& q, const StabilityVerdict& v);
json to_json(const Quiver& q, const EffCone& c);
EffCone eff_cone_from_json(const Quiver& q, const json& j);
json to_json(const Quiver& q, const StablePair& p);
StablePair stable_pair_from_json(const Quiver& q, const json& j);
json to_json(const SequenceReport& r);

json to_json(const ExceptionalPair& p);
ExceptionalPair exceptional_pair_from_json(const AlgebraPtr& a, const json& j);

json to_json(const BadOrbitInstance& inst);
BadOrbitInstance instance_from_json(const json& j);
json to_json(const VerifyReport& r);

}  // namespace quiverforge::io
