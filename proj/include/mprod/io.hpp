#pragma once

#include "mprod/geninv.hpp"
#include "mprod/solvers.hpp"
#include "mprod/tensor.hpp"
#include "mprod/transform.hpp"
#include "mprod/verify.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace mprod::io {

using Json = nlohmann::ordered_json;

// File schema (all kinds carry a "kind" discriminator):
//
//   tensor:     {"kind":"tensor", "shape":[n1,n2,n3], "data": D}
//               D[k][j][i] = [re, im]   (slice, then column, then row)
//   transform:  {"kind":"transform", "shape":[n,n,1], "data": D}
//               D[0][j][i] = [re, im] = M(i, j)
//   params:     {"kind":"one-inverse-params", "provenance":"zero|seeded|user",
//                "seed":N, "slices":[{"w12":Mat,"w21":Mat,"w22":Mat}, ...]}
//               Mat = {"rows":r, "cols":c, "data": D[j][i] = [re, im]}
//   family:     {"kind":"solution-family", "side":"left-free|right-free",
//                "particular":<tensor>, "projector":<tensor>}
//
// Non-finite values are rejected on both load and save.

Json tensor_to_json(const Tensor3& a);
Tensor3 tensor_from_json(const Json& j);

Json transform_to_json(const TransformSpec& t);
TransformSpec transform_from_json(const Json& j);

Json params_to_json(const OneInverseParams& p);
OneInverseParams params_from_json(const Json& j);

Json family_to_json(const SolutionFamily& f);
SolutionFamily family_from_json(const Json& j);

Json report_to_json(const VerificationReport& r);

Json index_to_json(const IndexResult& r);

/// Indented text in which each array of scalars or of scalar arrays (one
/// tensor column, one [re, im] pair) stays on a single line.
std::string format(const Json& j);

/// Parses text; malformed input throws ParseError carrying the byte offset.
Json parse(const std::string& text);
Json read_json(const std::filesystem::path& path);
void write_json(const Json& j, const std::filesystem::path& path);

/// Value of the "kind" field, or empty if absent.
std::string kind_of(const Json& j);

Tensor3 load_tensor(const std::filesystem::path& path);
void save_tensor(const Tensor3& a, const std::filesystem::path& path);

TransformSpec load_transform(const std::filesystem::path& path);
void save_transform(const TransformSpec& t, const std::filesystem::path& path);

} // namespace mprod::io
