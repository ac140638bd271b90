#pragma once

#include "superleib/matrix_graded.hpp"
#include "superleib/models.hpp"
#include "superleib/weights.hpp"

#include <json.hpp>

#include <filesystem>
#include <map>
#include <variant>

namespace superleib::io {

using Json = nlohmann::json;

/// Reads a UTF-8 JSON file. Throws `io_error` or `parse_error` (with
/// line:column).
Json read_json(const std::filesystem::path& path);

using Algebra = std::variant<SuperDialgebra, LeibnizSuperalgebra>;

/// AlgebraFile:
///   {"kind": "dialgebra" | "leibniz", "name": ..., "basis": [{"label", "parity"}],
///    "unit": label?, "products": {"left": T, "right": T} | {"bracket": T}}
/// with T a list of [i_label, j_label, {k_label: "p/q"}]. Errors:
/// `duplicate_label`, `unknown_label`, `malformed_scalar`, `malformed_file`.
Algebra parse_algebra(const Json& j);
Algebra load_algebra(const std::filesystem::path& path);
/// As load_algebra, but throws `wrong_kind` for the other kind.
SuperDialgebra load_dialgebra(const std::filesystem::path& path);
LeibnizSuperalgebra load_leibniz(const std::filesystem::path& path);

Json to_json(const SuperDialgebra& d);
Json to_json(const LeibnizSuperalgebra& l);

/// {label: "p/q"} over `space`.
SparseVector parse_vector(const Json& j, const SuperSpace& space);
Json vector_to_json(const SparseVector& v, const SuperSpace& space);
/// Triple list over left x right -> out.
BilinearProduct parse_table(const Json& j, const SuperSpace& left, const SuperSpace& right, const SuperSpace& out);
Json table_to_json(const BilinearProduct& p, const SuperSpace& left, const SuperSpace& right, const SuperSpace& out);

/// {"kind": "linear_map", "images": {label: {label: "p/q"}}}; omitted
/// labels map to zero.
LinearMap load_linear_map(const std::filesystem::path& path, const SuperSpace& space);

/// {"kind": "subspace", "vectors": {name: {label: "p/q"}}}.
struct NamedVectors {
  Subspace span;
  std::map<std::string, SparseVector> named;
};
NamedVectors load_subspace(const std::filesystem::path& path, const SuperSpace& space);

/// Model bundle (paths relative to the bundle):
///   {"kind": "model_a", "p", "q", "A": path, "D": path?, "phi": T, "form": T, "rho": T}
CoordinateDataA load_model_a(const std::filesystem::path& path);
/// {"kind": "model_kappa", "g": {"sl": [p, q]} | path, "kappa": "supertrace" | T,
///  "A": path, "D": path?, "phi": T, "form": T, "central": bool}; κ tables
/// write the single output coordinate as "1".
CoordinateDataK load_model_kappa(const std::filesystem::path& path);

/// {"kind": "steinberg_map", "coefficients": path,
///  "images": [[i, j, a_label, {label: "p/q"}]]} with 1-based i, j.
struct SteinbergInput {
  SuperDialgebra coefficients;
  SteinbergMap map;
};
SteinbergInput load_steinberg_map(const std::filesystem::path& path, const LeibnizSuperalgebra& l);

/// Reports. Vectors are keyed by label when `space` is given, by index
/// otherwise.
Json to_json(const ViolationReport& r, const SuperSpace* space = nullptr);
Json to_json(const ConditionReport& r);
Json to_json(const WeightDecomposition& d, const SuperSpace& space);
Json to_json(const GradingCertificate& c, const SuperSpace& space);

}  // namespace superleib::io
