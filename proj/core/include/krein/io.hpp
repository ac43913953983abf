#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "krein/anyons.hpp"
#include "krein/group.hpp"
#include "krein/parameters.hpp"
#include "krein/scheme.hpp"
#include "krein/spectral.hpp"

namespace krein::io {

using json = nlohmann::json;

/// Parses JSON text; ParseError carries source, line and column.
json parse(const std::string& text, const std::string& source = "<input>");
json load_json(const std::filesystem::path& path);
/// Writes `j` followed by a newline. Floats keep round-trip precision.
void save_json(const std::filesystem::path& path, const json& j);

// Scheme: {"n": int, "d": int, "relation": [[int]], "labels": [string]?}
json to_json(const AssociationScheme& s);
/// With `validate`, a relation matrix that breaks a scheme axiom raises
/// ValidationError naming the axiom.
AssociationScheme scheme_from_json(const json& j, bool validate = true);

// Cayley table: {"order": int, "cayley": [[int]]}
json to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const json& j);

// Matrices: nested row-major arrays; complex entries as [re, im].
json to_json(const RMatrix& m);
json to_json(const CMatrix& m);
CMatrix cmatrix_from_json(const json& j);
/// Rejects entries with a nonzero imaginary part.
RMatrix rmatrix_from_json(const json& j);

// Tensors: {"d": int, "entries": [[[number]]]}
json to_json(const IntersectionTensor& t);
json to_json(const KreinTensor& t);
IntersectionTensor intersection_from_json(const json& j);
KreinTensor krein_from_json(const json& j);

// Decomposition: multiplicities, idempotents and both eigenmatrices.
json to_json(const BoseMesnerDecomposition& dec);

// Fusion system: {"labels", "N", "F"?, "R"?, "twist"?}; F keyed "a,b,c,d,e,f",
// R keyed "a,b,c", values [re, im].
json to_json(const FusionSystem& fs);
FusionSystem fusion_from_json(const json& j);

// Distribution: [number], validated as a probability vector within 1e-10.
json to_json(const Distribution& p);
Distribution distribution_from_json(const json& j);

}  // namespace krein::io
