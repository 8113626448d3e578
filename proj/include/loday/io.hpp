#pragma once

#include <json.hpp>
#include <string>

#include "loday/cohomology.hpp"
#include "loday/deformation.hpp"
#include "loday/morphism_deformation.hpp"

namespace loday {

using json = nlohmann::json;

/// Raised for malformed input files; message names the offending field.
struct FormatError : std::runtime_error {
    explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

/// Parse a file; parse failures report the byte position.
json load_json_file(const std::string& path);

// Tensors are objects keyed by canonical shape strings; values are nested
// arrays (one level per input slot), innermost a list of out_dim rational
// strings. Every shape of U_arity must be present.
json tensor_to_json(const Element& e);
Element tensor_from_json(ShapeFamily fam, int arity, int in_dim, int out_dim, const json& j,
                         const std::string& what);

json matrix_to_json(const DenseMatrix& m);
DenseMatrix matrix_from_json(const json& j, int rows, int cols, const std::string& what);

json algebra_to_json(const AlgebraSpec& spec);
AlgebraSpec algebra_from_json(const json& j);

json representation_to_json(const RepresentationSpec& rep);
RepresentationSpec representation_from_json(const json& j);
bool looks_like_representation(const json& j);

json morphism_to_json(const MorphismSpec& f);
/// `base_dir` resolves "source"/"target" entries given as file paths.
MorphismSpec morphism_from_json(const json& j, const std::string& base_dir);

struct CochainFile {
    ShapeFamily family;
    int dim, mdim, arity;
    Element cochain;
};
json cochain_to_json(const Element& cochain);
CochainFile cochain_from_json(const json& j);

json deformation_to_json(const TruncatedDeformation& def);
TruncatedDeformation deformation_from_json(const json& j, const std::string& base_dir);

json automorphism_to_json(const FormalAutomorphism& phi);
FormalAutomorphism automorphism_from_json(const json& j);

json morphism_deformation_to_json(const MorphismDeformation& md);
MorphismDeformation morphism_deformation_from_json(const json& j, const std::string& base_dir);

json extension_to_json(const ExtensionSpec& ext);
ExtensionSpec extension_from_json(const json& j);

}  // namespace loday
