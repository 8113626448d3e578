#include "loday/io.hpp"

#include <filesystem>
#include <fstream>
#include <set>

namespace loday {

namespace {

void check_keys(const json& j, const std::string& what, const std::set<std::string>& required,
                const std::set<std::string>& optional = {}) {
    if (!j.is_object()) throw FormatError(what + ": expected an object");
    for (const auto& [key, _] : j.items()) {
        if (!required.count(key) && !optional.count(key))
            throw FormatError(what + ": unknown field '" + key + "'");
    }
    for (const std::string& key : required)
        if (!j.contains(key)) throw FormatError(what + ": missing field '" + key + "'");
}

Rational rational_field(const json& j, const std::string& what) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) throw FormatError(what + ": rationals are written as strings like \"p/q\"");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw FormatError(what + ": " + e.what());
    }
}

int int_field(const json& j, const std::string& key, const std::string& what) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw FormatError(what + ": field '" + key + "' must be an integer");
    return j[key].get<int>();
}

// nested tensor encode/decode, one array level per remaining input slot
json encode_level(const Element& e, int shape, int level, long prefix) {
    json out = json::array();
    if (level == e.arity()) {
        for (int o = 0; o < e.out_dim(); ++o) out.push_back(e.at(shape, prefix, o).str());
        return out;
    }
    for (int x = 0; x < e.in_dim(); ++x)
        out.push_back(encode_level(e, shape, level + 1, prefix * e.in_dim() + x));
    return out;
}

void decode_level(Element& e, int shape, int level, long prefix, const json& j,
                  const std::string& what) {
    if (!j.is_array()) throw FormatError(what + ": expected an array");
    if (level == e.arity()) {
        if (static_cast<int>(j.size()) != e.out_dim())
            throw FormatError(what + ": expected " + std::to_string(e.out_dim()) +
                              " output coordinates");
        for (int o = 0; o < e.out_dim(); ++o)
            e.at(shape, prefix, o) = rational_field(j[o], what);
        return;
    }
    if (static_cast<int>(j.size()) != e.in_dim())
        throw FormatError(what + ": expected " + std::to_string(e.in_dim()) + " entries per slot");
    for (int x = 0; x < e.in_dim(); ++x)
        decode_level(e, shape, level + 1, prefix * e.in_dim() + x, j[x], what);
}

ShapeFamily family_field(const json& j, const std::string& what) {
    if (!j.contains("family") || !j["family"].is_string())
        throw FormatError(what + ": field 'family' must name a family");
    auto f = family_from_name(j["family"].get<std::string>());
    if (!f) throw FormatError(what + ": unknown family '" + j["family"].get<std::string>() + "'");
    return *f;
}

json resolve_ref(const json& j, const std::string& base_dir, const std::string& what) {
    if (j.is_string()) {
        std::filesystem::path p = j.get<std::string>();
        if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
        return load_json_file(p.string());
    }
    if (j.is_object()) return j;
    throw FormatError(what + ": expected an inline object or a file path");
}

}  // namespace

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw FormatError("'" + path + "': " + e.what());
    }
}

json tensor_to_json(const Element& e) {
    json out = json::object();
    const auto& shapes = enumerate(e.family(), e.arity());
    for (int s = 0; s < e.shape_count(); ++s) out[shapes[s].str()] = encode_level(e, s, 0, 0);
    return out;
}

Element tensor_from_json(ShapeFamily fam, int arity, int in_dim, int out_dim, const json& j,
                         const std::string& what) {
    if (!j.is_object()) throw FormatError(what + ": expected an object keyed by shapes");
    Element e(fam, arity, in_dim, out_dim);
    const auto& shapes = enumerate(fam, arity);
    std::set<std::string> seen;
    for (const auto& [key, value] : j.items()) {
        Shape s = [&] {
            try {
                return Shape::parse(fam, key);
            } catch (const ParseError& pe) {
                throw FormatError(what + ": bad shape key '" + key + "': " + pe.what());
            }
        }();
        int idx;
        try {
            idx = shape_index(fam, arity, s);
        } catch (const std::invalid_argument&) {
            throw FormatError(what + ": shape '" + key + "' is not in U_" + std::to_string(arity));
        }
        decode_level(e, idx, 0, 0, value, what + "['" + key + "']");
        seen.insert(s.str());
    }
    for (const Shape& s : shapes)
        if (!seen.count(s.str()))
            throw FormatError(what + ": missing entry for shape '" + s.str() + "'");
    return e;
}

json matrix_to_json(const DenseMatrix& m) {
    json out = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (const Rational& v : row) r.push_back(v.str());
        out.push_back(r);
    }
    return out;
}

DenseMatrix matrix_from_json(const json& j, int rows, int cols, const std::string& what) {
    if (!j.is_array() || static_cast<int>(j.size()) != rows)
        throw FormatError(what + ": expected " + std::to_string(rows) + " rows");
    DenseMatrix m(rows, QVector(cols, Rational(0)));
    for (int r = 0; r < rows; ++r) {
        if (!j[r].is_array() || static_cast<int>(j[r].size()) != cols)
            throw FormatError(what + ": expected " + std::to_string(cols) + " columns");
        for (int c = 0; c < cols; ++c) m[r][c] = rational_field(j[r][c], what);
    }
    return m;
}

json algebra_to_json(const AlgebraSpec& spec) {
    json out;
    out["family"] = family_name(spec.family);
    out["dim"] = spec.dim;
    out["products"] = tensor_to_json(spec.pi);
    if (spec.twisted()) {
        out["alpha"] = matrix_to_json(matrix_from_element(*spec.alpha));
        out["beta"] = matrix_to_json(matrix_from_element(*spec.beta));
    }
    return out;
}

AlgebraSpec algebra_from_json(const json& j) {
    check_keys(j, "algebra spec", {"family", "dim", "products"}, {"alpha", "beta"});
    ShapeFamily fam = family_field(j, "algebra spec");
    int dim = int_field(j, "dim", "algebra spec");
    if (dim < 1) throw FormatError("algebra spec: dim must be >= 1");
    AlgebraSpec spec = make_algebra(fam, dim);
    spec.pi = tensor_from_json(fam, 2, dim, dim, j["products"], "products");
    if (j.contains("alpha") != j.contains("beta"))
        throw FormatError("algebra spec: alpha and beta must be given together");
    if (j.contains("alpha")) {
        spec.alpha = element_from_matrix(fam, matrix_from_json(j["alpha"], dim, dim, "alpha"));
        spec.beta = element_from_matrix(fam, matrix_from_json(j["beta"], dim, dim, "beta"));
    }
    return spec;
}

bool looks_like_representation(const json& j) { return j.is_object() && j.contains("mdim"); }

json representation_to_json(const RepresentationSpec& rep) {
    json out = algebra_to_json(rep.base);
    out["mdim"] = rep.mdim;
    const auto& shapes = enumerate(rep.base.family, 2);
    json t1 = json::object(), t2 = json::object();
    for (int s = 0; s < rep.theta1.shapes(); ++s) {
        json m1 = json::array();
        for (int i = 0; i < rep.base.dim; ++i) {
            json row = json::array();
            for (int jj = 0; jj < rep.mdim; ++jj) {
                json coords = json::array();
                for (int k = 0; k < rep.mdim; ++k) coords.push_back(rep.theta1.at(s, i, jj, k).str());
                row.push_back(coords);
            }
            m1.push_back(row);
        }
        t1[shapes[s].str()] = m1;
        json m2 = json::array();
        for (int jj = 0; jj < rep.mdim; ++jj) {
            json row = json::array();
            for (int i = 0; i < rep.base.dim; ++i) {
                json coords = json::array();
                for (int k = 0; k < rep.mdim; ++k) coords.push_back(rep.theta2.at(s, jj, i, k).str());
                row.push_back(coords);
            }
            m2.push_back(row);
        }
        t2[shapes[s].str()] = m2;
    }
    out["theta1"] = t1;
    out["theta2"] = t2;
    return out;
}

namespace {

void decode_theta(BilinearMap& theta, ShapeFamily fam, const json& j, const std::string& what) {
    if (!j.is_object()) throw FormatError(what + ": expected an object keyed by shapes");
    const auto& shapes = enumerate(fam, 2);
    std::set<std::string> seen;
    for (const auto& [key, value] : j.items()) {
        int idx;
        try {
            idx = shape_index(fam, 2, Shape::parse(fam, key));
        } catch (const std::exception&) {
            throw FormatError(what + ": bad shape key '" + key + "'");
        }
        if (!value.is_array() || static_cast<int>(value.size()) != theta.xdim())
            throw FormatError(what + ": expected " + std::to_string(theta.xdim()) + " rows");
        for (int x = 0; x < theta.xdim(); ++x) {
            if (!value[x].is_array() || static_cast<int>(value[x].size()) != theta.ydim())
                throw FormatError(what + ": expected " + std::to_string(theta.ydim()) + " columns");
            for (int y = 0; y < theta.ydim(); ++y) {
                const json& coords = value[x][y];
                if (!coords.is_array() || static_cast<int>(coords.size()) != theta.zdim())
                    throw FormatError(what + ": expected " + std::to_string(theta.zdim()) +
                                      " coordinates");
                for (int z = 0; z < theta.zdim(); ++z)
                    theta.at(idx, x, y, z) = rational_field(coords[z], what);
            }
        }
        seen.insert(shapes[idx].str());
    }
    for (const Shape& s : shapes)
        if (!seen.count(s.str())) throw FormatError(what + ": missing shape '" + s.str() + "'");
}

}  // namespace

RepresentationSpec representation_from_json(const json& j) {
    check_keys(j, "representation spec", {"family", "dim", "products", "mdim", "theta1", "theta2"},
               {"alpha", "beta"});
    json base = j;
    base.erase("mdim");
    base.erase("theta1");
    base.erase("theta2");
    AlgebraSpec spec = algebra_from_json(base);
    int mdim = int_field(j, "mdim", "representation spec");
    if (mdim < 1) throw FormatError("representation spec: mdim must be >= 1");
    RepresentationSpec rep = trivial_representation(spec, mdim);
    decode_theta(rep.theta1, spec.family, j["theta1"], "theta1");
    decode_theta(rep.theta2, spec.family, j["theta2"], "theta2");
    return rep;
}

json morphism_to_json(const MorphismSpec& f) {
    json out;
    out["source"] = algebra_to_json(f.source);
    out["target"] = algebra_to_json(f.target);
    out["matrix"] = matrix_to_json(f.matrix);
    return out;
}

MorphismSpec morphism_from_json(const json& j, const std::string& base_dir) {
    check_keys(j, "morphism spec", {"source", "target", "matrix"});
    MorphismSpec f{algebra_from_json(resolve_ref(j["source"], base_dir, "source")),
                   algebra_from_json(resolve_ref(j["target"], base_dir, "target")),
                   {}};
    if (f.source.family != f.target.family)
        throw FormatError("morphism spec: source and target families differ");
    f.matrix = matrix_from_json(j["matrix"], f.target.dim, f.source.dim, "matrix");
    return f;
}

json cochain_to_json(const Element& cochain) {
    json out;
    out["family"] = family_name(cochain.family());
    out["dim"] = cochain.in_dim();
    out["mdim"] = cochain.out_dim();
    out["arity"] = cochain.arity();
    out["cochain"] = tensor_to_json(cochain);
    return out;
}

CochainFile cochain_from_json(const json& j) {
    check_keys(j, "cochain", {"family", "dim", "mdim", "arity", "cochain"});
    CochainFile out{family_field(j, "cochain"), int_field(j, "dim", "cochain"),
                    int_field(j, "mdim", "cochain"), int_field(j, "arity", "cochain"),
                    Element(ShapeFamily::associative, 1, 1, 1)};
    if (out.dim < 1 || out.mdim < 1 || out.arity < 1)
        throw FormatError("cochain: dim, mdim and arity must be >= 1");
    out.cochain = tensor_from_json(out.family, out.arity, out.dim, out.mdim, j["cochain"], "cochain");
    return out;
}

json deformation_to_json(const TruncatedDeformation& def) {
    json out;
    out["base"] = algebra_to_json(def.base);
    out["order"] = def.order;
    json terms = json::array();
    for (int k = 1; k <= def.order; ++k) terms.push_back(tensor_to_json(def.terms[k]));
    out["terms"] = terms;
    return out;
}

TruncatedDeformation deformation_from_json(const json& j, const std::string& base_dir) {
    check_keys(j, "deformation", {"base", "order", "terms"});
    AlgebraSpec base = algebra_from_json(resolve_ref(j["base"], base_dir, "base"));
    int order = int_field(j, "order", "deformation");
    if (order < 0) throw FormatError("deformation: order must be >= 0");
    if (!j["terms"].is_array() || static_cast<int>(j["terms"].size()) != order)
        throw FormatError("deformation: 'terms' must list the tensors for orders 1..order");
    TruncatedDeformation def = constant_deformation(base, order);
    for (int k = 1; k <= order; ++k)
        def.terms[k] = tensor_from_json(base.family, 2, base.dim, base.dim, j["terms"][k - 1],
                                        "terms[" + std::to_string(k - 1) + "]");
    return def;
}

json automorphism_to_json(const FormalAutomorphism& phi) {
    json out;
    out["family"] = family_name(phi.family);
    out["dim"] = phi.dim;
    out["order"] = phi.order;
    json terms = json::array();
    for (int k = 1; k <= phi.order; ++k) terms.push_back(tensor_to_json(phi.terms[k]));
    out["terms"] = terms;
    return out;
}

FormalAutomorphism automorphism_from_json(const json& j) {
    check_keys(j, "automorphism", {"family", "dim", "order", "terms"});
    ShapeFamily fam = family_field(j, "automorphism");
    int dim = int_field(j, "dim", "automorphism");
    int order = int_field(j, "order", "automorphism");
    if (dim < 1 || order < 0) throw FormatError("automorphism: bad dim or order");
    if (!j["terms"].is_array() || static_cast<int>(j["terms"].size()) != order)
        throw FormatError("automorphism: 'terms' must list the tensors for orders 1..order");
    FormalAutomorphism phi = identity_automorphism(fam, dim, order);
    for (int k = 1; k <= order; ++k)
        phi.terms[k] = tensor_from_json(fam, 1, dim, dim, j["terms"][k - 1],
                                        "terms[" + std::to_string(k - 1) + "]");
    return phi;
}

json morphism_deformation_to_json(const MorphismDeformation& md) {
    json out;
    out["source"] = algebra_to_json(md.f.source);
    out["target"] = algebra_to_json(md.f.target);
    out["matrix"] = matrix_to_json(md.f.matrix);
    out["order"] = md.order;
    json ta = json::array(), tb = json::array(), ft = json::array();
    for (int k = 1; k <= md.order; ++k) {
        ta.push_back(tensor_to_json(md.terms_a[k]));
        tb.push_back(tensor_to_json(md.terms_b[k]));
        ft.push_back(matrix_to_json(md.f_terms[k]));
    }
    out["terms_source"] = ta;
    out["terms_target"] = tb;
    out["fterms"] = ft;
    return out;
}

MorphismDeformation morphism_deformation_from_json(const json& j, const std::string& base_dir) {
    check_keys(j, "morphism deformation",
               {"source", "target", "matrix", "order", "terms_source", "terms_target", "fterms"});
    json morph;
    morph["source"] = j["source"];
    morph["target"] = j["target"];
    morph["matrix"] = j["matrix"];
    MorphismSpec f = morphism_from_json(morph, base_dir);
    int order = int_field(j, "order", "morphism deformation");
    if (order < 0) throw FormatError("morphism deformation: order must be >= 0");
    auto expect_list = [&](const char* key) {
        if (!j[key].is_array() || static_cast<int>(j[key].size()) != order)
            throw FormatError(std::string("morphism deformation: '") + key +
                              "' must list orders 1..order");
    };
    expect_list("terms_source");
    expect_list("terms_target");
    expect_list("fterms");
    MorphismDeformation md = constant_morphism_deformation(f, order);
    for (int k = 1; k <= order; ++k) {
        md.terms_a[k] = tensor_from_json(f.source.family, 2, f.source.dim, f.source.dim,
                                         j["terms_source"][k - 1], "terms_source");
        md.terms_b[k] = tensor_from_json(f.target.family, 2, f.target.dim, f.target.dim,
                                         j["terms_target"][k - 1], "terms_target");
        md.f_terms[k] = matrix_from_json(j["fterms"][k - 1], f.target.dim, f.source.dim, "fterms");
    }
    return md;
}

json extension_to_json(const ExtensionSpec& ext) {
    json out;
    out["total"] = algebra_to_json(ext.total);
    out["adim"] = ext.adim;
    out["mdim"] = ext.mdim;
    out["section"] = matrix_to_json(ext.section);
    return out;
}

ExtensionSpec extension_from_json(const json& j) {
    check_keys(j, "extension", {"total", "adim", "mdim", "section"});
    ExtensionSpec ext{algebra_from_json(j["total"]), int_field(j, "adim", "extension"),
                      int_field(j, "mdim", "extension"), {}};
    if (ext.adim < 1 || ext.mdim < 1 || ext.total.dim != ext.adim + ext.mdim)
        throw FormatError("extension: need total dim == adim + mdim");
    ext.section =
        matrix_from_json(j["section"], ext.adim + ext.mdim, ext.adim, "section");
    return ext;
}

}  // namespace loday
