#include <CLI11.hpp>
#include <chrono>
#include <filesystem>
#include <iostream>

#include "loday/io.hpp"
#include "loday/twist.hpp"

using namespace loday;

namespace {

constexpr int kMaxDegree = 5;
constexpr int kMaxOrder = 8;

struct Output {
    bool as_json = false;
    bool with_timings = false;
    json report;
    std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

    void line(const std::string& text) {
        if (!as_json) std::cout << text << "\n";
    }
    void blob(const json& j) {
        if (!as_json) std::cout << j.dump(2) << "\n";
    }
    void finish(int exit_code) {
        if (!as_json || report.is_null()) return;
        report["exit"] = exit_code;
        if (with_timings) {
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - started)
                          .count();
            report["timings"] = {{"total_ms", ms}};
        }
        std::cout << report.dump(2) << "\n";
    }
};

void add_format(CLI::App* cmd, Output& out) {
    cmd->add_flag_callback(
        "--json", [&out] { out.as_json = true; }, "emit a machine-readable JSON report");
    cmd->add_option_function<std::string>(
           "--format",
           [&out](const std::string& v) {
               if (v == "json")
                   out.as_json = true;
               else if (v == "text")
                   out.as_json = false;
               else
                   throw CLI::ValidationError("--format must be text or json");
           },
           "output format: text (default) or json")
        ->expected(1);
    cmd->add_flag_callback(
        "--timings", [&out] { out.with_timings = true; },
        "include wall-clock timings in JSON reports");
}

std::string dir_of(const std::string& path) {
    return std::filesystem::path(path).parent_path().string();
}

void require_degree(int n) {
    if (n < 1 || n > kMaxDegree)
        throw CLI::ValidationError("degree must be between 1 and " + std::to_string(kMaxDegree));
}

void size_note(Output& out, long rows, long cols) {
    if (rows * cols > 200000) {
        std::ostringstream os;
        os << "assembling a " << rows << " x " << cols << " coboundary matrix";
        out.line(os.str());
    }
}

// The input is either a bare algebra spec or a representation file
// (recognized by "mdim"); --rep picks adjoint / trivial:m otherwise.
RepresentationSpec resolve_representation(const json& jfile, const std::string& rep_arg) {
    if (looks_like_representation(jfile)) {
        if (!rep_arg.empty())
            throw FormatError("--rep conflicts with a representation input file");
        return representation_from_json(jfile);
    }
    AlgebraSpec spec = algebra_from_json(jfile);
    if (spec.twisted())
        throw FormatError(
            "cohomology with coefficients needs an untwisted spec; "
            "use the deformation commands for twisted algebras");
    if (rep_arg.empty() || rep_arg == "adjoint") return adjoint_representation(spec);
    if (rep_arg.rfind("trivial:", 0) == 0) {
        int m = std::stoi(rep_arg.substr(8));
        if (m < 1) throw FormatError("--rep trivial:m needs m >= 1");
        return trivial_representation(spec, m);
    }
    throw FormatError("--rep must be 'adjoint' or 'trivial:m'");
}

std::string witness_suffix(const CheckResult& r) { return r.ok ? "" : (": " + r.detail); }

int cmd_shapes(Output& out, const std::string& family_arg, int n) {
    auto fam = family_from_name(family_arg);
    if (!fam) throw FormatError("unknown family '" + family_arg + "'");
    if (n < 1 || n > kMaxOrder)
        throw CLI::ValidationError("--n must be between 1 and " + std::to_string(kMaxOrder));
    const auto& shapes = enumerate(*fam, n);
    json list = json::array();
    for (const Shape& s : shapes) {
        out.line(s.str());
        list.push_back(s.str());
    }
    out.report = {{"verb", "shapes"},
                  {"inputs", {{"family", family_arg}, {"n", n}}},
                  {"result", {{"count", shapes.size()}, {"shapes", list}}}};
    return 0;
}

int cmd_validate(Output& out, const std::string& path) {
    AlgebraSpec spec = algebra_from_json(load_json_file(path));
    CheckResult r = validate_algebra(spec);
    long u3 = family_count(spec.family, 3);
    std::string mode = spec.twisted() ? "twisted multiplication" : "multiplication";
    if (r.ok)
        out.line(mode + " verified on " + std::to_string(u3) + " shapes of U_3");
    else
        out.line("not a " + mode + witness_suffix(r));
    out.report = {{"verb", "validate"},
                  {"inputs", {{"file", path}}},
                  {"result", {{"valid", r.ok}, {"twisted", spec.twisted()}, {"u3_shapes", u3}}},
                  {"witnesses", r.ok ? json::array() : json::array({r.detail})}};
    return r.ok ? 0 : 1;
}

int cmd_cohomology(Output& out, const std::string& path, const std::string& rep_arg, int n) {
    require_degree(n);
    RepresentationSpec rep = resolve_representation(load_json_file(path), rep_arg);
    size_note(out, zero_cochain(rep, n + 1).dimension(), zero_cochain(rep, n).dimension());
    CohomologyDims dims = cohomology_dims(rep, n);
    std::ostringstream os;
    os << "Z^" << n << "=" << dims.z << " B^" << n << "=" << dims.b << " H^" << n << "=" << dims.h;
    out.line(os.str());
    if (n == 2)
        out.line(dims.h == 0 ? "H^2 = 0 => the multiplication is rigid"
                             : "H^2 != 0: rigidity is not implied");
    out.report = {
        {"verb", "cohomology"},
        {"inputs", {{"file", path}, {"rep", rep_arg.empty() ? "adjoint" : rep_arg}, {"n", n}}},
        {"result", {{"z", dims.z}, {"b", dims.b}, {"h", dims.h}}}};
    return 0;
}

int cmd_derivations(Output& out, const std::string& path, const std::string& rep_arg) {
    RepresentationSpec rep = resolve_representation(load_json_file(path), rep_arg);
    std::vector<Element> basis = derivation_basis(rep);
    out.line("derivation space dimension: " + std::to_string(basis.size()));
    json list = json::array();
    for (const Element& d : basis) {
        list.push_back(cochain_to_json(d));
        if (!out.as_json) std::cout << tensor_to_json(d).dump() << "\n";
    }
    out.report = {{"verb", "derivations"},
                  {"inputs", {{"file", path}, {"rep", rep_arg.empty() ? "adjoint" : rep_arg}}},
                  {"result", {{"dimension", basis.size()}, {"basis", list}}}};
    return 0;
}

int cmd_deform_check(Output& out, const std::string& path, int order_opt) {
    TruncatedDeformation def = deformation_from_json(load_json_file(path), dir_of(path));
    OperadOps ops = def.base.ops();
    int upto = order_opt >= 0 ? order_opt : def.order;
    DeformationCheck chk = is_deformation(ops, def, upto);
    if (chk.ok)
        out.line("deformation equations hold through order " + std::to_string(upto));
    else
        out.line("deformation equation fails at order " + std::to_string(chk.failed_order) +
                 " at " + chk.witness);
    out.report = {{"verb", "deform-check"},
                  {"inputs", {{"file", path}, {"order", upto}}},
                  {"result", {{"valid", chk.ok}, {"failed_order", chk.failed_order}}},
                  {"witnesses", chk.ok ? json::array() : json::array({chk.witness})}};
    return chk.ok ? 0 : 1;
}

int cmd_obstruction(Output& out, const std::string& path) {
    TruncatedDeformation def = deformation_from_json(load_json_file(path), dir_of(path));
    OperadOps ops = def.base.ops();
    DeformationCheck chk = is_deformation(ops, def, def.order);
    if (!chk.ok) {
        out.line("input is not a deformation at order " + std::to_string(chk.failed_order));
        out.report = {{"verb", "obstruction"},
                      {"inputs", {{"file", path}}},
                      {"result", {{"valid_input", false}}},
                      {"witnesses", json::array({chk.witness})}};
        return 1;
    }
    Element ob = obstruction(ops, def);
    bool cocycle = ops.differential(def.base.pi, ob).is_zero();
    out.line(std::string("obstruction ") + (ob.is_zero() ? "vanishes" : "is nonzero") +
             "; 3-cocycle: " + (cocycle ? "yes" : "no"));
    if (!ob.is_zero()) out.blob(tensor_to_json(ob));
    out.report = {{"verb", "obstruction"},
                  {"inputs", {{"file", path}}},
                  {"result",
                   {{"zero", ob.is_zero()}, {"cocycle", cocycle}, {"tensor", tensor_to_json(ob)}}}};
    return 0;
}

int cmd_deform_extend(Output& out, const std::string& path, int steps) {
    TruncatedDeformation def = deformation_from_json(load_json_file(path), dir_of(path));
    if (def.order + steps > kMaxOrder)
        throw CLI::ValidationError("orders beyond " + std::to_string(kMaxOrder) +
                                   " are not supported");
    OperadOps ops = def.base.ops();
    for (int k = 0; k < steps; ++k) {
        ExtendResult res = extend_deformation(ops, def);
        if (!res.extended) {
            out.line("obstruction class in H^3 is nonzero at order " +
                     std::to_string(def.order + 1) + "; cocycle coordinates:");
            out.blob(tensor_to_json(res.obstruction_sum));
            out.report = {{"verb", "deform-extend"},
                          {"inputs", {{"file", path}, {"steps", steps}}},
                          {"result",
                           {{"extended_to", def.order},
                            {"obstructed_at", def.order + 1},
                            {"obstruction", tensor_to_json(res.obstruction_sum)},
                            {"obstruction_cocycle", res.obstruction_is_cocycle}}}};
            return 1;
        }
        def = *res.extended;
    }
    out.line("extended to order " + std::to_string(def.order));
    out.blob(deformation_to_json(def));
    out.report = {
        {"verb", "deform-extend"},
        {"inputs", {{"file", path}, {"steps", steps}}},
        {"result", {{"extended_to", def.order}, {"deformation", deformation_to_json(def)}}}};
    return 0;
}

int cmd_equivalence(Output& out, const std::string& path1, const std::string& path2,
                    int order_opt) {
    TruncatedDeformation d1 = deformation_from_json(load_json_file(path1), dir_of(path1));
    TruncatedDeformation d2 = deformation_from_json(load_json_file(path2), dir_of(path2));
    int order = order_opt >= 0 ? order_opt : std::min(d1.order, d2.order);
    OperadOps ops = d1.base.ops();
    auto phi = are_equivalent(ops, d1, d2, order);
    if (phi) {
        out.line("equivalent through order " + std::to_string(order));
        out.blob(automorphism_to_json(*phi));
    } else {
        out.line("not equivalent: some order has no gauge solution");
    }
    out.report = {{"verb", "equivalence"},
                  {"inputs", {{"file1", path1}, {"file2", path2}, {"order", order}}},
                  {"result",
                   {{"equivalent", phi.has_value()},
                    {"automorphism", phi ? automorphism_to_json(*phi) : json()}}}};
    return phi ? 0 : 1;
}

int cmd_extension(Output& out, const std::string& path, const std::string& rep_arg,
                  const std::string& cocycle_path) {
    RepresentationSpec rep = resolve_representation(load_json_file(path), rep_arg);
    CochainFile cf = cochain_from_json(load_json_file(cocycle_path));
    if (cf.family != rep.base.family || cf.dim != rep.base.dim || cf.mdim != rep.mdim ||
        cf.arity != 2)
        throw FormatError("cocycle file does not match the representation (need arity 2)");
    if (!coboundary(rep, cf.cochain).is_zero()) {
        out.line("input cochain is not a 2-cocycle");
        out.report = {{"verb", "extension"},
                      {"inputs", {{"file", path}, {"cocycle", cocycle_path}}},
                      {"result", {{"cocycle", false}}}};
        return 1;
    }
    ExtensionSpec ext = extension_from_cocycle(rep.base, rep, cf.cochain);
    CheckResult v = validate_extension(ext);
    out.line(std::string("extension built; total algebra ") +
             (validate_algebra(ext.total).ok ? "validates" : "FAILS") +
             ", split exact: " + (v.ok ? "yes" : "no"));
    out.blob(extension_to_json(ext));
    out.report = {{"verb", "extension"},
                  {"inputs", {{"file", path}, {"cocycle", cocycle_path}}},
                  {"result", {{"cocycle", true}, {"extension", extension_to_json(ext)}}}};
    return 0;
}

int cmd_morphism_cohomology(Output& out, const std::string& path, int n) {
    require_degree(n);
    MorphismSpec f = morphism_from_json(load_json_file(path), dir_of(path));
    if (CheckResult c = check_morphism(f); !c.ok) {
        out.line("file is not a morphism" + witness_suffix(c));
        out.report = {{"verb", "morphism-cohomology"},
                      {"inputs", {{"file", path}, {"n", n}}},
                      {"result", {{"morphism", false}}},
                      {"witnesses", json::array({c.detail})}};
        return 1;
    }
    CohomologyDims dims = morphism_cohomology_dims(f, n);
    std::ostringstream os;
    os << "Z^" << n << "=" << dims.z << " B^" << n << "=" << dims.b << " H^" << n << "=" << dims.h;
    out.line(os.str());
    if (n == 2)
        out.line(dims.h == 0 ? "H^2 = 0 => the morphism is rigid"
                             : "H^2 != 0: rigidity is not implied");
    out.report = {{"verb", "morphism-cohomology"},
                  {"inputs", {{"file", path}, {"n", n}}},
                  {"result", {{"z", dims.z}, {"b", dims.b}, {"h", dims.h}}}};
    return 0;
}

int cmd_morphism_extend(Output& out, const std::string& path, int steps) {
    MorphismDeformation md = morphism_deformation_from_json(load_json_file(path), dir_of(path));
    if (md.order + steps > kMaxOrder)
        throw CLI::ValidationError("orders beyond " + std::to_string(kMaxOrder) +
                                   " are not supported");
    for (int k = 0; k < steps; ++k) {
        MorphismExtendResult res = extend_morphism_deformation(md);
        if (!res.extended) {
            out.line("obstruction class in H^3(f,f) is nonzero at order " +
                     std::to_string(md.order + 1));
            out.report = {{"verb", "morphism-extend"},
                          {"inputs", {{"file", path}, {"steps", steps}}},
                          {"result",
                           {{"extended_to", md.order},
                            {"obstructed_at", md.order + 1},
                            {"obstruction_cocycle", res.obstruction_is_cocycle}}}};
            return 1;
        }
        md = *res.extended;
    }
    out.line("extended to order " + std::to_string(md.order));
    out.blob(morphism_deformation_to_json(md));
    out.report = {{"verb", "morphism-extend"},
                  {"inputs", {{"file", path}, {"steps", steps}}},
                  {"result",
                   {{"extended_to", md.order}, {"deformation", morphism_deformation_to_json(md)}}}};
    return 0;
}

int cmd_twist_validate(Output& out, const std::string& path, bool yau) {
    AlgebraSpec spec = algebra_from_json(load_json_file(path));
    if (!spec.twisted()) throw FormatError("twist-validate needs a spec with alpha and beta");
    if (yau) {
        TwistPair tw{*spec.alpha, *spec.beta};
        AlgebraSpec untwisted = spec;
        untwisted.alpha.reset();
        untwisted.beta.reset();
        AlgebraSpec twisted_spec = untwisted;
        YauResult r = yau_twist_check(untwisted, tw, &twisted_spec);
        if (!r.twisted_pi) {
            out.line("Yau twist rejected: " + r.error);
            out.report = {{"verb", "twist-validate"},
                          {"inputs", {{"file", path}, {"yau", true}}},
                          {"result", {{"valid", false}}},
                          {"witnesses", json::array({r.error})}};
            return 1;
        }
        out.line("Yau twist validates in the twisted operad");
        out.blob(algebra_to_json(twisted_spec));
        out.report = {
            {"verb", "twist-validate"},
            {"inputs", {{"file", path}, {"yau", true}}},
            {"result", {{"valid", true}, {"twisted_spec", algebra_to_json(twisted_spec)}}}};
        return 0;
    }
    CheckResult r = validate_algebra(spec);
    out.line(r.ok ? "twisted multiplication verified (membership and o' square)"
                  : "twisted validation failed" + witness_suffix(r));
    out.report = {{"verb", "twist-validate"},
                  {"inputs", {{"file", path}, {"yau", false}}},
                  {"result", {{"valid", r.ok}}},
                  {"witnesses", r.ok ? json::array() : json::array({r.detail})}};
    return r.ok ? 0 : 1;
}

int cmd_universal_deform(Output& out, const std::string& path) {
    json j = load_json_file(path);
    for (const auto& [key, _] : j.items())
        if (key != "base" && key != "D" && key != "Dbar" && key != "order")
            throw FormatError("universal-deform input: unknown field '" + key + "'");
    for (const char* key : {"base", "D", "Dbar", "order"})
        if (!j.contains(key))
            throw FormatError(std::string("universal-deform input: missing field '") + key + "'");
    AlgebraSpec base = algebra_from_json(j["base"]);
    if (!j["order"].is_number_integer()) throw FormatError("universal-deform: bad order");
    int order = j["order"].get<int>();
    if (order < 0 || order > kMaxOrder) throw FormatError("universal-deform: bad order");
    DenseMatrix dm = matrix_from_json(j["D"], base.dim, base.dim, "D");
    DenseMatrix dbm = matrix_from_json(j["Dbar"], base.dim, base.dim, "Dbar");
    OperadOps ops = base.ops();
    try {
        TruncatedDeformation def =
            universal_deformation(ops, base, element_from_matrix(base.family, dm),
                                  element_from_matrix(base.family, dbm), order);
        DeformationCheck chk = is_deformation(ops, def, order);
        out.line(std::string("universal deformation built; deformation equations ") +
                 (chk.ok ? "hold" : "FAIL") + " through order " + std::to_string(order));
        out.blob(deformation_to_json(def));
        out.report = {{"verb", "universal-deform"},
                      {"inputs", {{"file", path}}},
                      {"result", {{"valid", chk.ok}, {"deformation", deformation_to_json(def)}}}};
        return chk.ok ? 0 : 1;
    } catch (const std::invalid_argument& e) {
        out.line(std::string("preconditions violated: ") + e.what());
        out.report = {{"verb", "universal-deform"},
                      {"inputs", {{"file", path}}},
                      {"result", {{"valid", false}}},
                      {"witnesses", json::array({e.what()})}};
        return 1;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact deformation calculator for Loday-type algebras on shape operads"};
    app.require_subcommand(1);
    Output out;

    std::string family_arg, file1, file2, rep_arg, cocycle_path;
    int n_arg = 1, order_opt = -1, steps = 1;
    bool yau = false;

    auto* shapes_cmd = app.add_subcommand("shapes", "enumerate the index set U_n of a family");
    shapes_cmd->add_option("--family", family_arg, "algebra family")->required();
    shapes_cmd->add_option("--n", n_arg, "arity n >= 1")->required();
    add_format(shapes_cmd, out);

    auto* validate_cmd =
        app.add_subcommand("validate", "check that a spec file is a multiplication");
    validate_cmd->add_option("file", file1, "algebra spec file")->required();
    add_format(validate_cmd, out);

    auto* coh_cmd = app.add_subcommand("cohomology", "cohomology dimensions in one degree");
    coh_cmd->add_option("file", file1, "algebra or representation file")->required();
    coh_cmd->add_option("--rep", rep_arg, "adjoint (default) or trivial:m");
    coh_cmd->add_option("--n", n_arg, "degree")->required();
    add_format(coh_cmd, out);

    auto* der_cmd = app.add_subcommand("derivations", "basis of 1-cocycles");
    der_cmd->add_option("file", file1, "algebra or representation file")->required();
    der_cmd->add_option("--rep", rep_arg, "adjoint (default) or trivial:m");
    add_format(der_cmd, out);

    auto* dc_cmd = app.add_subcommand("deform-check", "verify the deformation equations");
    dc_cmd->add_option("file", file1, "deformation file")->required();
    dc_cmd->add_option("--order", order_opt,
                       "check through this order (default: the file's order)");
    add_format(dc_cmd, out);

    auto* de_cmd = app.add_subcommand("deform-extend", "extend a deformation order by order");
    de_cmd->add_option("file", file1, "deformation file")->required();
    de_cmd->add_option("--steps", steps, "number of orders to add (default 1)");
    add_format(de_cmd, out);

    auto* ob_cmd = app.add_subcommand("obstruction", "obstruction of a finite-order deformation");
    ob_cmd->add_option("file", file1, "deformation file")->required();
    add_format(ob_cmd, out);

    auto* eq_cmd = app.add_subcommand("equivalence", "search for a gauge equivalence");
    eq_cmd->add_option("file1", file1, "deformation file")->required();
    eq_cmd->add_option("file2", file2, "deformation file")->required();
    eq_cmd->add_option("--order", order_opt, "solve through this order");
    add_format(eq_cmd, out);

    auto* ext_cmd = app.add_subcommand("extension", "abelian extension from a 2-cocycle");
    ext_cmd->add_option("file", file1, "algebra or representation file")->required();
    ext_cmd->add_option("--rep", rep_arg, "adjoint (default) or trivial:m");
    ext_cmd->add_option("--cocycle", cocycle_path, "cochain file with a 2-cocycle")->required();
    add_format(ext_cmd, out);

    auto* mc_cmd = app.add_subcommand("morphism-cohomology", "H^n of the morphism complex");
    mc_cmd->add_option("file", file1, "morphism file")->required();
    mc_cmd->add_option("--n", n_arg, "degree")->required();
    add_format(mc_cmd, out);

    auto* me_cmd = app.add_subcommand("morphism-extend", "extend a morphism deformation");
    me_cmd->add_option("file", file1, "morphism deformation file")->required();
    me_cmd->add_option("--steps", steps, "number of orders to add (default 1)");
    add_format(me_cmd, out);

    auto* tw_cmd = app.add_subcommand("twist-validate", "validate a twisted spec or a Yau twist");
    tw_cmd->add_option("file", file1, "algebra spec file with alpha and beta")->required();
    tw_cmd->add_flag("--yau", yau,
                     "treat products as untwisted and validate their Yau twist instead");
    add_format(tw_cmd, out);

    auto* ud_cmd = app.add_subcommand("universal-deform",
                                      "deformation generated by two commuting 1-cocycles");
    ud_cmd->add_option("file", file1, "input file {base, D, Dbar, order}")->required();
    add_format(ud_cmd, out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        int code = 2;
        if (shapes_cmd->parsed()) code = cmd_shapes(out, family_arg, n_arg);
        else if (validate_cmd->parsed()) code = cmd_validate(out, file1);
        else if (coh_cmd->parsed()) code = cmd_cohomology(out, file1, rep_arg, n_arg);
        else if (der_cmd->parsed()) code = cmd_derivations(out, file1, rep_arg);
        else if (dc_cmd->parsed()) code = cmd_deform_check(out, file1, order_opt);
        else if (de_cmd->parsed()) code = cmd_deform_extend(out, file1, steps);
        else if (ob_cmd->parsed()) code = cmd_obstruction(out, file1);
        else if (eq_cmd->parsed()) code = cmd_equivalence(out, file1, file2, order_opt);
        else if (ext_cmd->parsed()) code = cmd_extension(out, file1, rep_arg, cocycle_path);
        else if (mc_cmd->parsed()) code = cmd_morphism_cohomology(out, file1, n_arg);
        else if (me_cmd->parsed()) code = cmd_morphism_extend(out, file1, steps);
        else if (tw_cmd->parsed()) code = cmd_twist_validate(out, file1, yau);
        else if (ud_cmd->parsed()) code = cmd_universal_deform(out, file1);
        out.finish(code);
        return code;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
