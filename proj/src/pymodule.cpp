#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hsalg/builders.hpp"
#include "hsalg/cli.hpp"
#include "hsalg/registry.hpp"
#include "hsalg/torus.hpp"

namespace py = pybind11;
using namespace hsalg;

namespace {

Json parse_json(const std::string& text) {
    return Json::parse(text);
}

ModelPtr model_from_any(const std::string& name_or_json) {
    if (!name_or_json.empty() && (name_or_json[0] == '{' || name_or_json[0] == '['))
        return model_from_json(parse_json(name_or_json));
    return get_builtin(name_or_json).model;
}

}  // namespace

PYBIND11_MODULE(_hsalg, m) {
    m.doc() = "exact computations with hypersurface-algebroid structures";

    m.def("run_cli", [](const std::vector<std::string>& args) {
        CommandResult res = run_cli(args);
        return py::make_tuple(res.exit_code, res.body.dump());
    },
          "run a CLI invocation; returns (exit_code, json_body)");

    m.def("model_json", [](const std::string& name) {
        return model_to_json(*get_builtin(name).model).dump();
    });

    m.def("cohomology_dims", [](const std::string& name_or_json) {
        return cohomology(model_from_any(name_or_json)).dims;
    });

    m.def("validate_model", [](const std::string& name_or_json) {
        auto rep = validate(*model_from_any(name_or_json));
        std::vector<std::string> out;
        for (const auto& v : rep.violations) out.push_back(v.axiom + ": " + v.detail);
        return out;
    });

    m.def("mc_check", [](const std::string& name) {
        auto b = get_builtin(name);
        if (!b.splitting) throw DomainError("no splitting data on '" + name + "'");
        return check_maurer_cartan(*b.splitting).pass;
    });

    m.def("extension_class_str", [](const std::string& name) {
        auto b = get_builtin(name);
        if (!b.splitting) throw DomainError("no splitting data on '" + name + "'");
        auto res = extension_class(*b.splitting);
        return py::make_tuple(res.form.str(), res.nonzero_class);
    });

    m.def("jet_compose", [](int k, const std::string& f, const std::string& g) {
        return compose(JetPoly::parse(k, f), JetPoly::parse(k, g)).str();
    });
    m.def("jet_invert", [](int k, const std::string& f) {
        return invert(JetPoly::parse(k, f)).str();
    });

    m.def("intro_bracket_jacobi", [] { return schouten_jacobi(intro_bracket()).holds(); });
    m.def("intro_bracket_rank_order", [] { return rank_drop_order(intro_bracket(), "t"); });

    m.def("universal_bivector", [](int k) {
        return bivector_to_json(invert_form(universal_frame_data(k))).dump();
    });

    m.def("mapping_torus_dims", [](const std::string& matrix, const std::string& mu, int degree) {
        TorusMonodromy tm = make_torus_monodromy(matrix_from_json(parse_json(matrix)));
        auto res = twisted_dims(tm, parse_scalar_string(mu), degree);
        return py::make_tuple(res.dim, res.kernel, res.cokernel);
    });

    m.def("cat_report", [](int g1, int g2) {
        auto rep = cat_map_report(g1, g2);
        py::dict d;
        d["rho_eig"] = rep.rho_eig;
        d["h1_l1"] = rep.h1_l1;
        d["h1_l2"] = rep.h1_l2;
        d["h2_l3"] = rep.h2_l3;
        d["dim_e1"] = rep.dim_e1;
        d["dim_e2"] = rep.dim_e2;
        d["sphere_dim"] = rep.sphere_dim;
        return d;
    });

    m.def("universal_symplectic_report", [](int n) {
        auto res = universal_symplectic(n);
        py::dict d;
        d["gamma"] = res.gamma.str();
        d["pairing_det"] = det(res.pairing).str();
        d["nondegenerate"] = res.nondegenerate;
        return d;
    });

    m.def("registry_names", [] {
        std::vector<std::string> out;
        for (const auto& e : registry_entries()) out.push_back(e.name);
        return out;
    });
}
