#include "hsalg/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "hsalg/builders.hpp"
#include "hsalg/registry.hpp"
#include "hsalg/torus.hpp"

namespace hsalg {

namespace {

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ParseError("bad JSON in '" + path + "': " + e.what());
    }
    return j;
}

std::vector<Rational> parse_params(const std::string& csv) {
    std::vector<Rational> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) out.push_back(Rational::parse(tok));
    }
    return out;
}

struct ModelArgs {
    std::string model_name;
    std::string model_file;
    std::string data_file;
    std::string params;
    int order = 0;  // algebroid order (jet order + 1); 0 = take from data
};

void add_model_options(CLI::App* cmd, ModelArgs& args, bool with_data = true) {
    cmd->add_option("--model", args.model_name, "builtin model name (see `models`)");
    cmd->add_option("--model-file", args.model_file, "path to a model JSON file");
    if (with_data) {
        cmd->add_option("--data", args.data_file,
                        "path to a splitting/symplectic data JSON file");
        cmd->add_option("--params", args.params, "comma-separated rational parameters "
                                                 "for parameterized builtins");
        cmd->add_option("--k", args.order,
                        "algebroid order of the data (= jet order + 1); checked against "
                        "the resolved data");
    }
}

struct ResolvedData {
    BuiltinModel builtin;  // model always set; splitting/symplectic when available
};

ResolvedData resolve_model(const ModelArgs& args, bool need_splitting,
                           bool need_symplectic = false) {
    ResolvedData out;
    if (!args.model_name.empty() && !args.model_file.empty())
        throw ParseError("give either --model or --model-file, not both");
    if (!args.model_name.empty()) {
        out.builtin = get_builtin(args.model_name, parse_params(args.params));
    } else if (!args.model_file.empty()) {
        out.builtin.name = args.model_file;
        out.builtin.model = model_from_json(load_json_file(args.model_file));
    } else {
        throw ParseError("a model is required (--model or --model-file)");
    }
    if (!args.data_file.empty()) {
        Json j = load_json_file(args.data_file);
        ModelPtr m = out.builtin.model;
        // data attaches to the splitting model when the builtin carries one
        // over a different model and no model-file was given
        if (args.model_file.empty() && out.builtin.splitting &&
            out.builtin.splitting->model != out.builtin.model)
            m = out.builtin.splitting->model;
        if (j.contains("alphas"))
            out.builtin.symplectic = symplectic_from_json(m, j);
        out.builtin.splitting = splitting_from_json(m, j);
        if (out.builtin.symplectic) out.builtin.symplectic->s = *out.builtin.splitting;
    }
    if (need_splitting && !out.builtin.splitting)
        throw DomainError("model '" + out.builtin.name +
                          "' carries no splitting data; supply --data");
    if (need_symplectic && !out.builtin.symplectic)
        throw DomainError("model '" + out.builtin.name +
                          "' carries no symplectic data; supply --data with alphas/beta");
    if (args.order != 0 && out.builtin.splitting &&
        args.order != out.builtin.splitting->k + 1)
        throw ParseError("--k " + std::to_string(args.order) +
                         " does not match the data (algebroid order " +
                         std::to_string(out.builtin.splitting->k + 1) + ")");
    return out;
}

std::string dims_line(const std::vector<int>& dims) {
    std::string s;
    for (size_t i = 0; i < dims.size(); ++i) {
        if (i) s += " ";
        s += std::to_string(dims[i]);
    }
    return s;
}

Json reps_json(const CohomologyResult& h) {
    Json out = Json::array();
    for (const auto& degree : h.representatives) {
        Json row = Json::array();
        for (const auto& r : degree) row.push_back(r.str());
        out.push_back(std::move(row));
    }
    return out;
}

LaurentBivector bivector_from_args(const std::string& file, bool intro, int universal_k) {
    if (intro) return intro_bracket();
    if (universal_k > 0) return invert_form(universal_frame_data(universal_k));
    if (file.empty()) throw ParseError("a bivector is required (--bivector, --intro)");
    return bivector_from_json(load_json_file(file));
}

}  // namespace

CommandResult run_cli(const std::vector<std::string>& args) {
    CLI::App app{"hsalg: exact computations with hypersurface-algebroid structures"};
    app.require_subcommand(1);
    bool human = false;
    app.add_flag("--human", human, "render a human-readable table instead of JSON");

    CommandResult result;
    Json& body = result.body;
    std::ostringstream hout;

    // --- models ---
    auto* cmd_models = app.add_subcommand("models", "list builtin models");
    cmd_models->callback([&] {
        Json list = Json::array();
        for (const auto& e : registry_entries()) {
            list.push_back(Json{{"name", e.name}, {"description", e.description}});
            hout << e.name << "\t" << e.description << "\n";
        }
        body["models"] = std::move(list);
    });

    // --- ce ---
    auto* cmd_ce = app.add_subcommand("ce", "build a CE algebra and print its JSON model");
    int ce_k = 4;
    std::string ce_variant = "g";
    cmd_ce->add_option("--k", ce_k, "jet order")->required();
    cmd_ce->add_option("--variant", ce_variant, "g (full) or k (unipotent)");
    cmd_ce->callback([&] {
        if (ce_variant != "g" && ce_variant != "k") throw ParseError("variant must be g or k");
        auto m = build_ce(ce_k, ce_variant == "g" ? CeVariant::full : CeVariant::unipotent);
        body["model"] = model_to_json(*m);
        hout << "CE model with " << m->dim() << " basis elements\n";
    });

    // --- sk-build ---
    auto* cmd_sk = app.add_subcommand("sk-build", "build the combined universal algebra");
    int skb_k = 4;
    bool skb_ctheta = false;
    cmd_sk->add_option("--k", skb_k, "jet order")->required();
    cmd_sk->add_flag("--c-theta", skb_ctheta, "drop the x0 generator");
    cmd_sk->callback([&] {
        auto m = skb_ctheta ? build_c_theta(skb_k) : build_sk(skb_k);
        body["model"] = model_to_json(*m);
        hout << "combined model with " << m->dim() << " basis elements\n";
    });

    // --- export ---
    auto* cmd_export = app.add_subcommand("export", "print a builtin model as JSON");
    ModelArgs export_args;
    add_model_options(cmd_export, export_args, false);
    std::string export_params;
    cmd_export->add_option("--params", export_params, "parameters for parameterized builtins");
    cmd_export->callback([&] {
        ModelArgs a = export_args;
        a.params = export_params;
        auto r = resolve_model(a, false);
        body["model"] = model_to_json(*r.builtin.model);
        if (r.builtin.splitting) body["data"] = splitting_to_json(*r.builtin.splitting);
        if (r.builtin.symplectic) body["data"] = symplectic_to_json(*r.builtin.symplectic);
        hout << "exported " << r.builtin.name << " (" << r.builtin.model->dim()
             << " basis elements)\n";
    });

    // --- validate ---
    auto* cmd_validate = app.add_subcommand("validate", "check the cdga axioms of a model");
    ModelArgs validate_args;
    add_model_options(cmd_validate, validate_args, false);
    std::string validate_params;
    cmd_validate->add_option("--params", validate_params, "parameters for builtins");
    cmd_validate->callback([&] {
        ModelArgs a = validate_args;
        a.params = validate_params;
        auto r = resolve_model(a, false);
        auto rep = validate(*r.builtin.model);
        body["valid"] = rep.ok();
        body["associativity_exhaustive"] = rep.assoc_exhaustive;
        Json v = Json::array();
        for (const auto& viol : rep.violations)
            v.push_back(Json{{"axiom", viol.axiom}, {"detail", viol.detail}});
        body["violations"] = std::move(v);
        hout << rep.summary() << "\n";
        if (!rep.ok()) result.exit_code = 1;
    });

    // --- cohomology ---
    auto* cmd_coh = app.add_subcommand("cohomology", "cohomology of a model (optionally twisted)");
    ModelArgs coh_args;
    add_model_options(cmd_coh, coh_args);
    long coh_twist = 0;
    bool coh_reps = false;
    cmd_coh->add_option("--twist", coh_twist,
                        "weight w: use d - w * (connection ^ .) from the model's splitting data");
    cmd_coh->add_flag("--reps", coh_reps, "include representatives");
    cmd_coh->callback([&] {
        auto r = resolve_model(coh_args, false);
        CohomologyResult h;
        if (coh_twist != 0) {
            if (!r.builtin.splitting)
                throw DomainError("twisted cohomology needs splitting data for the connection");
            const auto& s = *r.builtin.splitting;
            h = twisted_cohomology(s.model, s.a, coh_twist);
        } else {
            h = cohomology(r.builtin.model);
        }
        body["dims"] = h.dims;
        if (coh_reps) body["representatives"] = reps_json(h);
        hout << "dims " << dims_line(h.dims) << "\n";
    });

    // --- mc-check ---
    auto* cmd_mc = app.add_subcommand("mc-check", "verify the quadratic closure system");
    ModelArgs mc_args;
    add_model_options(cmd_mc, mc_args);
    cmd_mc->callback([&] {
        auto r = resolve_model(mc_args, true);
        const auto& s = *r.builtin.splitting;
        auto rep = check_maurer_cartan(s);
        body["jet_order"] = s.k;
        body["algebroid_order"] = s.k + 1;
        body["pass"] = rep.pass;
        Json res = Json::array();
        for (size_t i = 0; i < rep.residuals.size(); ++i)
            res.push_back(Json{{"r", int(i) + 1}, {"residual", rep.residuals[i].str()}});
        body["residuals"] = std::move(res);
        hout << (rep.pass ? "pass" : "FAIL") << "\n";
        for (size_t i = 0; i < rep.residuals.size(); ++i)
            hout << "  r=" << i + 1 << ": " << rep.residuals[i].str() << "\n";
        if (!rep.pass) result.exit_code = 1;
    });

    // --- ext-class ---
    auto* cmd_ext = app.add_subcommand("ext-class", "extension form and its twisted class");
    ModelArgs ext_args;
    add_model_options(cmd_ext, ext_args);
    cmd_ext->callback([&] {
        auto r = resolve_model(ext_args, true);
        auto res = extension_class(*r.builtin.splitting);
        body["form"] = res.form.str();
        body["form_coefficients"] = element_to_json(res.form);
        body["closed"] = res.closed;
        body["nonzero_class"] = res.nonzero_class;
        hout << res.form.str() << (res.nonzero_class ? " (nonzero class)" : " (exact)") << "\n";
    });

    // --- sk-cohomology ---
    auto* cmd_skc = app.add_subcommand("sk-cohomology",
                                       "cohomology of the staircase total complex");
    ModelArgs skc_args;
    add_model_options(cmd_skc, skc_args);
    bool skc_e1 = false;
    cmd_skc->add_flag("--e1", skc_e1, "also print the first filtration page");
    cmd_skc->callback([&] {
        auto r = resolve_model(skc_args, true);
        auto sk = build_sk_complex(*r.builtin.splitting);
        body["d2_zero"] = sk.d2_zero;
        if (!sk.d2_zero) {
            body["witness"] = sk.witness;
            hout << "differential does not square to zero: " << sk.witness << "\n";
            result.exit_code = 1;
            return;
        }
        auto dims = sk_cohomology_dims(sk);
        body["dims"] = dims;
        hout << "dims " << dims_line(dims) << "\n";
        if (skc_e1) {
            auto page = filtration_e1(sk);
            Json cols = Json::array();
            for (int r2 = 0; r2 <= page.k; ++r2) {
                cols.push_back(Json{{"column", -r2}, {"dims", page.columns[size_t(r2)]}});
                hout << "E1 column p=" << -r2 << ": "
                     << dims_line(page.columns[size_t(r2)]) << "\n";
            }
            body["e1"] = std::move(cols);
        }
    });

    // --- gysin-check ---
    auto* cmd_gysin = app.add_subcommand("gysin-check",
                                         "restricted complex vs the long-exact-sequence ranks");
    ModelArgs gysin_args;
    add_model_options(cmd_gysin, gysin_args);
    cmd_gysin->callback([&] {
        auto r = resolve_model(gysin_args, true);
        auto rep = restricted_complex(*r.builtin.splitting);
        body["dims"] = rep.dims;
        body["expected"] = rep.expected;
        body["identity_holds"] = rep.identity_holds;
        body["extension_form"] = rep.ext.str();
        hout << "restricted dims " << dims_line(rep.dims) << "\n"
             << "expected        " << dims_line(rep.expected) << "\n"
             << (rep.identity_holds ? "identity holds" : "IDENTITY FAILS") << "\n";
        if (!rep.identity_holds) result.exit_code = 1;
    });

    // --- symplectic-check ---
    auto* cmd_symp = app.add_subcommand("symplectic-check",
                                        "closure system and nondegeneracy of symplectic data");
    ModelArgs symp_args;
    add_model_options(cmd_symp, symp_args);
    cmd_symp->callback([&] {
        auto r = resolve_model(symp_args, true, true);
        auto rep = check_symplectic_data(*r.builtin.symplectic);
        body["beta_closed"] = rep.beta_closed;
        body["closure_pass"] = rep.closure_pass;
        Json res = Json::array();
        for (size_t p = 0; p < rep.closure_residuals.size(); ++p)
            res.push_back(Json{{"p", int(p)}, {"residual", rep.closure_residuals[p].str()}});
        body["closure_residuals"] = std::move(res);
        body["gamma"] = rep.gamma.str();
        body["alpha_k_nonvanishing"] = to_string(rep.alpha_k_nonvanishing);
        body["nondegenerate"] = to_string(rep.nondegenerate);
        if (rep.pairing.rows() > 0) body["pairing"] = matrix_to_json(rep.pairing);
        bool pass = rep.pass();
        body["pass"] = pass;
        hout << (pass ? "pass" : "FAIL") << "; gamma = " << rep.gamma.str() << "\n";
        if (!pass) result.exit_code = 1;
    });

    // --- variation ---
    auto* cmd_var = app.add_subcommand("variation",
                                       "leafwise form and its transverse variation class");
    ModelArgs var_args;
    add_model_options(cmd_var, var_args);
    cmd_var->callback([&] {
        auto r = resolve_model(var_args, true, true);
        auto res = symplectic_variation(*r.builtin.symplectic);
        Json names = Json::array();
        for (int i = 0; i < res.quotient.model->dim(); ++i)
            names.push_back(res.quotient.model->elem(i).name);
        body["quotient_basis"] = std::move(names);
        body["omega_f"] = res.omega_f.str();
        body["var"] = res.var.str();
        body["var_nonzero"] = res.var_nonzero;
        hout << "omega_F = " << res.omega_f.str() << "\n"
             << "var = " << res.var.str() << (res.var_nonzero ? " (nonzero class)" : " (exact)")
             << "\n";
    });

    // --- deform ---
    auto* cmd_deform = app.add_subcommand("deform", "scale the tower by s^i and re-derive");
    ModelArgs deform_args;
    add_model_options(cmd_deform, deform_args);
    std::string deform_s = "1";
    cmd_deform->add_option("--s", deform_s, "rational scale")->required();
    cmd_deform->callback([&] {
        auto r = resolve_model(deform_args, true);
        Rational s = Rational::parse(deform_s);
        auto rep = deform_report(*r.builtin.splitting, s);
        body["s"] = s.str();
        body["mc_pass"] = rep.mc_pass;
        body["ext_base"] = rep.ext_base.str();
        body["ext_scaled"] = rep.ext_scaled.str();
        body["exponent"] = r.builtin.splitting->k;
        body["homogeneity"] = rep.homogeneity;
        body["etas"] = splitting_to_json(rep.scaled)["etas"];
        hout << "e(sigma(s)) = " << rep.ext_scaled.str() << ", homogeneity "
             << (rep.homogeneity ? "holds" : "FAILS") << "\n";
        if (!rep.mc_pass || !rep.homogeneity) result.exit_code = 1;
    });

    // --- jacobi-check ---
    auto* cmd_jac = app.add_subcommand("jacobi-check", "Schouten bracket residual of a bivector");
    std::string jac_file;
    bool jac_intro = false;
    int jac_universal = 0;
    cmd_jac->add_option("--bivector", jac_file, "bivector JSON file");
    cmd_jac->add_flag("--intro", jac_intro, "use the builtin order-4 family bracket");
    cmd_jac->add_option("--universal", jac_universal,
                        "invert the universal frame data at this jet order first");
    cmd_jac->callback([&] {
        auto b = bivector_from_args(jac_file, jac_intro, jac_universal);
        auto res = schouten_jacobi(b);
        body["holds"] = res.holds();
        Json comps = Json::array();
        for (const auto& [i, j, k, p] : res.components)
            comps.push_back(Json{{"i", b.vars[size_t(i)]},
                                 {"j", b.vars[size_t(j)]},
                                 {"k", b.vars[size_t(k)]},
                                 {"residual", p.str()}});
        body["components"] = std::move(comps);
        hout << (res.holds() ? "Jacobi identity holds" : "Jacobi identity FAILS") << "\n";
        if (!res.holds()) result.exit_code = 1;
    });

    // --- invert-form ---
    auto* cmd_inv = app.add_subcommand("invert-form",
                                       "push the inverse of a frame 2-form through the anchor");
    std::string inv_file;
    int inv_universal = 0;
    cmd_inv->add_option("--frame", inv_file, "frame data JSON file");
    cmd_inv->add_option("--universal", inv_universal, "use the universal frame data at this order");
    cmd_inv->callback([&] {
        FrameData fd;
        if (inv_universal > 0)
            fd = universal_frame_data(inv_universal);
        else if (!inv_file.empty())
            fd = frame_from_json(load_json_file(inv_file));
        else
            throw ParseError("frame data required (--frame or --universal)");
        auto b = invert_form(fd);
        body["bivector"] = bivector_to_json(b);
        if (b.vars.size() % 2 == 0) body["pfaffian"] = bivector_pfaffian(b).str();
        hout << "bivector with " << b.vars.size() << " coordinates\n";
        for (const auto& e : body["bivector"]["entries"])
            hout << "  {" << e[0].get<std::string>() << "," << e[1].get<std::string>()
                 << "} = " << e[2].get<std::string>() << "\n";
    });

    // --- rank-order ---
    auto* cmd_rank = app.add_subcommand("rank-order", "vanishing order of the Pfaffian");
    std::string rank_file, rank_var = "t";
    bool rank_intro = false;
    int rank_universal = 0;
    cmd_rank->add_option("--bivector", rank_file, "bivector JSON file");
    cmd_rank->add_flag("--intro", rank_intro, "use the builtin order-4 family bracket");
    cmd_rank->add_option("--universal", rank_universal, "use the universal frame data");
    cmd_rank->add_option("--var", rank_var, "variable whose zero locus is measured")->required();
    cmd_rank->callback([&] {
        auto b = bivector_from_args(rank_file, rank_intro, rank_universal);
        LaurentPoly pf = bivector_pfaffian(b);
        int order = rank_drop_order(b, rank_var);
        body["pfaffian"] = pf.str();
        body["var"] = rank_var;
        body["order"] = order;
        hout << "Pfaffian " << pf.str() << " vanishes to order " << order << " at " << rank_var
             << " = 0\n";
    });

    // --- mapping-torus ---
    auto* cmd_mt = app.add_subcommand("mapping-torus", "twisted cohomology of a mapping torus");
    std::string mt_matrix, mt_mu;
    int mt_degree = 1;
    bool mt_cat = false;
    int mt_g1 = 1, mt_g2 = 1;
    cmd_mt->add_option("--matrix", mt_matrix, "integer monodromy matrix, e.g. [[2,1],[1,1]]");
    cmd_mt->add_option("--mu", mt_mu, "twist eigenvalue, e.g. (3+sqrt5)/2");
    cmd_mt->add_option("--degree", mt_degree, "cohomology degree");
    cmd_mt->add_flag("--cat-report", mt_cat, "run the hyperbolic block-diagonal report");
    cmd_mt->add_option("--g1", mt_g1, "first genus parameter for the report");
    cmd_mt->add_option("--g2", mt_g2, "second genus parameter for the report");
    cmd_mt->callback([&] {
        if (mt_cat) {
            auto rep = cat_map_report(mt_g1, mt_g2);
            body["rho_eig"] = rep.rho_eig;
            body["h1_l1"] = rep.h1_l1;
            body["h1_l2"] = rep.h1_l2;
            body["h2_l3"] = rep.h2_l3;
            body["dim_e1"] = rep.dim_e1;
            body["dim_e2"] = rep.dim_e2;
            body["moduli_dim"] = rep.moduli_dim;
            body["sphere_dim"] = rep.sphere_dim;
            body["symmetric_under_inverse"] = rep.symmetric_under_inverse;
            hout << "dims (" << rep.h1_l1 << ", " << rep.h1_l2 << ", " << rep.h2_l3
                 << "); moduli sphere dimension " << rep.sphere_dim << "\n";
            return;
        }
        if (mt_matrix.empty() || mt_mu.empty())
            throw ParseError("--matrix and --mu are required (or use --cat-report)");
        Json jm;
        try {
            jm = Json::parse(mt_matrix);
        } catch (const std::exception& e) {
            throw ParseError(std::string("bad matrix JSON: ") + e.what());
        }
        ExactMatrix a = matrix_from_json(jm);
        TorusMonodromy tm = make_torus_monodromy(a);
        Scalar mu = parse_scalar_string(mt_mu);
        auto dims = twisted_dims(tm, mu, mt_degree);
        body["degree"] = mt_degree;
        body["mu"] = mu.str();
        body["dim"] = dims.dim;
        body["kernel_dim"] = dims.kernel;
        body["cokernel_dim"] = dims.cokernel;
        hout << "dim H^" << mt_degree << " = " << dims.dim << " (ker " << dims.kernel
             << " + coker " << dims.cokernel << ")\n";
    });

    // --- universal-symplectic ---
    auto* cmd_us = app.add_subcommand("universal-symplectic",
                                      "the exact 2-form on the odd combined algebra");
    int us_n = 1;
    cmd_us->add_option("--n", us_n, "half the unipotent rank (k = 2n+1)")->required();
    cmd_us->callback([&] {
        auto res = universal_symplectic(us_n);
        body["n"] = res.n;
        body["k"] = 2 * res.n + 1;
        body["varpi"] = res.varpi.str();
        body["gamma"] = res.gamma.str();
        body["alpha_top"] = res.alpha_top.str();
        body["pairing"] = matrix_to_json(res.pairing);
        body["pairing_det"] = det(res.pairing).str();
        body["nondegenerate"] = res.nondegenerate;
        hout << "gamma = " << res.gamma.str() << "; pairing det " << det(res.pairing).str()
             << (res.nondegenerate ? " (nondegenerate)" : " (degenerate)") << "\n";
        if (!res.nondegenerate) result.exit_code = 1;
    });

    // --- jet ---
    auto* cmd_jet = app.add_subcommand("jet", "truncated-polynomial group operations");
    int jet_k = 3, jet_m = 1;
    std::vector<std::string> jet_operands;
    std::string jet_op;
    cmd_jet->add_option("op", jet_op,
                        "compose|invert|project|decompose|cocycle|exp|log|bracket|adjoint")
        ->required();
    cmd_jet->add_option("--k", jet_k, "jet order")->required();
    cmd_jet->add_option("--m", jet_m, "target order for project");
    cmd_jet->add_option("operands", jet_operands, "polynomial strings like z+2z^2");
    cmd_jet->callback([&] {
        auto need = [&](size_t n) {
            if (jet_operands.size() != n)
                throw ParseError("operation '" + jet_op + "' takes " + std::to_string(n) +
                                 " operand(s)");
        };
        auto jp = [&](size_t i) { return JetPoly::parse(jet_k, jet_operands[i]); };
        auto jf = [&](size_t i) {
            std::string text = jet_operands[i];
            if (text == "0") return JetVectorField::zero(jet_k);
            // reuse the polynomial parser with a placeholder z, then drop it
            std::string full =
                (!text.empty() && (text[0] == '-' || text[0] == '+')) ? "z" + text : "z+" + text;
            JetPoly p = JetPoly::parse(jet_k, full);
            std::vector<Rational> c = p.c;
            c[0] -= Rational(1);
            return JetVectorField(jet_k, std::move(c));
        };
        if (jet_op == "compose") {
            need(2);
            body["result"] = compose(jp(0), jp(1)).str();
        } else if (jet_op == "invert") {
            need(1);
            body["result"] = invert(jp(0)).str();
        } else if (jet_op == "project") {
            need(1);
            body["result"] = project(jp(0), jet_m).str();
        } else if (jet_op == "decompose") {
            need(1);
            auto [u, h] = decompose_semidirect(jp(0));
            body["u"] = u.str();
            body["unipotent"] = h.str();
            body["result"] = h.str();
        } else if (jet_op == "cocycle") {
            need(2);
            body["result"] = extension_cocycle(jp(0), jp(1)).str();
        } else if (jet_op == "exp") {
            need(1);
            body["result"] = exp_flow(jf(0)).str();
        } else if (jet_op == "log") {
            need(1);
            body["result"] = log_jet(jp(0)).str();
        } else if (jet_op == "bracket") {
            need(2);
            body["result"] = lie_bracket(jf(0), jf(1)).str();
        } else if (jet_op == "adjoint") {
            need(2);
            body["result"] = adjoint(jp(0), jf(1)).str();
        } else {
            throw ParseError("unknown jet operation '" + jet_op + "'");
        }
        hout << body["result"].get<std::string>() << "\n";
    });

    // ----- dispatch -----
    std::vector<std::string> argv = args;
    try {
        std::vector<const char*> cargs;
        cargs.push_back("hsalg");
        for (const auto& a : argv) cargs.push_back(a.c_str());
        app.parse(int(cargs.size()), cargs.data());
    } catch (const CLI::CallForHelp& e) {
        result.exit_code = 0;
        result.human = app.help();
        body["status"] = "help";
        return result;
    } catch (const CLI::ParseError& e) {
        result.exit_code = 2;
        body["status"] = "usage-error";
        body["error"] = e.what();
        result.human = std::string(e.what()) + "\n" + app.help();
        return result;
    } catch (const ParseError& e) {
        result.exit_code = 2;
        body["status"] = "usage-error";
        body["error"] = e.what();
        result.human = e.what();
        return result;
    } catch (const Error& e) {
        result.exit_code = result.exit_code == 0 ? 1 : result.exit_code;
        body["status"] = "check-failed";
        body["error"] = e.what();
        result.human = e.what();
        return result;
    } catch (const std::exception& e) {
        result.exit_code = 3;
        body["status"] = "internal-error";
        body["error"] = e.what();
        result.human = e.what();
        return result;
    }

    if (!body.contains("status"))
        body["status"] = result.exit_code == 0 ? "ok" : "check-failed";
    if (!app.get_subcommands().empty())
        body["command"] = app.get_subcommands().front()->get_name();
    result.human = hout.str();
    return result;
}

}  // namespace hsalg
