#include "hsalg/registry.hpp"

#include "hsalg/builders.hpp"

namespace hsalg {

ModelPtr heisenberg_model() {
    // generators a, b, c with dc = a ^ b
    std::vector<std::string> names{"a", "b", "c"};
    std::vector<long> weights{0, 0, 0};
    std::vector<std::vector<std::pair<std::vector<int>, Scalar>>> diffs(3);
    diffs[2] = {{{0, 1}, Scalar(1)}};
    return make_exterior_model(0, names, weights, diffs, names);
}

ModelPtr cat_torus_model() {
    // alpha is the rescaled base form; the eigenbasis forms scale by their
    // weight under the monodromy: d(a_i) = -i alpha ^ a_i, d(b_i) = +i alpha ^ b_i
    std::vector<std::string> names{"alpha", "a1", "b1", "a2", "b2"};
    std::vector<long> weights{0, -1, 1, -2, 2};
    std::vector<std::vector<std::pair<std::vector<int>, Scalar>>> diffs(5);
    diffs[1] = {{{0, 1}, Scalar(-1)}};
    diffs[2] = {{{0, 2}, Scalar(1)}};
    diffs[3] = {{{0, 3}, Scalar(-2)}};
    diffs[4] = {{{0, 4}, Scalar(2)}};
    return make_exterior_model(0, names, weights, diffs, names);
}

ModelPtr genus_model(int g) {
    if (g < 1) throw DomainError("genus must be >= 1");
    std::vector<BasisElement> basis;
    basis.push_back({"1", 0, 0});
    for (int i = 1; i <= g; ++i) basis.push_back({"a" + std::to_string(i), 1, 0});
    for (int i = 1; i <= g; ++i) basis.push_back({"b" + std::to_string(i), 1, 0});
    basis.push_back({"om", 2, 0});
    auto m = std::make_shared<FiniteCdga>(0, basis, 0);
    int om = 2 * g + 1;
    for (int i = 1; i <= g; ++i) {
        m->set_product(i, g + i, {{om, Scalar(1)}});
        m->set_product(g + i, i, {{om, Scalar(-1)}});
    }
    // all other degree-1 products and everything hitting degree > 2 vanish
    if (g == 1) m->set_coframe({"a1", "b1"});
    m->finalize();
    return m;
}

namespace {

BuiltinModel make_heisenberg() {
    BuiltinModel b;
    b.name = "heisenberg";
    b.description = "nilmanifold model (da = db = 0, dc = a^b); order-5 splitting eta = (a, b, -c)";
    b.model = heisenberg_model();
    SplittingData s;
    s.model = b.model;
    s.a = GradedElement::zero(b.model);
    s.k = 4;
    auto basis = [&](const char* n) {
        return GradedElement::basis(b.model, b.model->require_index(n));
    };
    s.etas = {basis("a"), basis("b"), -basis("c")};
    b.splitting = s;
    return b;
}

BuiltinModel make_genus(int g, std::vector<Rational> params) {
    BuiltinModel b;
    b.name = "genus-" + std::to_string(g);
    b.description = "surface cohomology ring, genus " + std::to_string(g) +
                    "; order-4 splitting from two closed 1-forms";
    b.model = genus_model(g);
    if (params.empty()) {
        // defaults: eta_1 = sum a_i, eta_2 = sum b_i  (x_i = z_i = 1, y_i = w_i = 0)
        params.assign(size_t(4 * g), Rational(0));
        for (int i = 0; i < g; ++i) {
            params[size_t(i)] = Rational(1);           // x_i
            params[size_t(3 * g + i)] = Rational(1);   // z_i
        }
    }
    if (int(params.size()) != 4 * g)
        throw DimensionError("genus-" + std::to_string(g) + " needs 4g = " +
                             std::to_string(4 * g) + " parameters");
    SplittingData s;
    s.model = b.model;
    s.a = GradedElement::zero(b.model);
    s.k = 3;
    GradedElement eta1 = GradedElement::zero(b.model);
    GradedElement eta2 = GradedElement::zero(b.model);
    for (int i = 1; i <= g; ++i) {
        int ai = b.model->require_index("a" + std::to_string(i));
        int bi = b.model->require_index("b" + std::to_string(i));
        eta1.coeffs()[ai] += Scalar(params[size_t(i - 1)]);          // x_i a_i
        eta1.coeffs()[bi] += Scalar(params[size_t(g + i - 1)]);      // y_i b_i
        eta2.coeffs()[ai] += Scalar(params[size_t(2 * g + i - 1)]);  // w_i a_i
        eta2.coeffs()[bi] += Scalar(params[size_t(3 * g + i - 1)]);  // z_i b_i
    }
    s.etas = {eta1, eta2};
    b.splitting = s;
    return b;
}

BuiltinModel make_cat_torus() {
    BuiltinModel b;
    b.name = "cat-torus";
    b.description = "invariant forms of the hyperbolic torus-bundle mapping torus; order-4 "
                    "splitting and symplectic data";
    b.model = cat_torus_model();
    auto basis = [&](const char* n) {
        return GradedElement::basis(b.model, b.model->require_index(n));
    };
    SplittingData s;
    s.model = b.model;
    s.a = basis("alpha");
    s.k = 3;
    s.etas = {basis("a1"), basis("a2")};
    b.splitting = s;

    SymplecticData sd;
    sd.s = s;
    sd.beta = wedge(basis("a1"), basis("b1")) + wedge(basis("a2"), basis("b2"));
    sd.alphas = {GradedElement::zero(b.model), basis("a2"), basis("a1") * Scalar(2),
                 basis("alpha") * Scalar(3)};
    b.symplectic = sd;
    return b;
}

BuiltinModel make_universal_u(int k) {
    BuiltinModel b;
    b.name = "universal-U" + std::to_string(k);
    b.description = "combined algebra of the order-" + std::to_string(k + 1) +
                    " universal algebroid over the unipotent nilmanifold";
    b.model = build_c_theta(k);
    ModelPtr ce = build_ce(k, CeVariant::unipotent);
    SplittingData s;
    s.model = ce;
    s.a = GradedElement::zero(ce);
    s.k = k;
    for (int i = 1; i < k; ++i)
        s.etas.push_back(GradedElement::basis(ce, ce->require_index("x" + std::to_string(i))));
    b.splitting = s;
    return b;
}

BuiltinModel make_universal_e(int k) {
    BuiltinModel b;
    b.name = "universal-E" + std::to_string(k);
    b.description = "CE algebra of the full jet group with its invariant splitting" +
                    std::string(k % 2 ? " and symplectic data" : "");
    b.model = build_ce(k, CeVariant::full);
    auto x = [&](int i) {
        return GradedElement::basis(b.model, b.model->require_index("x" + std::to_string(i)));
    };
    SplittingData s;
    s.model = b.model;
    s.a = x(0);
    s.k = k;
    for (int i = 1; i < k; ++i) s.etas.push_back(x(i));
    b.splitting = s;

    if (k % 2 == 1) {
        SymplecticData sd;
        sd.s = s;
        sd.beta = GradedElement::zero(b.model);
        sd.alphas.push_back(GradedElement::zero(b.model));  // alpha_0
        for (int r = 1; r <= k; ++r) sd.alphas.push_back(x(k - r) * Scalar(Rational(-r)));
        b.symplectic = sd;
    }
    return b;
}

std::optional<int> parse_suffix(const std::string& name, const std::string& prefix) {
    if (name.rfind(prefix, 0) != 0) return std::nullopt;
    std::string rest = name.substr(prefix.size());
    if (rest.empty()) return std::nullopt;
    for (char c : rest)
        if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    return std::stoi(rest);
}

}  // namespace

std::vector<RegistryEntry> registry_entries() {
    return {
        {"heisenberg", "nilmanifold model with order-5 splitting data"},
        {"genus-1", "torus surface ring, order-4 splitting (parameters x,y,w,z)"},
        {"genus-2", "genus-2 surface ring, order-4 splitting"},
        {"genus-3", "genus-3 surface ring, order-4 splitting"},
        {"cat-torus", "hyperbolic torus-bundle model with symplectic data"},
        {"universal-U3", "combined algebra of the order-4 universal algebroid"},
        {"universal-U4", "combined algebra of the order-5 universal algebroid"},
        {"universal-U5", "combined algebra of the order-6 universal algebroid"},
        {"universal-E3", "full-jet CE algebra with universal symplectic data"},
        {"universal-E5", "full-jet CE algebra with universal symplectic data"},
        {"ce-g-4", "bare CE algebra of the full jet algebra at k = 4"},
        {"ce-k-4", "bare CE algebra of the unipotent jet algebra at k = 4"},
        {"sk-4", "bare combined algebra at k = 4"},
        {"c-theta-4", "bare x0-free combined algebra at k = 4"},
    };
}

BuiltinModel get_builtin(const std::string& name, const std::vector<Rational>& genus_params) {
    if (name == "heisenberg") return make_heisenberg();
    if (name == "cat-torus") return make_cat_torus();
    if (auto g = parse_suffix(name, "genus-")) return make_genus(*g, genus_params);
    if (auto k = parse_suffix(name, "universal-U")) return make_universal_u(*k);
    if (auto k = parse_suffix(name, "universal-E")) return make_universal_e(*k);
    if (auto k = parse_suffix(name, "ce-g-")) {
        BuiltinModel b;
        b.name = name;
        b.description = "CE algebra, full variant";
        b.model = build_ce(*k, CeVariant::full);
        return b;
    }
    if (auto k = parse_suffix(name, "ce-k-")) {
        BuiltinModel b;
        b.name = name;
        b.description = "CE algebra, unipotent variant";
        b.model = build_ce(*k, CeVariant::unipotent);
        return b;
    }
    if (auto k = parse_suffix(name, "sk-")) {
        BuiltinModel b;
        b.name = name;
        b.description = "combined algebra";
        b.model = build_sk(*k);
        return b;
    }
    if (auto k = parse_suffix(name, "c-theta-")) {
        BuiltinModel b;
        b.name = name;
        b.description = "x0-free combined algebra";
        b.model = build_c_theta(*k);
        return b;
    }
    throw DomainError("unknown builtin model '" + name + "'");
}

}  // namespace hsalg
