#include "hsalg/json_io.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace hsalg {

Json scalar_to_json(const Scalar& s) {
    if (s.is_rational()) return s.rat_part().str();
    Json j;
    j["a"] = s.rat_part().str();
    j["b"] = s.quad_part().str();
    j["d"] = s.disc();
    return j;
}

Scalar scalar_from_json(const Json& j) {
    if (j.is_string()) return Scalar(Rational::parse(j.get<std::string>()));
    if (j.is_number_integer()) return Scalar(Rational(j.get<long>()));
    if (j.is_object()) {
        Rational a = Rational::parse(j.at("a").get<std::string>());
        Rational b = Rational::parse(j.at("b").get<std::string>());
        long d = j.at("d").get<long>();
        return Scalar(a, b, d);
    }
    throw ParseError("bad scalar JSON: " + j.dump());
}

Scalar parse_scalar_string(const std::string& text) {
    size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto parse_uint = [&]() -> long {
        skip();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw ParseError("expected number in '" + text + "'");
        return std::stol(text.substr(start, pos - start));
    };

    std::function<Scalar()> parse_sum = [&]() -> Scalar {
        Scalar acc(0);
        bool first = true;
        while (true) {
            skip();
            int sign = 1;
            if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
                sign = text[pos] == '-' ? -1 : 1;
                ++pos;
            } else if (!first) {
                break;
            }
            first = false;
            skip();
            Rational coeff(sign);
            bool have_num = false;
            if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                long num = parse_uint();
                long den = 1;
                skip();
                if (pos < text.size() && text[pos] == '/') {
                    size_t save = pos;
                    ++pos;
                    skip();
                    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                        den = parse_uint();
                    } else {
                        pos = save;
                    }
                }
                coeff *= Rational(num, den);
                have_num = true;
            }
            skip();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                skip();
            }
            if (pos + 3 < text.size() + 1 && text.compare(pos, 4, "sqrt") == 0) {
                pos += 4;
                long d = parse_uint();
                acc += Scalar(Rational(0), coeff, d);
            } else {
                if (!have_num) throw ParseError("bad scalar term in '" + text + "'");
                acc += Scalar(coeff);
            }
            skip();
        }
        return acc;
    };

    skip();
    Scalar value;
    if (pos < text.size() && text[pos] == '(') {
        ++pos;
        value = parse_sum();
        skip();
        if (pos >= text.size() || text[pos] != ')') throw ParseError("missing ')' in '" + text + "'");
        ++pos;
        skip();
        if (pos < text.size() && text[pos] == '/') {
            ++pos;
            long den = parse_uint();
            value /= Scalar(Rational(den));
        }
    } else {
        value = parse_sum();
    }
    skip();
    if (pos != text.size()) throw ParseError("trailing characters in scalar '" + text + "'");
    return value;
}

Json model_to_json(const FiniteCdga& m) {
    Json j;
    j["field"] = m.field_disc() == 0 ? std::string("Q")
                                     : "Q(sqrt" + std::to_string(m.field_disc()) + ")";
    Json basis = Json::array();
    for (int i = 0; i < m.dim(); ++i) {
        Json b;
        b["name"] = m.elem(i).name;
        b["degree"] = m.elem(i).degree;
        if (m.elem(i).weight != 0) b["weight"] = m.elem(i).weight;
        basis.push_back(std::move(b));
    }
    j["basis"] = std::move(basis);
    j["unit"] = m.elem(m.unit_index()).name;
    Json products = Json::array();
    for (const auto& [key, row] : m.product_table()) {
        if (key.first == m.unit_index() || key.second == m.unit_index()) continue;
        for (const auto& [idx, c] : row) {
            Json entry = Json::array(
                {m.elem(key.first).name, m.elem(key.second).name, m.elem(idx).name,
                 scalar_to_json(c)});
            products.push_back(std::move(entry));
        }
    }
    j["products"] = std::move(products);
    Json diff = Json::array();
    for (int i = 0; i < m.dim(); ++i)
        for (const auto& [idx, c] : m.diff(i))
            diff.push_back(Json::array({m.elem(i).name, m.elem(idx).name, scalar_to_json(c)}));
    j["differential"] = std::move(diff);
    if (!m.coframe().empty()) j["coframe"] = m.coframe();
    return j;
}

ModelPtr model_from_json(const Json& j) {
    long disc = 0;
    if (j.contains("field")) {
        std::string f = j.at("field").get<std::string>();
        if (f != "Q") {
            if (f.rfind("Q(sqrt", 0) != 0 || f.back() != ')')
                throw ParseError("bad field tag '" + f + "'");
            disc = std::stol(f.substr(6, f.size() - 7));
        }
    }
    std::vector<BasisElement> basis;
    for (const auto& b : j.at("basis")) {
        BasisElement be;
        be.name = b.at("name").get<std::string>();
        be.degree = b.at("degree").get<int>();
        if (b.contains("weight")) be.weight = b.at("weight").get<long>();
        basis.push_back(std::move(be));
    }
    std::string unit_name = j.contains("unit") ? j.at("unit").get<std::string>() : "1";
    int unit = -1;
    for (size_t i = 0; i < basis.size(); ++i)
        if (basis[i].name == unit_name) unit = int(i);
    if (unit < 0) throw ParseError("unit element '" + unit_name + "' not found in basis");

    auto m = std::make_shared<FiniteCdga>(disc, basis, unit);
    std::map<std::pair<int, int>, SparseVec> rows;
    for (const auto& p : j.at("products")) {
        if (!p.is_array() || p.size() != 4) throw ParseError("product entries are quadruples");
        int l = m->require_index(p.at(0).get<std::string>());
        int r = m->require_index(p.at(1).get<std::string>());
        int res = m->require_index(p.at(2).get<std::string>());
        Scalar c = scalar_from_json(p.at(3));
        SparseVec& row = rows[{l, r}];
        bool merged = false;
        for (auto& [idx, v] : row)
            if (idx == res) {
                v += c;
                merged = true;
            }
        if (!merged) row.push_back({res, c});
    }
    for (auto& [key, row] : rows) {
        std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        SparseVec clean;
        for (auto& [idx, v] : row)
            if (!v.is_zero()) clean.push_back({idx, v});
        m->set_product(key.first, key.second, std::move(clean));
    }
    std::map<int, SparseVec> diffs;
    if (j.contains("differential"))
        for (const auto& t : j.at("differential")) {
            if (!t.is_array() || t.size() != 3) throw ParseError("differential entries are triples");
            int src = m->require_index(t.at(0).get<std::string>());
            int res = m->require_index(t.at(1).get<std::string>());
            diffs[src].push_back({res, scalar_from_json(t.at(2))});
        }
    for (auto& [src, row] : diffs) {
        std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        m->set_diff(src, std::move(row));
    }
    if (j.contains("coframe")) m->set_coframe(j.at("coframe").get<std::vector<std::string>>());
    m->finalize();
    auto rep = validate(*m);
    if (!rep.ok()) throw ParseError("invalid model: " + rep.summary());
    return m;
}

Json element_to_json(const GradedElement& e) {
    Json j = Json::object();
    for (size_t i = 0; i < e.coeffs().size(); ++i)
        if (!e.coeffs()[i].is_zero())
            j[e.model()->elem(int(i)).name] = scalar_to_json(e.coeffs()[i]);
    return j;
}

GradedElement element_from_json(ModelPtr model, const Json& j) {
    GradedElement e = GradedElement::zero(model);
    if (j.is_null()) return e;
    if (!j.is_object()) throw ParseError("element JSON must map basis names to coefficients");
    for (auto it = j.begin(); it != j.end(); ++it)
        e.coeffs()[model->require_index(it.key())] += scalar_from_json(it.value());
    return e;
}

Json jet_to_json(const JetPoly& f) {
    Json j;
    j["k"] = f.k;
    Json coeffs = Json::array();
    for (const auto& c : f.c) coeffs.push_back(c.str());
    j["coeffs"] = std::move(coeffs);
    return j;
}

JetPoly jet_from_json(const Json& j) {
    int k = j.at("k").get<int>();
    std::vector<Rational> c;
    for (const auto& s : j.at("coeffs")) c.push_back(Rational::parse(s.get<std::string>()));
    return JetPoly(k, std::move(c));
}

Json field_to_json(const JetVectorField& x) {
    Json j;
    j["k"] = x.k;
    Json coeffs = Json::array();
    for (const auto& c : x.c) coeffs.push_back(c.str());
    j["coeffs"] = std::move(coeffs);
    j["lie"] = true;
    return j;
}

JetVectorField field_from_json(const Json& j) {
    int k = j.at("k").get<int>();
    std::vector<Rational> c;
    for (const auto& s : j.at("coeffs")) c.push_back(Rational::parse(s.get<std::string>()));
    return JetVectorField(k, std::move(c));
}

Json splitting_to_json(const SplittingData& s) {
    Json j;
    j["k"] = s.k;
    if (!s.a.is_zero()) j["connection"] = element_to_json(s.a);
    Json etas = Json::array();
    for (const auto& e : s.etas) etas.push_back(element_to_json(e));
    j["etas"] = std::move(etas);
    return j;
}

SplittingData splitting_from_json(ModelPtr model, const Json& j) {
    SplittingData s;
    s.model = model;
    s.k = j.at("k").get<int>();
    s.a = j.contains("connection") ? element_from_json(model, j.at("connection"))
                                   : GradedElement::zero(model);
    for (const auto& e : j.at("etas")) s.etas.push_back(element_from_json(model, e));
    validate_splitting(s);
    return s;
}

Json symplectic_to_json(const SymplecticData& sd) {
    Json j = splitting_to_json(sd.s);
    j["beta"] = element_to_json(sd.beta);
    Json alphas = Json::array();
    for (const auto& a : sd.alphas) alphas.push_back(element_to_json(a));
    j["alphas"] = std::move(alphas);
    return j;
}

SymplecticData symplectic_from_json(ModelPtr model, const Json& j) {
    SymplecticData sd;
    sd.s = splitting_from_json(model, j);
    sd.beta = j.contains("beta") ? element_from_json(model, j.at("beta"))
                                 : GradedElement::zero(model);
    if (j.contains("alphas"))
        for (const auto& a : j.at("alphas")) sd.alphas.push_back(element_from_json(model, a));
    return sd;
}

Json bivector_to_json(const LaurentBivector& b) {
    Json j;
    j["vars"] = b.vars;
    Json entries = Json::array();
    int n = int(b.vars.size());
    for (int i = 0; i < n; ++i)
        for (int l = i + 1; l < n; ++l)
            if (!b.q[i][l].is_zero())
                entries.push_back(Json::array({b.vars[i], b.vars[l], b.q[i][l].str()}));
    j["entries"] = std::move(entries);
    return j;
}

LaurentBivector bivector_from_json(const Json& j) {
    auto vars = j.at("vars").get<std::vector<std::string>>();
    LaurentBivector b = LaurentBivector::zero(vars);
    for (const auto& e : j.at("entries")) {
        if (!e.is_array() || e.size() != 3) throw ParseError("bivector entries are triples");
        b.set_entry(e.at(0).get<std::string>(), e.at(1).get<std::string>(),
                    LaurentPoly::parse(vars, e.at(2).get<std::string>()));
    }
    return b;
}

Json frame_to_json(const FrameData& fd) {
    Json j;
    j["vars"] = fd.vars;
    auto emit = [&](const LaurentMatrix& m) {
        Json rows = Json::array();
        for (const auto& row : m) {
            Json r = Json::array();
            for (const auto& p : row) r.push_back(p.str());
            rows.push_back(std::move(r));
        }
        return rows;
    };
    j["rho"] = emit(fd.rho);
    j["omega"] = emit(fd.omega);
    return j;
}

FrameData frame_from_json(const Json& j) {
    FrameData fd;
    fd.vars = j.at("vars").get<std::vector<std::string>>();
    auto read = [&](const Json& rows) {
        LaurentMatrix m;
        for (const auto& row : rows) {
            std::vector<LaurentPoly> r;
            for (const auto& p : row) r.push_back(LaurentPoly::parse(fd.vars, p.get<std::string>()));
            m.push_back(std::move(r));
        }
        return m;
    };
    fd.rho = read(j.at("rho"));
    fd.omega = read(j.at("omega"));
    return fd;
}

Json matrix_to_json(const ExactMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json r = Json::array();
        for (int c = 0; c < m.cols(); ++c) r.push_back(scalar_to_json(m.at(i, c)));
        rows.push_back(std::move(r));
    }
    return rows;
}

ExactMatrix matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("matrix JSON must be a non-empty array");
    int rows = int(j.size());
    int cols = int(j.at(0).size());
    ExactMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (int(j.at(i).size()) != cols) throw ParseError("ragged matrix JSON");
        for (int c = 0; c < cols; ++c) m.at(i, c) = scalar_from_json(j.at(i).at(c));
    }
    return m;
}

}  // namespace hsalg
