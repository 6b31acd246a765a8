// Randomized property suites shared by the property-test binary and the
// acceptance gate. Every suite runs at least 200 exact cases with a fixed
// seed and returns false on the first violation.

#pragma once

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hsalg/builders.hpp"
#include "hsalg/jet.hpp"
#include "hsalg/registry.hpp"

namespace hsalg::suites {

constexpr int kCases = 200;

inline Rational random_rat(std::mt19937_64& rng, int span = 3) {
    std::uniform_int_distribution<int> num(-span, span), den(1, span);
    return Rational(num(rng), den(rng));
}

inline JetPoly random_jet(std::mt19937_64& rng, int k, bool unipotent = false) {
    std::vector<Rational> c(static_cast<size_t>(k), Rational(0));
    c[0] = unipotent ? Rational(1) : Rational(0);
    while (c[0].is_zero()) c[0] = random_rat(rng);
    for (int i = 1; i < k; ++i) c[size_t(i)] = random_rat(rng);
    return JetPoly(k, std::move(c));
}

inline JetVectorField random_field(std::mt19937_64& rng, int k, bool nilpotent) {
    std::vector<Rational> c(static_cast<size_t>(k), Rational(0));
    for (int i = nilpotent ? 1 : 0; i < k; ++i) c[size_t(i)] = random_rat(rng);
    return JetVectorField(k, std::move(c));
}

inline GradedElement random_degree1(std::mt19937_64& rng, const ModelPtr& m, long weight,
                                    bool use_weight) {
    GradedElement e = GradedElement::zero(m);
    for (int i = 0; i < m->dim(); ++i) {
        if (m->elem(i).degree != 1) continue;
        if (use_weight && m->elem(i).weight != weight) continue;
        e.coeffs()[i] = Scalar(random_rat(rng, 2));
    }
    return e;
}

// truncated polynomial power oracle, independent of the jet module: the
// z-degree-indexed coefficients of (g)^power with g given by coefficients of
// z^1..z^k
inline std::vector<Rational> truncated_power(const std::vector<Rational>& g, int power, int top) {
    std::vector<Rational> acc(static_cast<size_t>(top) + 1, Rational(0));
    acc[0] = Rational(1);
    for (int p = 0; p < power; ++p) {
        std::vector<Rational> next(static_cast<size_t>(top) + 1, Rational(0));
        for (int i = 0; i <= top; ++i) {
            if (acc[size_t(i)].is_zero()) continue;
            for (int j = 1; i + j <= top && j <= int(g.size()); ++j)
                next[size_t(i + j)] += acc[size_t(i)] * g[size_t(j - 1)];
        }
        acc = std::move(next);
    }
    return acc;
}

inline bool group_axioms(std::string& msg) {
    std::mt19937_64 rng(1001);
    for (int t = 0; t < kCases; ++t) {
        int k = 1 + int(rng() % 8);
        JetPoly f = random_jet(rng, k), g = random_jet(rng, k), h = random_jet(rng, k);
        if (!(compose(compose(f, g), h) == compose(f, compose(g, h))) ||
            !(compose(f, JetPoly::identity(k)) == f) ||
            !(compose(JetPoly::identity(k), f) == f) ||
            !(compose(f, invert(f)) == JetPoly::identity(k)) ||
            !(compose(invert(f), f) == JetPoly::identity(k))) {
            msg = "group axiom failed at case " + std::to_string(t);
            return false;
        }
    }
    msg = std::to_string(kCases) + " cases";
    return true;
}

inline bool projection_homomorphism(std::string& msg) {
    std::mt19937_64 rng(1002);
    for (int t = 0; t < kCases; ++t) {
        int k = 2 + int(rng() % 5);
        int m = 1 + int(rng() % k);
        JetPoly f = random_jet(rng, k), g = random_jet(rng, k);
        if (!(project(compose(f, g), m) == compose(project(f, m), project(g, m))) ||
            !(project(invert(f), m) == invert(project(f, m)))) {
            msg = "projection failed at case " + std::to_string(t);
            return false;
        }
    }
    msg = std::to_string(kCases) + " cases";
    return true;
}

inline bool exp_log_inverse(std::string& msg) {
    std::mt19937_64 rng(1003);
    for (int t = 0; t < kCases; ++t) {
        int k = 2 + int(rng() % 5);
        JetVectorField x = random_field(rng, k, true);
        JetPoly f = random_jet(rng, k, true);
        if (!(log_jet(exp_flow(x)) == x) || !(exp_flow(log_jet(f)) == f)) {
            msg = "exp/log failed at case " + std::to_string(t);
            return false;
        }
    }
    msg = std::to_string(kCases) + " cases";
    return true;
}

inline bool cocycle_identity(std::string& msg) {
    std::mt19937_64 rng(1004);
    for (int t = 0; t < kCases; ++t) {
        int k = 1 + int(rng() % 6);
        JetPoly f = random_jet(rng, k), g = random_jet(rng, k), h = random_jet(rng, k);
        Rational uf = f.c[0].pow(-k);
        Rational lhs = uf * extension_cocycle(g, h) - extension_cocycle(compose(f, g), h) +
                       extension_cocycle(f, compose(g, h)) - extension_cocycle(f, g);
        if (!(lhs == Rational(0))) {
            msg = "cocycle identity failed at case " + std::to_string(t);
            return false;
        }
    }
    msg = std::to_string(kCases) + " cases";
    return true;
}

inline bool invariant_coeffs_vs_power_oracle(std::string& msg) {
    std::mt19937_64 rng(1005);
    for (int t = 0; t < kCases; ++t) {
        int k = 2 + int(rng() % 6);  // up to 7
        int r = 1 + int(rng() % (k - 1));
        JetPoly h = random_jet(rng, k, true);
        auto polys = right_invariant_coeffs(r, k);
        auto pow = truncated_power(h.c, r + 1, k + 1);
        for (int i = r; i < k; ++i)
            if (!(evaluate_at_jet(polys[size_t(i - r)], h) == pow[size_t(i + 1)])) {
                msg = "coefficient polynomial mismatch at case " + std::to_string(t);
                return false;
            }
    }
    msg = std::to_string(kCases) + " cases";
    return true;
}

inline bool twisted_module_dims(std::string& msg) {
    std::mt19937_64 rng(1006);
    for (int t = 0; t < kCases; ++t) {
        int k = 1 + int(rng() % 6);
        long lambda = long(rng() % 13) - 6;
        ULambda u = build_u_lambda(k, lambda);
        auto lhs = u.complex().cohomology_dims();

        auto ce = build_ce(k, CeVariant::unipotent);
        std::vector<std::vector<int>> by_degree(static_cast<size_t>(ce->max_degree()) + 1);
        for (int i = 0; i < ce->dim(); ++i)
            if (ce->elem(i).weight == -lambda) by_degree[size_t(ce->elem(i).degree)].push_back(i);
        ChainComplex sub;
        for (const auto& col : by_degree) sub.dims.push_back(int(col.size()));
        for (size_t dd = 0; dd + 1 < by_degree.size(); ++dd) {
            ExactMatrix m(int(by_degree[dd + 1].size()), int(by_degree[dd].size()));
            for (size_t c = 0; c < by_degree[dd].size(); ++c)
                for (const auto& [idx, v] : ce->diff(by_degree[dd][c]))
                    for (size_t rr = 0; rr < by_degree[dd + 1].size(); ++rr)
                        if (by_degree[dd + 1][rr] == idx) m.at(int(rr), int(c)) = v;
            sub.maps.push_back(std::move(m));
        }
        auto h = sub.cohomology_dims();
        for (size_t i = 0; i < lhs.size(); ++i) {
            int expect = (i < h.size() ? h[i] : 0) + (i >= 1 && i - 1 < h.size() ? h[i - 1] : 0);
            if (lhs[i] != expect) {
                msg = "dimension mismatch at k=" + std::to_string(k) +
                      " lambda=" + std::to_string(lambda);
                return false;
            }
        }
    }
    msg = std::to_string(kCases) + " cases";
    return true;
}

inline bool builder_axioms(std::string& msg) {
    int pairs = 0;
    for (int k = 1; k <= 6; ++k) {
        for (auto variant : {CeVariant::full, CeVariant::unipotent}) {
            auto m = build_ce(k, variant);
            if (!validate(*m, 0).ok()) {
                msg = "CE builder failed at k = " + std::to_string(k);
                return false;
            }
            pairs += m->dim() * m->dim();
        }
        for (auto* build : {&build_sk, &build_c_theta}) {
            auto m = (*build)(k);
            if (!validate(*m, 0).ok()) {
                msg = "combined builder failed at k = " + std::to_string(k);
                return false;
            }
            pairs += m->dim() * m->dim();
        }
    }
    msg = std::to_string(pairs) + " exhaustive basis pairs";
    return true;
}

inline bool closure_iff_square_zero(std::string& msg) {
    std::mt19937_64 rng(1007);
    auto heis = heisenberg_model();
    auto cat = cat_torus_model();
    auto genus = genus_model(2);
    int pass_count = 0, fail_count = 0;
    for (int t = 0; t < kCases; ++t) {
        SplittingData s;
        int which = int(rng() % 3);
        if (which == 0) {
            s.model = heis;
            s.a = GradedElement::zero(heis);
            s.k = 2 + int(rng() % 3);
            for (int i = 1; i < s.k; ++i) s.etas.push_back(random_degree1(rng, heis, 0, false));
        } else if (which == 1) {
            s.model = genus;
            s.a = GradedElement::zero(genus);
            s.k = 2 + int(rng() % 3);
            for (int i = 1; i < s.k; ++i) s.etas.push_back(random_degree1(rng, genus, 0, false));
        } else {
            s.model = cat;
            s.a = GradedElement::basis(cat, cat->require_index("alpha"));
            s.k = 3;
            s.etas.push_back(random_degree1(rng, cat, -1, true));
            s.etas.push_back(random_degree1(rng, cat, -2, true));
        }
        auto mc = check_maurer_cartan(s);
        auto sk = build_sk_complex(s);
        if (mc.pass != sk.d2_zero) {
            msg = "equivalence failed at case " + std::to_string(t);
            return false;
        }
        (mc.pass ? pass_count : fail_count) += 1;
    }
    if (pass_count == 0 || fail_count == 0) {
        msg = "sample did not cover both directions";
        return false;
    }
    std::ostringstream os;
    os << kCases << " cases (" << pass_count << " hold, " << fail_count << " fail)";
    msg = os.str();
    return true;
}

inline bool scaling_homogeneity(std::string& msg) {
    std::mt19937_64 rng(1008);
    std::vector<BuiltinModel> builtins;
    builtins.push_back(get_builtin("heisenberg"));
    builtins.push_back(get_builtin("cat-torus"));
    builtins.push_back(get_builtin("universal-U4"));
    builtins.push_back(get_builtin("universal-E3"));
    for (int t = 0; t < kCases; ++t) {
        const auto& b = builtins[size_t(rng() % builtins.size())];
        auto rep = deform_report(*b.splitting, random_rat(rng));
        if (!rep.mc_pass || !rep.homogeneity) {
            msg = "scaling failed at case " + std::to_string(t);
            return false;
        }
    }
    // k+2 distinct scale values pin the polynomial identity exactly
    auto h = get_builtin("heisenberg");
    for (long v = 0; v <= h.splitting->k + 1; ++v)
        if (!deform_report(*h.splitting, Rational(v)).homogeneity) {
            msg = "interpolation check failed at s = " + std::to_string(v);
            return false;
        }
    msg = std::to_string(kCases) + " cases plus interpolation";
    return true;
}

inline bool restriction_rank_identity(std::string& msg) {
    std::mt19937_64 rng(1009);
    int cases = 0;
    for (const char* name : {"heisenberg", "cat-torus", "universal-U3", "universal-U4",
                             "universal-E3", "universal-E5"}) {
        auto b = get_builtin(name);
        if (!restricted_complex(*b.splitting).identity_holds) {
            msg = std::string("identity failed on ") + name;
            return false;
        }
        ++cases;
    }
    while (cases < kCases) {
        int g = 1 + int(rng() % 3);
        std::vector<Rational> params;
        for (int i = 0; i < 4 * g; ++i) params.push_back(random_rat(rng, 2));
        auto b = get_builtin("genus-" + std::to_string(g), params);
        if (!restricted_complex(*b.splitting).identity_holds) {
            msg = "identity failed on a random surface datum";
            return false;
        }
        ++cases;
    }
    msg = std::to_string(cases) + " cases";
    return true;
}

struct Suite {
    const char* name;
    bool (*fn)(std::string&);
};

inline std::vector<Suite> all_suites() {
    return {
        {"group axioms", group_axioms},
        {"projection homomorphism", projection_homomorphism},
        {"exp/log inverse on the unipotent subgroup", exp_log_inverse},
        {"twisted 2-cocycle identity", cocycle_identity},
        {"invariant coefficients vs power oracle", invariant_coeffs_vs_power_oracle},
        {"twisted module dimension reduction", twisted_module_dims},
        {"builder differential axioms", builder_axioms},
        {"closure iff staircase squares to zero", closure_iff_square_zero},
        {"scaling homogeneity of the obstruction", scaling_homogeneity},
        {"restriction rank identity", restriction_rank_identity},
    };
}

}  // namespace hsalg::suites
