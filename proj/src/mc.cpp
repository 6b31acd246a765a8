#include "hsalg/mc.hpp"

#include <algorithm>
#include <sstream>

namespace hsalg {

void validate_splitting(const SplittingData& s) {
    if (!s.model) throw DomainError("splitting without model");
    if (s.k < 1) throw DomainError("jet order must be >= 1");
    if (int(s.etas.size()) != s.k - 1)
        throw DimensionError("splitting needs k-1 twisted forms, got " +
                             std::to_string(s.etas.size()));
    if (!s.a.is_zero()) {
        auto deg = s.a.degree();
        if (!deg || *deg != 1) throw DomainError("connection form must be homogeneous degree 1");
        if (!d(s.a).is_zero()) throw DomainError("connection form must be closed");
    }
    bool check_weights = s.model->has_weights() && !s.a.is_zero();
    for (int i = 1; i < s.k; ++i) {
        const GradedElement& e = s.eta(i);
        if (e.is_zero()) continue;
        auto deg = e.degree();
        if (!deg || *deg != 1)
            throw DomainError("eta_" + std::to_string(i) + " must be homogeneous degree 1");
        if (check_weights) {
            auto w = e.weight();
            if (!w || *w != -i)
                throw DomainError("eta_" + std::to_string(i) +
                                  " has inconsistent weight tag (expected " + std::to_string(-i) +
                                  ")");
        }
    }
}

McReport check_maurer_cartan(const SplittingData& s) {
    validate_splitting(s);
    McReport rep;
    rep.pass = true;
    for (int r = 1; r < s.k; ++r) {
        GradedElement res = twisted_d(s.eta(r), s.a, -r);
        for (int i = 1; i < r; ++i) {
            int j = r - i;
            // 1/2 (j - i) eta_i ^ eta_j summed over ordered pairs
            Scalar c = Scalar(Rational(j - i, 2));
            if (!c.is_zero()) res = res + wedge(s.eta(i), s.eta(j)) * c;
        }
        if (!res.is_zero()) rep.pass = false;
        rep.residuals.push_back(std::move(res));
    }
    return rep;
}

GradedElement extension_form(const SplittingData& s) {
    GradedElement e = GradedElement::zero(s.model);
    for (int i = 1; i < s.k; ++i) {
        int j = s.k - i;
        if (j < 1 || j > s.k - 1) continue;
        Scalar c = Scalar(Rational(j - i, 2));
        if (!c.is_zero()) e = e + wedge(s.eta(i), s.eta(j)) * c;
    }
    return e;
}

GradedElement extension_form_alt(const SplittingData& s) {
    GradedElement e = GradedElement::zero(s.model);
    for (int i = 1; 2 * i < s.k; ++i) {
        int j = s.k - i;
        if (j > s.k - 1) continue;
        e = e + wedge(s.eta(i), s.eta(j)) * Scalar(Rational(s.k - 2 * i));
    }
    return e;
}

ExtensionClassResult extension_class(const SplittingData& s) {
    McReport mc = check_maurer_cartan(s);
    if (!mc.pass) throw DomainError("extension class needs the closure system to hold");
    ExtensionClassResult res{extension_form(s)};
    res.closed = twisted_d(res.form, s.a, -s.k).is_zero();
    if (!res.closed) return res;
    res.cls = class_of_twisted(res.form, s.a, -s.k);
    res.nonzero_class = !res.cls.exact;
    return res;
}

// ---------------------------------------------------------------------------
// Staircase total complex

SkComplexBuild build_sk_complex(const SplittingData& s) {
    validate_splitting(s);
    const ModelPtr& m = s.model;
    int k = s.k;
    int top = m->max_degree();

    SkComplexBuild out;
    out.data = s;
    ChainComplex& cc = out.complex;
    for (int deg = 0; deg <= top; ++deg)
        cc.dims.push_back(int(m->degree_indices(deg).size()) * (k + 1));

    for (int deg = 0; deg < top; ++deg) {
        int src = int(m->degree_indices(deg).size());
        int dst = int(m->degree_indices(deg + 1).size());
        ExactMatrix big(dst * (k + 1), src * (k + 1));
        ExactMatrix dmat = m->diff_matrix(deg);
        ExactMatrix amat = s.a.is_zero() ? ExactMatrix(dst, src) : m->wedge_matrix(s.a, deg);
        std::vector<ExactMatrix> emat{size_t(k), ExactMatrix{}};
        for (int i = 1; i < k; ++i)
            if (!s.eta(i).is_zero()) emat[i] = m->wedge_matrix(s.eta(i), deg);

        for (int r = 0; r <= k; ++r) {
            // diagonal block: d - r a^
            for (int c = 0; c < src; ++c)
                for (int rr = 0; rr < dst; ++rr) {
                    Scalar v = dmat.at(rr, c);
                    if (r != 0 && !s.a.is_zero()) v -= Scalar(Rational(r)) * amat.at(rr, c);
                    if (!v.is_zero()) big.at(r * dst + rr, r * src + c) = v;
                }
            // staircase blocks: (i - r) eta_i into weight r - i
            for (int i = 1; i < r; ++i) {
                if (s.eta(i).is_zero()) continue;
                int tgt = r - i;
                Scalar f = Scalar(Rational(i - r));
                for (int c = 0; c < src; ++c)
                    for (int rr = 0; rr < dst; ++rr) {
                        const Scalar& v = emat[i].at(rr, c);
                        if (!v.is_zero()) big.at(tgt * dst + rr, r * src + c) += f * v;
                    }
            }
        }
        cc.maps.push_back(std::move(big));
    }

    std::string witness;
    out.d2_zero = cc.check_d2(&witness);
    out.witness = witness;
    return out;
}

std::vector<int> sk_cohomology_dims(const SkComplexBuild& sk) {
    return sk.complex.cohomology_dims();
}

FiltrationPage filtration_e1(const SkComplexBuild& sk) {
    const SplittingData& s = sk.data;
    const ModelPtr& m = s.model;
    int k = s.k;
    int top = m->max_degree();

    FiltrationPage page;
    page.k = k;
    for (int r = 0; r <= k; ++r) {
        // associated-graded differential = the diagonal block of the total map
        ChainComplex cc;
        for (int deg = 0; deg <= top; ++deg)
            cc.dims.push_back(int(m->degree_indices(deg).size()));
        for (int deg = 0; deg < top; ++deg) {
            int src = int(m->degree_indices(deg).size());
            int dst = int(m->degree_indices(deg + 1).size());
            ExactMatrix blk(dst, src);
            const ExactMatrix& big = sk.complex.maps[deg];
            for (int c = 0; c < src; ++c)
                for (int rr = 0; rr < dst; ++rr) blk.at(rr, c) = big.at(r * dst + rr, r * src + c);
            cc.maps.push_back(std::move(blk));
        }
        page.columns.push_back(cc.cohomology_dims());
    }
    return page;
}

std::vector<int> twisted_column_dims(const SplittingData& s, int r) {
    return s.model->twisted_complex(s.a, r).cohomology_dims();
}

// ---------------------------------------------------------------------------
// Restriction to the hypersurface and the Gysin identity

GysinReport restricted_complex(const SplittingData& s) {
    McReport mc = check_maurer_cartan(s);
    if (!mc.pass) throw DomainError("restricted complex needs the closure system to hold");
    const ModelPtr& m = s.model;
    int k = s.k;
    int top = m->max_degree();

    GysinReport rep;
    rep.ext = extension_form(s);

    // degree m part: Omega^m + Omega^{m-1} (weight k)
    ChainComplex cc;
    auto ndeg = [&](int deg) {
        return deg < 0 || deg > top ? 0 : int(m->degree_indices(deg).size());
    };
    for (int deg = 0; deg <= top + 1; ++deg) cc.dims.push_back(ndeg(deg) + ndeg(deg - 1));
    for (int deg = 0; deg <= top; ++deg) {
        int s0 = ndeg(deg), s1 = ndeg(deg - 1);
        int d0 = ndeg(deg + 1), d1 = ndeg(deg);
        ExactMatrix big(d0 + d1, s0 + s1);
        if (s0 > 0 && d0 > 0) {
            ExactMatrix dm = m->diff_matrix(deg);
            for (int c = 0; c < s0; ++c)
                for (int r = 0; r < d0; ++r) big.at(r, c) = dm.at(r, c);
        }
        if (s1 > 0) {
            // twisted differential on the shifted block
            ExactMatrix dm = m->diff_matrix(deg - 1);
            ExactMatrix am = s.a.is_zero() ? ExactMatrix(d1, s1) : m->wedge_matrix(s.a, deg - 1);
            for (int c = 0; c < s1; ++c)
                for (int r = 0; r < d1; ++r) {
                    Scalar v = dm.at(r, c);
                    if (!s.a.is_zero()) v -= Scalar(Rational(k)) * am.at(r, c);
                    if (!v.is_zero()) big.at(d0 + r, s0 + c) = v;
                }
            // gluing: (-1)^deg e ^ . from the shifted block into Omega^{deg+1}
            if (!rep.ext.is_zero() && d0 > 0) {
                ExactMatrix em = m->wedge_matrix(rep.ext, deg - 1);
                Scalar f = Scalar(Rational(deg % 2 ? -1 : 1));
                for (int c = 0; c < s1; ++c)
                    for (int r = 0; r < d0; ++r) {
                        const Scalar& v = em.at(r, c);
                        if (!v.is_zero()) big.at(r, s0 + c) += f * v;
                    }
            }
        }
        cc.maps.push_back(std::move(big));
    }
    std::string witness;
    if (!cc.check_d2(&witness)) throw Error("internal: restricted complex does not square to zero");
    rep.complex = cc;
    rep.dims = cc.cohomology_dims();

    // expected dims from the long exact sequence through e ^ .
    ComplexCohomology untwisted(m->as_complex());
    ComplexCohomology twisted(m->twisted_complex(s.a, k));
    // rank of e ^ . : H^j(weight k) -> H^{j+2}
    std::vector<int> rank_e(size_t(top) + 3, 0);
    for (int j = 0; j <= top; ++j) {
        const auto& reps = twisted.representatives(j);
        if (reps.empty() || j + 2 > top) continue;
        std::vector<std::vector<Scalar>> cols;
        for (const auto& r : reps) {
            GradedElement rep_el = m->from_degree_coords(m, j, r);
            GradedElement w = wedge(rep.ext, rep_el);
            ClassResult cr = untwisted.class_of(j + 2, m->degree_coords(w, j + 2));
            cols.push_back(cr.exact ? std::vector<Scalar>(untwisted.dims()[j + 2])
                                    : cr.coords);
        }
        if (!cols.empty() && untwisted.dims()[j + 2] >= 0) {
            ExactMatrix mm = from_columns(untwisted.dims()[j + 2], cols);
            rank_e[size_t(j)] = rank_of(mm);
        }
    }
    auto hW = [&](int j) { return j < 0 || j > top ? 0 : untwisted.dims()[j]; };
    auto hK = [&](int j) { return j < 0 || j > top ? 0 : twisted.dims()[j]; };
    auto rk = [&](int j) { return j < 0 || j > top ? 0 : rank_e[size_t(j)]; };
    rep.expected.resize(cc.dims.size());
    for (size_t i = 0; i < cc.dims.size(); ++i) {
        int ii = int(i);
        int ker = hK(ii - 1) - rk(ii - 1);
        int coker = hW(ii) - rk(ii - 2);
        rep.expected[i] = ker + coker;
    }
    rep.identity_holds = rep.expected == rep.dims;
    return rep;
}

// ---------------------------------------------------------------------------
// Symplectic data

std::string to_string(CheckStatus st) {
    switch (st) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        default: return "undecidable";
    }
}

bool SympReport::pass() const {
    return beta_closed && closure_pass && alpha_k_nonvanishing == CheckStatus::pass &&
           nondegenerate == CheckStatus::pass;
}

namespace {

// Coefficients of a 2-form in the wedge basis of the coframe, or nullopt when
// the form has components outside coframe products.
std::optional<ExactMatrix> coframe_pairing(const ModelPtr& m, const GradedElement& gamma) {
    const auto& cf = m->coframe();
    int n = int(cf.size());
    if (n == 0) return std::nullopt;
    std::vector<int> cfi;
    for (const auto& name : cf) cfi.push_back(m->require_index(name));

    std::vector<std::vector<Scalar>> cols;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            GradedElement w = wedge(GradedElement::basis(m, cfi[i]), GradedElement::basis(m, cfi[j]));
            cols.push_back(m->degree_coords(w, 2));
            pairs.push_back({i, j});
        }
    int rows = int(m->degree_indices(2).size());
    ExactMatrix wmat = from_columns(rows, cols);
    auto sol = solve_affine(wmat, m->degree_coords(gamma, 2));
    if (!sol) return std::nullopt;
    ExactMatrix g(n, n);
    for (size_t t = 0; t < pairs.size(); ++t) {
        g.at(pairs[t].first, pairs[t].second) = (*sol)[t];
        g.at(pairs[t].second, pairs[t].first) = -(*sol)[t];
    }
    return g;
}

// Coefficient vector of a 1-form over the coframe; nullopt when unsupported.
std::optional<std::vector<Scalar>> coframe_coords(const ModelPtr& m, const GradedElement& x) {
    const auto& cf = m->coframe();
    if (cf.empty()) return std::nullopt;
    std::vector<Scalar> out(cf.size());
    std::vector<bool> used(m->dim(), false);
    for (size_t i = 0; i < cf.size(); ++i) {
        int idx = m->require_index(cf[i]);
        out[i] = x.coeffs()[idx];
        used[idx] = true;
    }
    for (int i = 0; i < m->dim(); ++i)
        if (!used[i] && !x.coeffs()[i].is_zero()) return std::nullopt;
    return out;
}

}  // namespace

SympReport check_symplectic_data(const SymplecticData& sd) {
    const SplittingData& s = sd.s;
    validate_splitting(s);
    if (int(sd.alphas.size()) != s.k + 1)
        throw DimensionError("symplectic data needs alpha_0..alpha_k");
    const ModelPtr& m = s.model;

    SympReport rep;
    rep.beta_closed = d(sd.beta).is_zero();
    rep.closure_pass = true;
    for (int p = 0; p <= s.k; ++p) {
        GradedElement res = twisted_d(sd.alpha(p), s.a, p);
        for (int r = p + 1; r <= s.k; ++r) {
            int i = r - p;
            if (i < 1 || i > s.k - 1) continue;
            res = res - wedge(s.eta(i), sd.alpha(r)) * Scalar(Rational(p));
        }
        if (!res.is_zero()) rep.closure_pass = false;
        rep.closure_residuals.push_back(std::move(res));
    }

    rep.gamma = sd.beta;
    for (int r = 1; r <= s.k - 1; ++r) rep.gamma = rep.gamma + wedge(sd.alpha(r), s.eta(r));

    auto ak = coframe_coords(m, sd.alpha(s.k));
    if (!ak) {
        rep.alpha_k_nonvanishing = CheckStatus::undecidable;
        rep.nondegenerate = CheckStatus::undecidable;
        return rep;
    }
    bool nonzero = false;
    for (const auto& c : *ak) nonzero = nonzero || !c.is_zero();
    rep.alpha_k_nonvanishing = nonzero ? CheckStatus::pass : CheckStatus::fail;
    if (!nonzero) {
        rep.nondegenerate = CheckStatus::fail;
        return rep;
    }

    auto g = coframe_pairing(m, rep.gamma);
    if (!g) {
        rep.nondegenerate = CheckStatus::undecidable;
        return rep;
    }
    // kernel of alpha_k inside the frame dual to the coframe
    int n = int(ak->size());
    ExactMatrix row(1, n);
    for (int i = 0; i < n; ++i) row.at(0, i) = (*ak)[i];
    auto kern = solve_linear(row).kernel;
    ExactMatrix pairing(int(kern.size()), int(kern.size()));
    for (size_t a = 0; a < kern.size(); ++a)
        for (size_t b = 0; b < kern.size(); ++b) {
            Scalar v;
            for (int i = 0; i < n; ++i) {
                if (kern[a][i].is_zero()) continue;
                for (int j = 0; j < n; ++j)
                    if (!kern[b][j].is_zero() && !g->at(i, j).is_zero())
                        v += kern[a][i] * g->at(i, j) * kern[b][j];
            }
            pairing.at(int(a), int(b)) = v;
        }
    rep.pairing = pairing;
    rep.nondegenerate = (pairing.rows() % 2 == 0 && !det(pairing).is_zero())
                            ? CheckStatus::pass
                            : CheckStatus::fail;
    return rep;
}

VariationResult symplectic_variation(const SymplecticData& sd) {
    SympReport rep = check_symplectic_data(sd);
    if (!rep.beta_closed || !rep.closure_pass)
        throw DomainError("symplectic closure system fails; variation undefined");
    const ModelPtr& m = sd.s.model;

    auto ak = coframe_coords(m, sd.alpha(sd.s.k));
    if (!ak) throw DomainError("foliated restriction needs a coframe model");
    int support = -1;
    for (size_t i = 0; i < ak->size(); ++i) {
        if ((*ak)[i].is_zero()) continue;
        if (support >= 0)
            throw DomainError(
                "foliated restriction needs alpha_k proportional to a single coframe element");
        support = int(i);
    }
    if (support < 0) throw DomainError("alpha_k vanishes; no foliation");

    GradedElement gen = GradedElement::basis(m, m->require_index(m->coframe()[support]));
    VariationResult out;
    out.quotient = quotient_by_ideal(m, gen);
    if (!out.quotient.project(sd.s.a).is_zero())
        throw DomainError("connection form does not vanish on the leaves; variation undefined");
    out.omega_f = out.quotient.project(rep.gamma);
    out.var = out.quotient.project(-extension_form(sd.s));
    out.omega_f_class = class_of(out.omega_f);
    out.var_class = class_of(out.var);
    out.var_nonzero = !out.var_class.exact;
    return out;
}

SplittingData deform_family(const SplittingData& s, const Rational& scale) {
    SplittingData out = s;
    Rational p(1);
    for (int i = 1; i < s.k; ++i) {
        p *= scale;
        out.etas[size_t(i) - 1] = s.eta(i) * Scalar(p);
    }
    return out;
}

DeformReport deform_report(const SplittingData& s, const Rational& scale) {
    DeformReport rep;
    rep.scaled = deform_family(s, scale);
    rep.mc_pass = check_maurer_cartan(rep.scaled).pass;
    rep.ext_base = extension_form(s);
    rep.ext_scaled = extension_form(rep.scaled);
    rep.homogeneity = rep.ext_scaled == rep.ext_base * Scalar(scale.pow(s.k));
    return rep;
}

GradedElement deformed_leaf_form(const SplittingData& s, const GradedElement& base_form,
                                 const Rational& scale) {
    return base_form - extension_form(s) * Scalar(scale.pow(s.k));
}

}  // namespace hsalg
