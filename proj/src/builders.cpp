#include "hsalg/builders.hpp"

#include <functional>
#include <map>

namespace hsalg {

namespace {

std::string x_name(int i) {
    return "x" + std::to_string(i);
}

// dx_r = sum over p < q, p + q = r of (p - q) x_p x_q, generators >= lo
std::vector<std::pair<std::vector<int>, Scalar>> ce_gen_diff(int r, int lo) {
    std::vector<std::pair<std::vector<int>, Scalar>> out;
    for (int p = lo; 2 * p < r; ++p) {
        int q = r - p;
        if (q < lo || p < lo) continue;
        out.push_back({{p, q}, Scalar(Rational(p - q))});
    }
    return out;
}

struct CombinedBuilder {
    int k;
    int lo;  // first x index (0 or 1)
    std::vector<std::vector<int>> subsets;
    std::map<std::vector<int>, int> subset_pos;
    // basis layout: pure monomial (S) at index set_base + pos(S);
    // (S, t_r) at t_base(r) + pos(S)
    int nsub = 0;

    int idx_pure(const std::vector<int>& s) const { return subset_pos.at(s); }
    int idx_t(const std::vector<int>& s, int r) const {
        return nsub * (r + 1) + subset_pos.at(s);
    }

    static int merge_sign(const std::vector<int>& a, const std::vector<int>& b,
                          std::vector<int>& out) {
        out.clear();
        int inversions = 0;
        size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i] == b[j]) return 0;
            if (a[i] < b[j]) {
                out.push_back(a[i++]);
            } else {
                inversions += int(a.size() - i);
                out.push_back(b[j++]);
            }
        }
        while (i < a.size()) out.push_back(a[i++]);
        while (j < b.size()) out.push_back(b[j++]);
        return inversions % 2 ? -1 : 1;
    }

    ModelPtr build() {
        for (size_t size = 0; size <= size_t(k - lo); ++size) {
            std::vector<int> cur;
            std::function<void(int)> rec = [&](int start) {
                if (cur.size() == size) {
                    subsets.push_back(cur);
                    return;
                }
                for (int i = start; i < k; ++i) {
                    cur.push_back(i);
                    rec(i + 1);
                    cur.pop_back();
                }
            };
            rec(lo);
        }
        nsub = int(subsets.size());
        for (int i = 0; i < nsub; ++i) subset_pos[subsets[i]] = i;
        check_model_dim(size_t(nsub) * (k + 2));

        std::vector<BasisElement> basis;
        auto mono_name = [&](const std::vector<int>& s) {
            std::string n;
            for (int gi : s) {
                if (!n.empty()) n += "^";
                n += x_name(gi);
            }
            return n;
        };
        for (const auto& s : subsets) {
            BasisElement be;
            be.name = s.empty() ? "1" : mono_name(s);
            be.degree = int(s.size());
            for (int gi : s) be.weight -= gi;
            basis.push_back(be);
        }
        for (int r = 0; r <= k; ++r) {
            for (const auto& s : subsets) {
                BasisElement be;
                std::string base = mono_name(s);
                be.name = (base.empty() ? "" : base + "^") + "t" + std::to_string(r);
                be.degree = int(s.size()) + 1;
                be.weight = -r;
                for (int gi : s) be.weight -= gi;
                basis.push_back(be);
            }
        }

        auto mdl = std::make_shared<FiniteCdga>(0, basis, idx_pure({}));
        std::vector<int> merged;

        // products of pure monomials
        for (int i = 0; i < nsub; ++i)
            for (int j = 0; j < nsub; ++j) {
                if (subsets[i].empty() || subsets[j].empty()) continue;
                int sign = merge_sign(subsets[i], subsets[j], merged);
                if (sign == 0) continue;
                mdl->set_product(idx_pure(subsets[i]), idx_pure(subsets[j]),
                                 {{idx_pure(merged), Scalar(Rational(sign))}});
            }

        // pure monomial times t element, both orders
        for (int i = 0; i < nsub; ++i)
            for (int j = 0; j < nsub; ++j) {
                int sign = merge_sign(subsets[i], subsets[j], merged);
                if (sign == 0) continue;
                for (int r = 0; r <= k; ++r) {
                    if (!subsets[i].empty())
                        mdl->set_product(idx_pure(subsets[i]), idx_t(subsets[j], r),
                                         {{idx_t(merged, r), Scalar(Rational(sign))}});
                    if (!subsets[j].empty()) {
                        // move t past x_Sj: degree |Sj| sign
                        int s2 = subsets[j].size() % 2 ? -sign : sign;
                        mdl->set_product(idx_t(subsets[i], r), idx_pure(subsets[j]),
                                         {{idx_t(merged, r), Scalar(Rational(s2))}});
                    }
                }
            }

        // t_s * t_r staircase, extended over monomial coefficients
        for (int i = 0; i < nsub; ++i)
            for (int j = 0; j < nsub; ++j) {
                int sign0 = merge_sign(subsets[i], subsets[j], merged);
                if (sign0 == 0) continue;
                std::vector<int> st = merged;
                for (int s = 0; s <= k; ++s)
                    for (int r = 0; r <= k; ++r) {
                        if (s == r) continue;
                        int a = std::min(s, r), b = std::max(s, r);
                        int flip = s > r ? -1 : 1;
                        int base = (subsets[j].size() % 2 ? -1 : 1) * sign0 * flip;
                        std::map<int, Scalar> acc;
                        for (int t = std::max(a, 1); t <= b - 1; ++t) {
                            if (t < lo) continue;
                            // x_t joins the monomial part
                            std::vector<int> with_t;
                            int s3 = merge_sign(st, {t}, with_t);
                            if (s3 == 0) continue;
                            acc[idx_t(with_t, a + b - t)] += Scalar(Rational(base * s3));
                        }
                        SparseVec row;
                        for (const auto& [idx, c] : acc)
                            if (!c.is_zero()) row.push_back({idx, c});
                        if (!row.empty())
                            mdl->set_product(idx_t(subsets[i], s), idx_t(subsets[j], r),
                                             std::move(row));
                    }
            }

        // differential
        std::vector<std::vector<std::pair<std::vector<int>, Scalar>>> gen_diffs(k);
        for (int r = lo; r < k; ++r) gen_diffs[r] = ce_gen_diff(r, lo);

        auto mono_diff = [&](const std::vector<int>& S) {
            std::map<int, Scalar> acc;  // pure-monomial indices
            for (size_t j = 0; j < S.size(); ++j) {
                std::vector<int> rest;
                for (size_t l = 0; l < S.size(); ++l)
                    if (l != j) rest.push_back(S[l]);
                int outer = j % 2 ? -1 : 1;
                for (const auto& [pair_idx, coeff] : gen_diffs[S[j]]) {
                    std::vector<int> m;
                    int sgn = merge_sign(pair_idx, rest, m);
                    if (sgn == 0) continue;
                    acc[idx_pure(m)] += coeff * Scalar(Rational(sgn * outer));
                }
            }
            return acc;
        };

        for (int i = 0; i < nsub; ++i) {
            auto acc = mono_diff(subsets[i]);
            SparseVec row;
            for (const auto& [idx, c] : acc)
                if (!c.is_zero()) row.push_back({idx, c});
            mdl->set_diff(idx_pure(subsets[i]), std::move(row));
        }

        // d(x_S t_r) = d(x_S) t_r + (-1)^{|S|} x_S d(t_r),
        // d(t_r) = sum_{i}(i - r) x_i t_{r-i}
        for (int i = 0; i < nsub; ++i) {
            const auto& S = subsets[i];
            for (int r = 0; r <= k; ++r) {
                std::map<int, Scalar> acc;
                for (const auto& [idx, c] : mono_diff(S)) {
                    // translate pure index to the same monomial with t_r
                    acc[idx_t(subsets[idx], r)] += c;
                }
                int sgn_s = S.size() % 2 ? -1 : 1;
                for (int t = lo; t <= r - 1 && t < k; ++t) {
                    std::vector<int> m;
                    int s3 = merge_sign(S, {t}, m);
                    if (s3 == 0) continue;
                    acc[idx_t(m, r - t)] += Scalar(Rational((t - r) * sgn_s * s3));
                }
                SparseVec row;
                for (const auto& [idx, c] : acc)
                    if (!c.is_zero()) row.push_back({idx, c});
                mdl->set_diff(idx_t(S, r), std::move(row));
            }
        }

        mdl->finalize();
        return mdl;
    }
};

}  // namespace

ModelPtr build_ce(int k, CeVariant variant) {
    if (k < 1) throw DomainError("jet order must be >= 1");
    int lo = variant == CeVariant::full ? 0 : 1;
    std::vector<std::string> names;
    std::vector<long> weights;
    std::vector<std::vector<std::pair<std::vector<int>, Scalar>>> diffs;
    for (int i = lo; i < k; ++i) {
        names.push_back(x_name(i));
        weights.push_back(-i);
        // generator indices in ce_gen_diff are absolute; shift to local
        std::vector<std::pair<std::vector<int>, Scalar>> dr;
        for (auto& [pr, c] : ce_gen_diff(i, lo)) dr.push_back({{pr[0] - lo, pr[1] - lo}, c});
        diffs.push_back(std::move(dr));
    }
    std::vector<std::string> coframe = names;  // right-invariant coframe
    return make_exterior_model(0, names, weights, diffs, coframe);
}

ULambda build_u_lambda(int k, long lambda) {
    ULambda u;
    u.model = build_ce(k, CeVariant::full);
    u.x0 = GradedElement::basis(u.model, u.model->require_index("x0"));
    u.lambda = lambda;
    return u;
}

ModelPtr build_sk(int k) {
    if (k < 1) throw DomainError("jet order must be >= 1");
    CombinedBuilder b{k, 0};
    return b.build();
}

ModelPtr build_c_theta(int k) {
    if (k < 1) throw DomainError("jet order must be >= 1");
    CombinedBuilder b{k, 1};
    return b.build();
}

GradedElement sk_t_prime(ModelPtr sk_model, int i) {
    GradedElement e = GradedElement::basis(sk_model, sk_model->require_index("t" + std::to_string(i)));
    if (i == 0) {
        auto x0 = sk_model->index_of("x0");
        if (!x0) throw DomainError("model has no x0 generator");
        e.coeffs()[*x0] += Scalar(1);
    }
    return e;
}

UniversalSymplectic universal_symplectic(int n) {
    if (n < 0) throw DomainError("n must be >= 0");
    int k = 2 * n + 1;
    UniversalSymplectic res;
    res.n = n;
    res.model = build_sk(k);
    const ModelPtr& m = res.model;

    res.varpi = GradedElement::zero(m);
    for (int i = 0; i <= 2 * n; ++i) {
        std::string name = (i == 0 ? std::string("x0^t") + std::to_string(k)
                                   : x_name(i) + "^t" + std::to_string(k - i));
        res.varpi.coeffs()[m->require_index(name)] += Scalar(Rational(i - 1 - 2 * n));
    }

    res.gamma = GradedElement::zero(m);
    for (int i = 1; 2 * i < k; ++i) {
        // combined coefficient of x_i ^ x_{k-i}
        res.gamma.coeffs()[m->require_index(x_name(i) + "^" + x_name(k - i))] +=
            Scalar(Rational(2 * i - 1 - 2 * n));
    }

    res.alpha_top = GradedElement::zero(m);
    res.alpha_top.coeffs()[m->require_index("x0^t" + std::to_string(k))] =
        Scalar(Rational(-(2 * n + 1)));

    res.pairing = ExactMatrix(2 * n, 2 * n);
    for (int i = 1; i <= 2 * n; ++i) {
        int j = k - i;
        if (i < j) {
            Scalar c = Scalar(Rational(2 * i - 1 - 2 * n));
            res.pairing.at(i - 1, j - 1) = c;
            res.pairing.at(j - 1, i - 1) = -c;
        }
    }
    res.nondegenerate = !det(res.pairing).is_zero();
    return res;
}

}  // namespace hsalg
