#include "hsalg/poisson.hpp"

#include "hsalg/jet.hpp"

namespace hsalg {

LaurentBivector LaurentBivector::zero(std::vector<std::string> vars) {
    LaurentBivector b;
    int n = int(vars.size());
    b.q = LaurentMatrix(n, std::vector<LaurentPoly>(n, LaurentPoly(vars)));
    b.vars = std::move(vars);
    return b;
}

int LaurentBivector::var_index(const std::string& v) const {
    for (size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == v) return int(i);
    throw DomainError("unknown coordinate '" + v + "'");
}

void LaurentBivector::set_entry(const std::string& vi, const std::string& vj,
                                const LaurentPoly& p) {
    int i = var_index(vi), j = var_index(vj);
    if (i == j && !p.is_zero()) throw DomainError("diagonal bivector entry must vanish");
    q[i][j] = p;
    q[j][i] = -p;
}

const LaurentPoly& LaurentBivector::entry(const std::string& vi, const std::string& vj) const {
    return q[var_index(vi)][var_index(vj)];
}

bool LaurentBivector::is_antisymmetric() const {
    int n = int(vars.size());
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            if (!(q[i][j] + q[j][i]).is_zero()) return false;
    return true;
}

JacobiResidual schouten_jacobi(const LaurentBivector& b) {
    int n = int(b.vars.size());
    JacobiResidual res;
    res.vars = b.vars;
    // precompute partials
    std::vector<std::vector<std::vector<LaurentPoly>>> dq(
        n, std::vector<std::vector<LaurentPoly>>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            dq[i][j].reserve(n);
            for (int l = 0; l < n; ++l) dq[i][j].push_back(b.q[i][j].derivative(b.vars[l]));
        }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                LaurentPoly acc(b.vars);
                for (int l = 0; l < n; ++l) {
                    acc = acc + b.q[l][i] * dq[j][k][l] + b.q[l][j] * dq[k][i][l] +
                          b.q[l][k] * dq[i][j][l];
                }
                if (!acc.is_zero()) res.components.push_back({i, j, k, acc});
            }
    return res;
}

LaurentBivector invert_form(const FrameData& fd) {
    int n = int(fd.omega.size());
    if (n == 0 || int(fd.rho.size()) != n)
        throw DimensionError("frame data needs square matrices of equal size");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!(fd.omega[i][j] + fd.omega[j][i]).is_zero())
                throw DomainError("form matrix must be antisymmetric");

    LaurentPoly dt = laurent_det(fd.omega);
    if (dt.is_zero()) throw DomainError("form matrix is singular");
    LaurentMatrix adj = laurent_adjugate(fd.omega);
    LaurentMatrix inv(n, std::vector<LaurentPoly>(n, LaurentPoly(fd.vars)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto qd = adj[i][j].exact_div(dt);
            if (!qd)
                throw DomainError("form inverse is not Laurent-polynomial (entry " +
                                  std::to_string(i) + "," + std::to_string(j) + ")");
            inv[i][j] = *qd;
        }
    LaurentMatrix q = laurent_mat_mul(laurent_mat_mul(fd.rho, inv), laurent_transpose(fd.rho));
    LaurentBivector out;
    out.vars = fd.vars;
    out.q = std::move(q);
    if (!out.is_antisymmetric()) throw Error("internal: pushforward bivector not antisymmetric");
    return out;
}

LaurentPoly bivector_pfaffian(const LaurentBivector& b) {
    if (b.vars.size() % 2 != 0) throw DimensionError("Pfaffian needs even dimension");
    return laurent_pfaffian(b.q);
}

int rank_drop_order(const LaurentBivector& b, const std::string& var) {
    LaurentPoly pf = bivector_pfaffian(b);
    if (pf.is_zero()) throw DomainError("Pfaffian vanishes identically");
    auto ord = pf.min_exponent(var);
    return *ord;
}

bool check_translation_invariance(const LaurentBivector& b,
                                  const std::vector<std::string>& vars) {
    for (const auto& v : vars) {
        int n = int(b.vars.size());
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (b.q[i][j].depends_on(v)) return false;
    }
    return true;
}

LaurentBivector intro_bracket() {
    std::vector<std::string> vars{"u", "x", "y", "t"};
    LaurentBivector b = LaurentBivector::zero(vars);
    b.set_entry("x", "y", LaurentPoly::parse(vars, "3*u^3"));
    b.set_entry("u", "x", LaurentPoly::parse(vars, "t^2*u^2"));
    b.set_entry("y", "u", LaurentPoly::parse(vars, "2*t*u^3"));
    b.set_entry("x", "t", LaurentPoly::parse(vars, "2*t^3*u"));
    b.set_entry("y", "t", LaurentPoly::parse(vars, "-t^2*u^2"));
    return b;
}

FrameData universal_frame_data(int k) {
    if (k < 1) throw DomainError("jet order must be >= 1");
    std::vector<std::string> vars;
    vars.push_back("u");
    for (int i = 1; i < k; ++i) vars.push_back("a" + std::to_string(i));
    vars.push_back("t");

    auto zero = LaurentPoly(vars);
    auto cst = [&](long c) { return LaurentPoly::constant(vars, Rational(c)); };
    auto var = [&](const std::string& v, int e = 1) { return LaurentPoly::monomial(vars, v, e); };

    int n = k + 1;  // frame indices 0..k
    FrameData fd;
    fd.vars = vars;
    fd.rho = LaurentMatrix(n, std::vector<LaurentPoly>(n, zero));
    fd.omega = LaurentMatrix(n, std::vector<LaurentPoly>(n, zero));

    // column 0: u du - sum i a_i d a_i + t dt  (the weighted radial frame member)
    fd.rho[0][0] = var("u");
    for (int i = 1; i < k; ++i) fd.rho[i][0] = var("a" + std::to_string(i)) * Rational(-i);
    fd.rho[k][0] = var("t");
    // columns r = 1..k-1: the right-invariant fields plus t^{r+1} dt
    for (int r = 1; r < k; ++r) {
        auto polys = right_invariant_coeffs(r, k);  // entries for a_r..a_{k-1}
        std::vector<std::string> avars = jet_coordinate_vars(k);
        for (int i = r; i < k; ++i) {
            // re-express in the frame variable list (a-vars plus u and t)
            LaurentPoly p(vars);
            for (const auto& [e, c] : polys[size_t(i - r)].terms()) {
                LaurentPoly::Exponents ee(vars.size(), 0);
                for (size_t vi = 0; vi < avars.size(); ++vi) ee[vi + 1] = e[vi];
                p.add_term(ee, c);
            }
            fd.rho[i][r] = p;
        }
        fd.rho[k][r] = var("t", r + 1);
    }
    fd.rho[k][k] = var("t", k + 1);

    // form matrix of d t_k in the frame: entries (i, j) for i < j <= k-1 are
    // (i - j) t^{i+j-k} when i + j >= k, row 0 pairs only with the last frame
    // member, and (j, k) entries are (j - k) t^j.
    fd.omega[0][k] = cst(-k);
    fd.omega[k][0] = cst(k);
    for (int i = 1; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            if (i + j < k) continue;
            fd.omega[i][j] = var("t", i + j - k) * Rational(i - j);
            fd.omega[j][i] = -fd.omega[i][j];
        }
    for (int j = 1; j < k; ++j) {
        fd.omega[j][k] = var("t", j) * Rational(j - k);
        fd.omega[k][j] = -fd.omega[j][k];
    }
    return fd;
}

}  // namespace hsalg
