#include "hsalg/torus.hpp"

#include <functional>

namespace hsalg {

TorusMonodromy make_torus_monodromy(const ExactMatrix& a) {
    if (a.rows() != a.cols()) throw DimensionError("monodromy matrix must be square");
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (!a.at(i, j).is_rational() || !a.at(i, j).rat_part().is_integer())
                throw DomainError("monodromy matrix must be integral");
        }
    Scalar dt = det(a);
    if (!(dt == Scalar(1) || dt == Scalar(-1)))
        throw DomainError("monodromy matrix must be unimodular (det = +-1)");
    TorusMonodromy tm;
    tm.n = a.rows();
    tm.a = a;
    return tm;
}

namespace {

std::vector<std::vector<int>> subsets_of_size(int n, int r) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        if (int(cur.size()) == r) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i < n; ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

Scalar minor_det(const ExactMatrix& a, const std::vector<int>& rows,
                 const std::vector<int>& cols) {
    int r = int(rows.size());
    ExactMatrix m(r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) m.at(i, j) = a.at(rows[i], cols[j]);
    return det(m);
}

}  // namespace

ExactMatrix wedge_power_map(const ExactMatrix& a, int r) {
    if (a.rows() != a.cols()) throw DimensionError("wedge power of non-square matrix");
    int n = a.rows();
    if (r < 0 || r > n) throw DimensionError("wedge power degree out of range");
    auto idx = subsets_of_size(n, r);
    ExactMatrix w(int(idx.size()), int(idx.size()));
    for (size_t col = 0; col < idx.size(); ++col)
        for (size_t row = 0; row < idx.size(); ++row)
            w.at(int(row), int(col)) = minor_det(a, idx[row], idx[col]);
    return w;
}

namespace {

// (dim ker, dim coker) of (M - mu I); equal for square matrices.
std::pair<int, int> eigen_defect(const ExactMatrix& m, const Scalar& mu) {
    ExactMatrix shifted = m - ExactMatrix::identity(m.rows()) * mu;
    int rank = rank_of(shifted);
    return {m.cols() - rank, m.rows() - rank};
}

}  // namespace

TwistedDims twisted_dims(const TorusMonodromy& tm, const Scalar& mu, int r) {
    if (mu.is_zero()) throw DomainError("twist parameter must be nonzero");
    if (r < 0 || r > tm.n + 1) throw DimensionError("degree out of range");
    TwistedDims out;
    if (r <= tm.n) out.kernel = eigen_defect(wedge_power_map(tm.a, r), mu).first;
    if (r >= 1 && r - 1 <= tm.n)
        out.cokernel = eigen_defect(wedge_power_map(tm.a, r - 1), mu).second;
    out.dim = out.kernel + out.cokernel;
    return out;
}

TwistedDims twisted_dims_explicit(const std::vector<ExactMatrix>& per_degree, const Scalar& mu,
                                  int r) {
    if (mu.is_zero()) throw DomainError("twist parameter must be nonzero");
    TwistedDims out;
    if (r >= 0 && r < int(per_degree.size()))
        out.kernel = eigen_defect(per_degree[size_t(r)], mu).first;
    if (r >= 1 && r - 1 < int(per_degree.size()))
        out.cokernel = eigen_defect(per_degree[size_t(r) - 1], mu).second;
    out.dim = out.kernel + out.cokernel;
    return out;
}

std::pair<int, int> local_system_cohomology(const ExactMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("monodromy matrix must be square");
    return eigen_defect(m, Scalar(1));
}

std::vector<std::vector<Scalar>> eigenspace_basis(const ExactMatrix& a, const Scalar& mu) {
    ExactMatrix shifted = a - ExactMatrix::identity(a.rows()) * mu;
    return solve_linear(shifted).kernel;
}

ExactMatrix cat_block() {
    ExactMatrix g(2, 2);
    g.at(0, 0) = Scalar(2);
    g.at(0, 1) = Scalar(1);
    g.at(1, 0) = Scalar(1);
    g.at(1, 1) = Scalar(1);
    return g;
}

Scalar cat_eigenvalue() {
    return Scalar(Rational(3, 2), Rational(1, 2), 5);
}

namespace {

ExactMatrix block_diag(const std::vector<ExactMatrix>& blocks) {
    int n = 0;
    for (const auto& b : blocks) n += b.rows();
    ExactMatrix m(n, n);
    int off = 0;
    for (const auto& b : blocks) {
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) m.at(off + i, off + j) = b.at(i, j);
        off += b.rows();
    }
    return m;
}

}  // namespace

CatMapReport cat_map_report(int g1, int g2) {
    if (g1 < 1 || g2 < 1) throw DomainError("genus parameters must be >= 1");
    CatMapReport rep;
    rep.g1 = g1;
    rep.g2 = g2;
    Scalar rho = cat_eigenvalue();
    rep.rho_eig = rho.str();
    Scalar rho2 = rho * rho;
    Scalar rho3 = rho2 * rho;

    ExactMatrix g = cat_block();
    ExactMatrix g_sq = g * g;
    std::vector<ExactMatrix> blocks;
    for (int i = 0; i < g1; ++i) blocks.push_back(g);
    for (int i = 0; i < g2; ++i) blocks.push_back(g_sq);
    ExactMatrix h1 = block_diag(blocks);  // pushforward on degree 1

    // degree-0 and degree-2 matrices of the product-of-surfaces fiber:
    // H^2 = H^2(S1) + H^1 (x) H^1 + H^2(S2), with trivial action on the two
    // volume classes, as realized by area-preserving maps
    ExactMatrix h0 = ExactMatrix::identity(1);
    ExactMatrix a1 = block_diag(std::vector<ExactMatrix>(size_t(g1), g));
    ExactMatrix a2 = block_diag(std::vector<ExactMatrix>(size_t(g2), g_sq));
    ExactMatrix h2 = block_diag({ExactMatrix::identity(1), kronecker(a1, a2),
                                 ExactMatrix::identity(1)});
    std::vector<ExactMatrix> per_degree{h0, h1, h2};

    rep.h1_l1 = twisted_dims_explicit(per_degree, rho, 1).dim;
    rep.h1_l2 = twisted_dims_explicit(per_degree, rho2, 1).dim;
    rep.h2_l3 = twisted_dims_explicit(per_degree, rho3, 2).dim;

    rep.dim_e1 = int(eigenspace_basis(h1, rho).size());
    rep.dim_e2 = int(eigenspace_basis(h1, rho2).size());
    rep.moduli_dim = rep.dim_e1 + rep.dim_e2;
    rep.sphere_dim = rep.moduli_dim - 1;

    Scalar rho_inv = Scalar(1) / rho;
    Scalar rho2_inv = Scalar(1) / rho2;
    Scalar rho3_inv = Scalar(1) / rho3;
    rep.symmetric_under_inverse =
        twisted_dims_explicit(per_degree, rho_inv, 1).dim == rep.h1_l1 &&
        twisted_dims_explicit(per_degree, rho2_inv, 1).dim == rep.h1_l2 &&
        twisted_dims_explicit(per_degree, rho3_inv, 2).dim == rep.h2_l3;
    return rep;
}

}  // namespace hsalg
