#include <doctest.h>

#include "hsalg/torus.hpp"

using namespace hsalg;

namespace {

ExactMatrix from_ints(const std::vector<std::vector<long>>& rows) {
    ExactMatrix m(int(rows.size()), int(rows[0].size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) m.at(int(i), int(j)) = Scalar(rows[i][j]);
    return m;
}

long binom(int n, int r) {
    if (r < 0 || r > n) return 0;
    long acc = 1;
    for (int i = 0; i < r; ++i) acc = acc * (n - i) / (i + 1);
    return acc;
}

}  // namespace

TEST_CASE("wedge power maps") {
    ExactMatrix g = cat_block();
    CHECK(wedge_power_map(g, 0) == ExactMatrix::identity(1));
    ExactMatrix top = wedge_power_map(g, 2);
    CHECK(top.rows() == 1);
    CHECK(top.at(0, 0) == Scalar(1));  // det = 1

    ExactMatrix a = from_ints({{1, 2, 0}, {0, 1, 0}, {0, 0, 1}});
    ExactMatrix w2 = wedge_power_map(a, 2);
    CHECK(w2.rows() == 3);
    CHECK(det(w2) == Scalar(1));
}

TEST_CASE("unimodularity is enforced") {
    CHECK_THROWS_AS(make_torus_monodromy(from_ints({{2, 0}, {0, 1}})), DomainError);
    ExactMatrix half(1, 1);
    half.at(0, 0) = Scalar(Rational(1, 2));
    CHECK_THROWS_AS(make_torus_monodromy(half), DomainError);
}

TEST_CASE("trivial bundle gives the product dimensions") {
    for (int n = 1; n <= 6; ++n) {
        TorusMonodromy tm = make_torus_monodromy(ExactMatrix::identity(n));
        for (int r = 0; r <= n + 1; ++r) {
            auto dims = twisted_dims(tm, Scalar(1), r);
            CHECK(dims.dim == binom(n, r) + binom(n, r - 1));
        }
        // a non-eigenvalue twist kills everything
        auto zero = twisted_dims(tm, Scalar(2), 1);
        CHECK(zero.dim == 0);
    }
}

TEST_CASE("hyperbolic block data reproduces the printed dimensions") {
    // pushforward with eigenvalue list rho^{+-1}, rho^{+-2}
    ExactMatrix g = cat_block();
    ExactMatrix a(4, 4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            a.at(i, j) = g.at(i, j);
        }
    ExactMatrix g2 = g * g;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) a.at(2 + i, 2 + j) = g2.at(i, j);
    TorusMonodromy tm = make_torus_monodromy(a);

    Scalar rho = cat_eigenvalue();
    CHECK(twisted_dims(tm, rho, 1).dim == 1);
    CHECK(twisted_dims(tm, rho * rho, 1).dim == 1);
    CHECK(twisted_dims(tm, rho * rho * rho, 2).dim == 1);
}

TEST_CASE("local system cohomology over the circle") {
    CHECK(local_system_cohomology(ExactMatrix::identity(3)) == std::pair<int, int>{3, 3});
    ExactMatrix two(1, 1);
    two.at(0, 0) = Scalar(2);
    CHECK(local_system_cohomology(two) == std::pair<int, int>{0, 0});
    CHECK(local_system_cohomology(cat_block()) == std::pair<int, int>{0, 0});
}

TEST_CASE("eigenspace bases over the quadratic field") {
    Scalar rho = cat_eigenvalue();
    auto basis = eigenspace_basis(cat_block(), rho);
    REQUIRE(basis.size() == 1);
    // the eigenvector is proportional to (phi, 1) with phi the golden ratio
    Scalar phi(Rational(1, 2), Rational(1, 2), 5);
    const auto& v = basis[0];
    CHECK(v[0] == phi * v[1]);

    CHECK(eigenspace_basis(cat_block(), Scalar(2)).empty());
    CHECK(eigenspace_basis(ExactMatrix::identity(3), Scalar(1)).size() == 3);
}

TEST_CASE("block-diagonal report") {
    auto rep = cat_map_report(1, 1);
    CHECK(rep.h1_l1 == 1);
    CHECK(rep.h1_l2 == 1);
    CHECK(rep.h2_l3 == 1);
    CHECK(rep.dim_e1 == 1);
    CHECK(rep.dim_e2 == 1);
    CHECK(rep.sphere_dim == 1);
    CHECK(rep.symmetric_under_inverse);
    CHECK(rep.rho_eig == "3/2+1/2*sqrt5");

    // cross-check the base case against the pure wedge-power path on the 4-torus
    ExactMatrix g = cat_block();
    ExactMatrix a(4, 4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) a.at(i, j) = g.at(i, j);
    ExactMatrix g2 = g * g;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) a.at(2 + i, 2 + j) = g2.at(i, j);
    TorusMonodromy tm = make_torus_monodromy(a);
    Scalar rho = cat_eigenvalue();
    CHECK(twisted_dims(tm, rho, 1).dim == rep.h1_l1);
    CHECK(twisted_dims(tm, rho * rho, 1).dim == rep.h1_l2);
    CHECK(twisted_dims(tm, rho * rho * rho, 2).dim == rep.h2_l3);

    for (int g1 = 1; g1 <= 3; ++g1)
        for (int g2b = 1; g2b <= 3; ++g2b) {
            auto r = cat_map_report(g1, g2b);
            CHECK(r.dim_e1 == g1);
            CHECK(r.dim_e2 == g2b);
            CHECK(r.sphere_dim == g1 + g2b - 1);
            CHECK(r.h2_l3 == g1 * g2b);
            CHECK(r.symmetric_under_inverse);
        }
}

TEST_CASE("eigenspaces of distinct eigenvalues are independent") {
    ExactMatrix g = cat_block();
    Scalar rho = cat_eigenvalue();
    Scalar rho_inv = Scalar(1) / rho;
    int total = int(eigenspace_basis(g, rho).size() + eigenspace_basis(g, rho_inv).size());
    CHECK(total <= 2);
    CHECK(total == 2);
}
