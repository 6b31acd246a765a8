#include <doctest.h>

#include <random>

#include "hsalg/matrix.hpp"

using namespace hsalg;

namespace {

ExactMatrix from_ints(const std::vector<std::vector<long>>& rows) {
    ExactMatrix m(int(rows.size()), int(rows[0].size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) m.at(int(i), int(j)) = Scalar(rows[i][j]);
    return m;
}

// fraction-free rank over the integers (Bareiss), used as an independent
// oracle against the rational row reduction
int bareiss_rank(const ExactMatrix& input) {
    int n = input.rows(), m = input.cols();
    std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(m));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            Rational r = input.at(i, j).to_rational();
            REQUIRE(r.is_integer());
            a[i][j] = r.num();
        }
    BigInt prev = 1;
    int row = 0;
    for (int col = 0; col < m && row < n; ++col) {
        int p = -1;
        for (int i = row; i < n; ++i)
            if (a[i][col] != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(a[p], a[row]);
        for (int i = row + 1; i < n; ++i) {
            for (int j = col + 1; j < m; ++j)
                a[i][j] = (a[row][col] * a[i][j] - a[i][col] * a[row][j]) / prev;
            a[i][col] = 0;
        }
        prev = a[row][col];
        ++row;
    }
    return row;
}

}  // namespace

TEST_CASE("rank and kernel basics") {
    ExactMatrix z(2, 3);
    auto rz = solve_linear(z);
    CHECK(rz.rank == 0);
    CHECK(rz.kernel.size() == 3);

    auto ri = solve_linear(ExactMatrix::identity(4));
    CHECK(ri.rank == 4);
    CHECK(ri.kernel.empty());
}

TEST_CASE("hyperbolic block minus its eigenvalue has a kernel line") {
    // [[2,1],[1,1]] - (3+sqrt5)/2 over Q(sqrt5)
    ExactMatrix g = from_ints({{2, 1}, {1, 1}});
    Scalar r(Rational(3, 2), Rational(1, 2), 5);
    ExactMatrix shifted = g - ExactMatrix::identity(2) * r;
    auto res = solve_linear(shifted);
    CHECK(res.rank == 1);
    CHECK(res.kernel.size() == 1);
    // kernel vectors satisfy M v = 0 exactly
    auto v = res.kernel[0];
    auto mv = shifted.apply(v);
    for (const auto& s : mv) CHECK(s.is_zero());
}

TEST_CASE("affine solving") {
    ExactMatrix id = ExactMatrix::identity(3);
    std::vector<Scalar> b{Scalar(1), Scalar(Rational(2, 3)), Scalar(-5)};
    auto x = solve_affine(id, b);
    REQUIRE(x);
    CHECK(*x == b);

    ExactMatrix z(2, 2);
    CHECK(!solve_affine(z, {Scalar(1), Scalar(0)}));

    ExactMatrix row(1, 2);
    row.at(0, 0) = Scalar(1);
    row.at(0, 1) = Scalar(1);
    auto u = solve_affine(row, {Scalar(2)});
    REQUIRE(u);
    CHECK((*u)[0] + (*u)[1] == Scalar(2));
}

TEST_CASE("rational row reduction agrees with fraction-free elimination") {
    std::mt19937_64 rng(20240517);
    std::uniform_int_distribution<int> dim(1, 6), val(-4, 4);
    for (int trial = 0; trial < 120; ++trial) {
        int n = dim(rng), m = dim(rng);
        ExactMatrix a(n, m);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < m; ++j) a.at(i, j) = Scalar(val(rng));
        CHECK(rank_of(a) == bareiss_rank(a));
        // exact kernel
        for (const auto& v : solve_linear(a).kernel) {
            for (const auto& s : a.apply(v)) CHECK(s.is_zero());
        }
    }
}

TEST_CASE("determinant and inverse") {
    ExactMatrix g = from_ints({{2, 1}, {1, 1}});
    CHECK(det(g) == Scalar(1));
    auto inv = inverse(g);
    REQUIRE(inv);
    CHECK(*inv * g == ExactMatrix::identity(2));
    CHECK(det(from_ints({{1, 2}, {2, 4}})) == Scalar(0));
    CHECK(!inverse(from_ints({{1, 2}, {2, 4}})));
}

TEST_CASE("kronecker product shape and determinant") {
    ExactMatrix g = from_ints({{2, 1}, {1, 1}});
    ExactMatrix k = kronecker(g, g);
    CHECK(k.rows() == 4);
    CHECK(det(k) == Scalar(1));
}
