#include <doctest.h>

#include "hsalg/poisson.hpp"

using namespace hsalg;

TEST_CASE("constant antisymmetric bivectors are Poisson") {
    std::vector<std::string> vars{"x1", "x2", "x3", "x4"};
    auto b = LaurentBivector::zero(vars);
    b.set_entry("x1", "x2", LaurentPoly::constant(vars, Rational(1)));
    b.set_entry("x3", "x4", LaurentPoly::constant(vars, Rational(-7)));
    CHECK(schouten_jacobi(b).holds());
}

TEST_CASE("the displayed order-4 family bracket is Poisson") {
    auto b = intro_bracket();
    CHECK(b.is_antisymmetric());
    CHECK(schouten_jacobi(b).holds());
    CHECK(rank_drop_order(b, "t") == 4);
    CHECK(check_translation_invariance(b, {"x", "y"}));
    CHECK(!check_translation_invariance(b, {"u"}));
    CHECK(check_translation_invariance(b, {}));
    // the complementary factor of the Pfaffian does not vanish at t = 0
    LaurentPoly pf = bivector_pfaffian(b);
    CHECK(pf == LaurentPoly::parse(b.vars, "3*t^4*u^4"));
}

TEST_CASE("a generic linear bivector fails the Jacobi identity") {
    std::vector<std::string> vars{"x1", "x2", "x3"};
    auto b = LaurentBivector::zero(vars);
    b.set_entry("x1", "x2", LaurentPoly::monomial(vars, "x1", 1));
    b.set_entry("x1", "x3", LaurentPoly::monomial(vars, "x2", 1));
    auto res = schouten_jacobi(b);
    CHECK(!res.holds());
}

TEST_CASE("inverting the standard symplectic matrix") {
    std::vector<std::string> vars{"q", "p"};
    FrameData fd;
    fd.vars = vars;
    fd.rho = laurent_identity(vars, 2);
    fd.omega = LaurentMatrix(2, std::vector<LaurentPoly>(2, LaurentPoly(vars)));
    fd.omega[0][1] = LaurentPoly::constant(vars, Rational(1));
    fd.omega[1][0] = LaurentPoly::constant(vars, Rational(-1));
    auto q = invert_form(fd);
    // omega^{-1} = -omega for the standard 2x2 block
    CHECK(q.q[0][1] == LaurentPoly::constant(vars, Rational(-1)));
    CHECK(rank_drop_order(q, "q") == 0);
}

TEST_CASE("block-diagonal forms invert blockwise") {
    std::vector<std::string> vars{"a", "b", "c", "d"};
    FrameData fd;
    fd.vars = vars;
    fd.rho = laurent_identity(vars, 4);
    fd.omega = LaurentMatrix(4, std::vector<LaurentPoly>(4, LaurentPoly(vars)));
    auto set = [&](int i, int j, const char* s) {
        fd.omega[i][j] = LaurentPoly::parse(vars, s);
        fd.omega[j][i] = -fd.omega[i][j];
    };
    set(0, 1, "a");
    set(2, 3, "b^2");
    auto q = invert_form(fd);
    CHECK(q.q[0][2].is_zero());
    CHECK(q.q[0][3].is_zero());
    CHECK(q.q[1][2].is_zero());
    auto inv01 = LaurentPoly::parse(vars, "a^-1");
    CHECK(q.q[0][1] == -inv01);
}

TEST_CASE("singular or non-Laurent inverses are rejected") {
    std::vector<std::string> vars{"x", "y"};
    FrameData fd;
    fd.vars = vars;
    fd.rho = laurent_identity(vars, 2);
    fd.omega = LaurentMatrix(2, std::vector<LaurentPoly>(2, LaurentPoly(vars)));
    CHECK_THROWS_AS(invert_form(fd), DomainError);  // omega = 0

    // det = 1 + x is not a monomial: the inverse leaves the Laurent ring
    fd.omega[0][1] = LaurentPoly::parse(vars, "1+x");
    fd.omega[1][0] = -fd.omega[0][1];
    CHECK_THROWS_AS(invert_form(fd), DomainError);
}

TEST_CASE("universal frame data at order 3") {
    FrameData fd = universal_frame_data(3);
    CHECK(fd.vars == std::vector<std::string>{"u", "a1", "a2", "t"});
    // the form matrix rows follow the staircase pattern
    CHECK(fd.omega[0][3] == LaurentPoly::constant(fd.vars, Rational(-3)));
    CHECK(fd.omega[1][2] == LaurentPoly::constant(fd.vars, Rational(-1)));
    CHECK(fd.omega[1][3] == LaurentPoly::parse(fd.vars, "-2*t"));
    CHECK(fd.omega[2][3] == LaurentPoly::parse(fd.vars, "-t^2"));
    CHECK(laurent_det(fd.omega) == LaurentPoly::constant(fd.vars, Rational(9)));

    auto q = invert_form(fd);
    CHECK(schouten_jacobi(q).holds());
    CHECK(rank_drop_order(q, "t") == 4);

    // Pfaffian identity Pf(rho w^{-1} rho^T) * Pf(w) = det(rho)
    LaurentPoly lhs = bivector_pfaffian(q) * laurent_pfaffian(fd.omega);
    CHECK(lhs == laurent_det(fd.rho));
}

TEST_CASE("higher universal frames stay Poisson") {
    for (int k : {5}) {
        FrameData fd = universal_frame_data(k);
        auto q = invert_form(fd);
        CHECK(schouten_jacobi(q).holds());
        CHECK(rank_drop_order(q, "t") == k + 1);
    }
}

TEST_CASE("pfaffian scaling law") {
    auto b = intro_bracket();
    LaurentPoly t2 = LaurentPoly::monomial(b.vars, "t", 2);
    LaurentBivector scaled = b;
    for (auto& row : scaled.q)
        for (auto& e : row) e = e * t2;
    // a 4-dimensional block scales the Pfaffian by t^(2*2)
    CHECK(rank_drop_order(scaled, "t") == rank_drop_order(b, "t") + 4);
}

TEST_CASE("odd dimension and vanishing Pfaffians are rejected") {
    std::vector<std::string> vars{"x", "y", "z"};
    auto b = LaurentBivector::zero(vars);
    CHECK_THROWS_AS(bivector_pfaffian(b), DimensionError);
    std::vector<std::string> vars2{"x", "y"};
    auto b2 = LaurentBivector::zero(vars2);
    CHECK_THROWS_AS(rank_drop_order(b2, "x"), DomainError);
}
