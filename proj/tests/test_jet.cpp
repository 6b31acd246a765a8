#include <doctest.h>

#include <random>

#include "hsalg/jet.hpp"

using namespace hsalg;

namespace {

JetPoly random_jet(std::mt19937_64& rng, int k, bool unipotent = false) {
    std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
    std::vector<Rational> c(static_cast<size_t>(k));
    c[0] = unipotent ? Rational(1) : Rational(0);
    while (c[0].is_zero()) c[0] = Rational(num(rng), den(rng));
    for (int i = 1; i < k; ++i) c[size_t(i)] = Rational(num(rng), den(rng));
    return JetPoly(k, std::move(c));
}

JetVectorField random_field(std::mt19937_64& rng, int k, bool nilpotent) {
    std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
    std::vector<Rational> c(static_cast<size_t>(k));
    for (int i = nilpotent ? 1 : 0; i < k; ++i) c[size_t(i)] = Rational(num(rng), den(rng));
    return JetVectorField(k, std::move(c));
}

}  // namespace

TEST_CASE("composition truncates past the order") {
    JetPoly f = JetPoly::parse(3, "z+z^2");
    CHECK(compose(f, f).str() == "z+2*z^2+2*z^3");
    CHECK(compose(f, JetPoly::identity(3)) == f);
    CHECK(compose(JetPoly::identity(3), f) == f);
    CHECK(compose(JetPoly::parse(2, "2z"), JetPoly::parse(2, "z+z^2")).str() == "2*z+2*z^2");
    CHECK_THROWS_AS(compose(f, JetPoly::identity(2)), DimensionError);
}

TEST_CASE("jet string parsing") {
    CHECK(JetPoly::parse(3, "z + 2*z^2 + 2*z^3").c[2] == Rational(2));
    CHECK(JetPoly::parse(2, "-z").c[0] == Rational(-1));
    CHECK(JetPoly::parse(4, "1/2z+z^4").c[3] == Rational(1));
    CHECK_THROWS_AS(JetPoly::parse(2, "z+z^5"), ParseError);
    CHECK_THROWS_AS(JetPoly::parse(2, "z^2"), DomainError);  // a0 = 0
}

TEST_CASE("inverse jets") {
    JetPoly f = JetPoly::parse(2, "z+3/2z^2");
    CHECK(invert(f).str() == "z-3/2*z^2");
    CHECK(invert(JetPoly::identity(5)) == JetPoly::identity(5));
    std::mt19937_64 rng(7);
    for (int t = 0; t < 30; ++t) {
        int k = 1 + int(rng() % 6);
        JetPoly f2 = random_jet(rng, k);
        CHECK(compose(f2, invert(f2)) == JetPoly::identity(k));
        CHECK(compose(invert(f2), f2) == JetPoly::identity(k));
        CHECK(invert(invert(f2)) == f2);
    }
}

TEST_CASE("projection truncates and is a homomorphism") {
    JetPoly f = JetPoly::parse(3, "z+2z^2+2z^3");
    CHECK(project(f, 2).str() == "z+2*z^2");
    CHECK(project(f, 3) == f);
    CHECK_THROWS_AS(project(f, 4), DimensionError);
    std::mt19937_64 rng(11);
    for (int t = 0; t < 30; ++t) {
        int k = 2 + int(rng() % 5);
        int m = 1 + int(rng() % k);
        JetPoly a = random_jet(rng, k), b = random_jet(rng, k);
        CHECK(project(compose(a, b), m) == compose(project(a, m), project(b, m)));
    }
}

TEST_CASE("semidirect decomposition") {
    auto [u, h] = decompose_semidirect(JetPoly::parse(2, "2z+4z^2"));
    CHECK(u == Rational(2));
    CHECK(h.str() == "z+z^2");
    JetPoly g = JetPoly::parse(3, "z+5z^2-z^3");
    auto [u2, h2] = decompose_semidirect(g);
    CHECK(u2 == Rational(1));
    CHECK(h2 == g);
    std::mt19937_64 rng(13);
    for (int t = 0; t < 30; ++t) {
        JetPoly f = random_jet(rng, 4);
        auto [uu, hh] = decompose_semidirect(f);
        CHECK(recompose_semidirect(uu, hh) == f);
    }
}

TEST_CASE("lie bracket of jet fields") {
    JetVectorField x(4, {Rational(0), Rational(1), Rational(0), Rational(0)});  // z^2 d/dz
    JetVectorField y(4, {Rational(0), Rational(0), Rational(1), Rational(0)});  // z^3 d/dz
    CHECK(lie_bracket(x, y).str() == "(z^4)*dz");
    CHECK(lie_bracket(x, x).is_zero());
    std::mt19937_64 rng(17);
    for (int t = 0; t < 40; ++t) {
        int k = 2 + int(rng() % 5);
        auto a = random_field(rng, k, false), b = random_field(rng, k, false),
             c = random_field(rng, k, false);
        auto jac = lie_bracket(a, lie_bracket(b, c));
        auto j2 = lie_bracket(b, lie_bracket(c, a));
        auto j3 = lie_bracket(c, lie_bracket(a, b));
        for (int i = 0; i < k; ++i)
            CHECK((jac.c[size_t(i)] + j2.c[size_t(i)] + j3.c[size_t(i)]).is_zero());
    }
}

TEST_CASE("exponential flow and logarithm") {
    JetVectorField x(2, {Rational(0), Rational(1)});
    CHECK(exp_flow(x).str() == "z+z^2");
    CHECK(exp_flow(JetVectorField::zero(3)) == JetPoly::identity(3));
    CHECK_THROWS_AS(exp_flow(JetVectorField(2, {Rational(1), Rational(0)})), DomainError);

    // the order-3 flow of z^2 d/dz follows the geometric series
    JetVectorField x3(3, {Rational(0), Rational(1), Rational(0)});
    CHECK(exp_flow(x3).str() == "z+z^2+z^3");

    std::mt19937_64 rng(19);
    for (int t = 0; t < 30; ++t) {
        int k = 2 + int(rng() % 5);
        auto v = random_field(rng, k, true);
        CHECK(log_jet(exp_flow(v)) == v);
        auto f = random_jet(rng, k, true);
        CHECK(exp_flow(log_jet(f)) == f);
    }
    CHECK_THROWS_AS(log_jet(JetPoly::parse(2, "2z")), DomainError);
}

TEST_CASE("group cocycle values") {
    JetPoly f = JetPoly::parse(2, "z+z^2");
    CHECK(extension_cocycle(f, f) == Rational(2));
    CHECK(extension_cocycle(JetPoly::identity(2), f) == Rational(0));
    CHECK(extension_cocycle(f, JetPoly::identity(2)) == Rational(0));
}

TEST_CASE("right-invariant coefficient polynomials") {
    for (int k = 2; k <= 7; ++k)
        for (int r = 1; r < k; ++r) {
            auto p = right_invariant_coeffs(r, k);
            // leading term p_{r,r} = 1
            CHECK(p[0].as_constant() == Rational(1));
            if (r + 1 < k) {
                // next term (r+1) a_1
                auto vars = jet_coordinate_vars(k);
                CHECK(p[1] == LaurentPoly::monomial(vars, "a1", 1, Rational(r + 1)));
            }
        }
    CHECK_THROWS_AS(right_invariant_coeffs(0, 4), DomainError);
    CHECK_THROWS_AS(right_invariant_coeffs(4, 4), DomainError);
}

TEST_CASE("adjoint action") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 25; ++t) {
        int k = 2 + int(rng() % 4);
        JetPoly f = random_jet(rng, k);
        JetVectorField x = random_field(rng, k, false), y = random_field(rng, k, false);
        CHECK(adjoint(JetPoly::identity(k), x) == x);
        // Ad is a Lie algebra homomorphism
        CHECK(adjoint(f, lie_bracket(x, y)) == lie_bracket(adjoint(f, x), adjoint(f, y)));
    }
    // nilpotent conjugation matches the iterated-bracket series
    // X + [X,Y] + 1/2 [[X,Y],Y] + ...
    for (int t = 0; t < 25; ++t) {
        int k = 2 + int(rng() % 4);
        JetVectorField y = random_field(rng, k, true);
        JetVectorField x = random_field(rng, k, false);
        JetVectorField acc = x, term = x;
        Rational nfact(1);
        for (int n = 1; n <= k + 1; ++n) {
            term = lie_bracket(term, y);
            nfact *= Rational(n);
            for (int i = 0; i < k; ++i) acc.c[size_t(i)] += term.c[size_t(i)] / nfact;
        }
        CHECK(adjoint(exp_flow(y), x) == acc);
    }
}
