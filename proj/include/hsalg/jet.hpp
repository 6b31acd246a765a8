#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hsalg/laurent.hpp"
#include "hsalg/scalar.hpp"

namespace hsalg {

/// Truncated polynomial f(z) = a0 z + a1 z^2 + ... + a_{k-1} z^k with a0 != 0;
/// an element of the group of k-jets of diffeomorphisms of (R, 0) under
/// composition.
struct JetPoly {
    int k = 1;
    std::vector<Rational> c;  // c[i] = a_i, coefficient of z^{i+1}

    JetPoly() : c{Rational(1)} {}
    JetPoly(int order, std::vector<Rational> coeffs);

    static JetPoly identity(int order);
    static JetPoly parse(int order, const std::string& text);

    bool is_identity() const;
    /// True when the jet lies in the identity component (a0 > 0).
    bool in_identity_component() const { return c[0].sign() > 0; }
    /// True when a0 = 1 (the unipotent subgroup).
    bool is_unipotent() const { return c[0].is_one(); }

    std::string str() const;

    friend bool operator==(const JetPoly& a, const JetPoly& b) { return a.k == b.k && a.c == b.c; }
};

/// Vector field sum c_i z^{i+1} d/dz, an element of the jet Lie algebra; the
/// c0 = 0 part is the nilpotent subalgebra.
struct JetVectorField {
    int k = 1;
    std::vector<Rational> c;  // c[i] = coefficient of z^{i+1} d/dz

    JetVectorField() : c{Rational(0)} {}
    JetVectorField(int order, std::vector<Rational> coeffs);

    static JetVectorField zero(int order);

    bool is_zero() const;
    bool is_nilpotent() const { return c[0].is_zero(); }

    std::string str() const;

    friend bool operator==(const JetVectorField& a, const JetVectorField& b) {
        return a.k == b.k && a.c == b.c;
    }
};

/// f composed after g: z -> f(g(z)), truncated past z^k.
JetPoly compose(const JetPoly& f, const JetPoly& g);

JetPoly invert(const JetPoly& f);

/// Truncation homomorphism to a lower jet order m <= k.
JetPoly project(const JetPoly& f, int m);
JetVectorField project(const JetVectorField& x, int m);

/// f(z) = h(u z) with h unipotent; returns (u, h).
std::pair<Rational, JetPoly> decompose_semidirect(const JetPoly& f);
JetPoly recompose_semidirect(const Rational& u, const JetPoly& h);

JetVectorField lie_bracket(const JetVectorField& x, const JetVectorField& y);

/// Time-1 flow of a nilpotent field (c0 = 0), computed as the truncated Lie
/// series sum_n X^n(z)/n!; throws DomainError when c0 != 0, where the flow
/// leaves the rational field (a0 = e^{c0}).
JetPoly exp_flow(const JetVectorField& x);

/// Inverse of exp_flow on the unipotent subgroup.
JetVectorField log_jet(const JetPoly& f);

/// Normalized group 2-cocycle classifying the central extension by the top
/// coefficient: the z^{k+1} coefficient of s(f) . s(g) . s(f.g)^{-1} where s
/// appends a zero coefficient. Satisfies
///   a0(f)^{-k} c(g,h) - c(fg,h) + c(f,gh) - c(f,g) = 0.
Rational extension_cocycle(const JetPoly& f, const JetPoly& g);

/// Coefficient polynomials p_{r,i}(a_1..a_{k-1}) of the right-invariant
/// vector field dual to z^{r+1} d/dz, for i = r..k-1: the multinomial sum
/// over nonnegative tuples j with sum(j) = r+1 and sum(t*j_t) = i-r.
std::vector<LaurentPoly> right_invariant_coeffs(int r, int k);

/// Variable list a1..a_{k-1} used by right_invariant_coeffs.
std::vector<std::string> jet_coordinate_vars(int k);

/// Evaluate a polynomial in the jet coordinates at a unipotent jet.
Rational evaluate_at_jet(const LaurentPoly& p, const JetPoly& h);

/// Conjugation action on the Lie algebra: d/de at 0 of f . exp(e X) . f^{-1}.
JetVectorField adjoint(const JetPoly& f, const JetVectorField& x);

}  // namespace hsalg
