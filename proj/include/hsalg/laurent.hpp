#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hsalg/scalar.hpp"

namespace hsalg {

/// Multivariate Laurent polynomial with exact rational coefficients over a
/// fixed ordered variable list. Terms are kept in a map keyed by exponent
/// vector (lex order), zero coefficients are never stored.
class LaurentPoly {
  public:
    using Exponents = std::vector<int>;

    LaurentPoly() = default;
    explicit LaurentPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static LaurentPoly constant(std::vector<std::string> vars, const Rational& c);
    /// Single variable raised to a power.
    static LaurentPoly monomial(std::vector<std::string> vars, const std::string& var, int exp,
                                const Rational& coeff = Rational(1));
    /// Grammar: sum of terms "c", "c*x^e*y", "-x^-2" with rational c ("p/q")
    /// and integer exponents.
    static LaurentPoly parse(const std::vector<std::string>& vars, const std::string& text);

    const std::vector<std::string>& vars() const { return vars_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::optional<Rational> as_constant() const;

    void add_term(const Exponents& e, const Rational& c);

    LaurentPoly operator-() const;
    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly operator*(const Rational& c) const;
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

    LaurentPoly derivative(const std::string& var) const;

    /// Exact quotient *this / g, or nullopt when *this is not divisible by g
    /// in the Laurent ring.
    std::optional<LaurentPoly> exact_div(const LaurentPoly& g) const;

    /// Lowest exponent of `var` over all terms; nullopt for the zero polynomial.
    std::optional<int> min_exponent(const std::string& var) const;
    bool depends_on(const std::string& var) const;

    /// Substitute var = 0; throws DomainError if a negative power of var occurs.
    LaurentPoly at_zero(const std::string& var) const;

    std::string str() const;

  private:
    int var_index(const std::string& var) const;
    void check_compatible(const LaurentPoly& o) const;

    std::vector<std::string> vars_;
    std::map<Exponents, Rational> terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

/// Square matrix of Laurent polynomials.
using LaurentMatrix = std::vector<std::vector<LaurentPoly>>;

LaurentMatrix laurent_identity(const std::vector<std::string>& vars, int n);
LaurentMatrix laurent_mat_mul(const LaurentMatrix& a, const LaurentMatrix& b);
LaurentMatrix laurent_transpose(const LaurentMatrix& a);
LaurentPoly laurent_det(const LaurentMatrix& a);
LaurentMatrix laurent_adjugate(const LaurentMatrix& a);
/// Pfaffian of an antisymmetric matrix of even dimension.
LaurentPoly laurent_pfaffian(const LaurentMatrix& a);

}  // namespace hsalg
