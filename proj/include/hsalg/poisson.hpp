#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "hsalg/laurent.hpp"

namespace hsalg {

/// Antisymmetric matrix of Laurent polynomials representing a bivector field
/// in the given coordinates.
struct LaurentBivector {
    std::vector<std::string> vars;
    LaurentMatrix q;  // q[i][j] = {vars[i], vars[j]}

    static LaurentBivector zero(std::vector<std::string> vars);
    void set_entry(const std::string& vi, const std::string& vj, const LaurentPoly& p);
    const LaurentPoly& entry(const std::string& vi, const std::string& vj) const;
    int var_index(const std::string& v) const;
    bool is_antisymmetric() const;
};

/// Anchor matrix rho (frame vectors expressed in coordinate fields, columns =
/// frame members) together with the antisymmetric form matrix in that frame.
struct FrameData {
    std::vector<std::string> vars;
    LaurentMatrix rho;    // coordinates x frame
    LaurentMatrix omega;  // frame x frame, antisymmetric
};

/// Trivector components J^{ijk} of the bracket residual; the bivector is
/// Poisson exactly when every component vanishes.
struct JacobiResidual {
    std::vector<std::string> vars;
    std::vector<std::tuple<int, int, int, LaurentPoly>> components;  // i<j<k with nonzero residual
    bool holds() const { return components.empty(); }
};
JacobiResidual schouten_jacobi(const LaurentBivector& q);

/// Q = rho . omega^{-1} . rho^T with exact adjugate/determinant division;
/// throws when omega is singular or the division is not exact.
LaurentBivector invert_form(const FrameData& fd);

LaurentPoly bivector_pfaffian(const LaurentBivector& q);

/// Order of vanishing of the Pfaffian at var = 0 (lowest exponent of var).
int rank_drop_order(const LaurentBivector& q, const std::string& var);

/// True when no entry depends on any of the listed variables.
bool check_translation_invariance(const LaurentBivector& q,
                                  const std::vector<std::string>& vars);

/// The bracket displayed for the first universal family: coordinates
/// (u, x, y, t) with {x,y} = 3u^3, {u,x} = t^2 u^2, {y,u} = 2t u^3,
/// {x,t} = 2t^3 u, {y,t} = -t^2 u^2, {u,t} = 0.
LaurentBivector intro_bracket();

/// Frame data of the order-(k+1) universal algebroid over the jet group cross
/// the line: coordinates (u, a1..a_{k-1}, t), frame V_0 + t dt, V_r + t^{r+1} dt,
/// t^{k+1} dt, and form d t_k expressed in that frame.
FrameData universal_frame_data(int k);

}  // namespace hsalg
