#pragma once

#include "hsalg/cdga.hpp"
#include "hsalg/matrix.hpp"

namespace hsalg {

enum class CeVariant { full, unipotent };  // generators x0.. vs x1..

/// Chevalley-Eilenberg algebra of the jet Lie algebra (or its unipotent
/// subalgebra): degree-1 generators x_i of weight -i with
/// d x_r = sum_{p<q, p+q=r} (p-q) x_p x_q.
ModelPtr build_ce(int k, CeVariant variant);

/// The rank-1 twisted module over CE(full): differential d + lambda * x0 ^ .
struct ULambda {
    ModelPtr model;       // CE of the full jet algebra
    GradedElement x0;
    long lambda = 0;

    ChainComplex complex() const { return model->twisted_complex(x0, -lambda); }
};
ULambda build_u_lambda(int k, long lambda);

/// Combined algebra: CE summand plus the rank-(k+1) module on degree-1
/// generators t_0..t_k with d t_r = sum_{i}(i-r) x_i t_{r-i} and the
/// staircase product t_s t_r = x_s t_r + ... + x_{r-1} t_{s+1}.
ModelPtr build_sk(int k);

/// Same with the x0-free CE summand (all x0 terms dropped).
ModelPtr build_c_theta(int k);

/// t0 + x0, the shifted generator making the staircase product uniform; the
/// other generators are unchanged.
GradedElement sk_t_prime(ModelPtr sk_model, int i);

struct UniversalSymplectic {
    int n = 0;
    ModelPtr model;            // combined algebra at k = 2n+1
    GradedElement varpi;       // d t_{2n+1}
    GradedElement gamma;       // 2-form on the x generators
    GradedElement alpha_top;   // -(2n+1) x0 t_{2n+1}
    ExactMatrix pairing;       // gamma on x_1..x_{2n}
    bool nondegenerate = false;
};
UniversalSymplectic universal_symplectic(int n);

}  // namespace hsalg
