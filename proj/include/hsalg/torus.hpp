#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hsalg/matrix.hpp"

namespace hsalg {

/// Monodromy data of a torus bundle over the circle: the pushforward on
/// degree-1 cohomology, with the higher degrees generated as wedge powers.
struct TorusMonodromy {
    int n = 0;          // rank of degree-1 cohomology
    ExactMatrix a;      // integer matrix, det = +-1
    bool torus_fiber = true;
};

TorusMonodromy make_torus_monodromy(const ExactMatrix& a);

/// Matrix of the r-th wedge power on the lexicographic multi-index basis.
ExactMatrix wedge_power_map(const ExactMatrix& a, int r);

struct TwistedDims {
    int dim = 0;      // dim of the twisted cohomology in the given degree
    int kernel = 0;   // dim ker(wedge^r A - mu)
    int cokernel = 0; // dim coker(wedge^{r-1} A - mu)
};

/// Twisted cohomology of the mapping torus via the two-step sequence:
/// dim = dim ker(wedge^r A - mu) + dim coker(wedge^{r-1} A - mu).
TwistedDims twisted_dims(const TorusMonodromy& tm, const Scalar& mu, int r);

/// Same formula with explicit cohomology-level matrices per degree (for
/// fibers that are not tori); per_degree[r] is the pushforward on H^r.
TwistedDims twisted_dims_explicit(const std::vector<ExactMatrix>& per_degree, const Scalar& mu,
                                  int r);

/// (dim ker(M - id), dim coker(M - id)) for a flat bundle over the circle
/// with monodromy M.
std::pair<int, int> local_system_cohomology(const ExactMatrix& m);

std::vector<std::vector<Scalar>> eigenspace_basis(const ExactMatrix& a, const Scalar& mu);

/// The 2x2 unimodular block with trace 3 whose powers drive the compact
/// examples, and its distinguished eigenvalue (3+sqrt5)/2.
ExactMatrix cat_block();
Scalar cat_eigenvalue();

struct CatMapReport {
    int g1 = 1, g2 = 1;
    std::string rho_eig;     // printed eigenvalue, named to avoid index clashes
    int h1_l1 = 0;           // twisted degree-1 dim at mu = rho
    int h1_l2 = 0;           // twisted degree-1 dim at mu = rho^2
    int h2_l3 = 0;           // twisted degree-2 dim at mu = rho^3
    int dim_e1 = 0;          // eigenspace dims feeding the parameter count
    int dim_e2 = 0;
    int moduli_dim = 0;      // dim_e1 + dim_e2
    int sphere_dim = 0;      // moduli_dim - 1
    bool symmetric_under_inverse = false;  // dims match when mu -> 1/mu
};

/// Blocks of the trace-3 matrix and its square acting on a product of
/// surfaces of genus g1, g2; the base case g1 = g2 = 1 is the 4-torus.
CatMapReport cat_map_report(int g1, int g2);

}  // namespace hsalg
