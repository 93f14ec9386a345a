#pragma once
#include <array>

#include "glsf/boundary.hpp"
#include "glsf/state.hpp"

namespace glsf {

// The free-energy functional
//   L(z) = 1/2 int { |W|^2 + 1/2 (|psi|^2-1)^2 + |psi|^2 u_H
//                    + mu |curl A|^2 + eta (div A)^2 + 2 curl_G . A + c0 u^2 }
// with W = (i/kappa) grad psi + psi (A + A_H). Non-increasing along the flow.
double lyapunov(const State& z, const PhysicalParams& p, const BoundaryData& bd);

// ||W||^2 + 1/2 |||psi|^2-1||^2 + int |psi|^2 u_H + ||A||_{H1}^2 + ||u||^2
double f1(const State& z, const PhysicalParams& p, const BoundaryData& bd);

// (1/kappa^2)||lap psi||^2 + mu||curlcurl A||^2
//   + ||graddiv A - grad u - curl_G||^2 + (k0/(2 eps c0))||grad u||^2,
// eps = 1/2 min(gamma/4, 1/3, (sqrt(1+c0^2)-1)/(2 c0)) (fixed diagnostic weight)
double f2(const State& z, const PhysicalParams& p, const BoundaryData& bd);
double f2_epsilon(const PhysicalParams& p);

using Mat3 = std::array<std::array<double, 3>, 3>;

// Coefficient matrix of the dissipation quadratic form q in the variables
// (A_t, graddiv A, grad u):
//   [ 1        (eta-2)/2   1   ]
//   [ (eta-2)/2    1      -1   ]
//   [ 1           -1     k0+1  ]
Mat3 q_matrix(const PhysicalParams& p);
double q_min_eigenvalue(const PhysicalParams& p);

// int { |a|^2 + |b|^2 + (k0+1)|c|^2 + (eta-2) a.b + 2 a.c - 2 b.c }
double q_value(const VectorField& a, const VectorField& b, const VectorField& c,
               const PhysicalParams& p);

// D = int gamma |psi_t - i kappa psi div A|^2 + q(A_t, graddiv A, grad u) >= 0.
// The time derivative is taken as given (normally dynamics::rhs output) so the
// identity tests compare exactly the integrator's derivative.
double dissipation(const State& z, const StateDot& zt, const PhysicalParams& p);

// phase-space norms
//   z1 = (||psi||_{H1}^2 + ||div A||^2 + ||curl A||^2 + ||u||^2)^{1/2}
//   z2 = (||psi||^2 + ||grad psi||^2 + ||lap psi||^2
//         + ||graddiv A||^2 + ||curlcurl A||^2 + ||grad u||^2)^{1/2}
double z1_norm(const State& z);
double z2_norm(const State& z);

// | |psi_t|^2 - ( |psi_t - i k psi d|^2 - k^2 |psi|^2 d^2
//                - i k (psi_t conj(psi) - conj(psi_t) psi) d ) |
double pointwise_identity_residual(cplx psi, cplx psit, double div_a, double kappa);

// Discrete Gateaux gradient of the Lyapunov functional: dL(z)[dz] equals
// Re inner(dz.psit, F.psit) + inner(dz.At, F.At) + inner(dz.ut, F.ut) to
// roundoff (the psi kinetic term differentiates through div(grad .), the
// exact adjoint pair, rather than the 5-point stencil).
StateDot energy_gradient(const State& z, const PhysicalParams& p, const BoundaryData& bd);

} // namespace glsf
