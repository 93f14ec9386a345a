#pragma once
#include "glsf/dynamics.hpp"

namespace glsf {

// The decomposition z = z_l + z_k behind the exponential-attractor argument:
// z_l solves the decaying linear system with z_l(0) = z(0),
//   gamma psi_t = (1/k^2) lap psi - psi
//   A_t = graddiv A - mu curlcurl A - grad u
//   c0 u_t = k0 lap u
// and z_k := z - z_l picks up the forcings Upsilon/Theta/Gamma.

StateDot linear_rhs(const State& z, const PhysicalParams& p);

struct LinearTrajectory {
    std::vector<double> t;
    std::vector<State> states;
    std::vector<double> z1;
    bool norm_nonincreasing = true;
    double worst_increase = 0.0;
};

// IMEX-integrated linear flow (same implicit operators as the full scheme,
// the zeroth-order terms explicit).
LinearTrajectory simulate_linear(const State& z0, const PhysicalParams& p,
                                 const IntegratorConfig& cfg, double T, int record_every);

// convenience: the linear flow applied to a single state
State linear_flow(const State& z0, const PhysicalParams& p, const IntegratorConfig& cfg,
                  double T);

struct Forcings {
    ComplexField upsilon;
    VectorField theta;
    ScalarField gamma_src;
};

// Upsilon = -(2i/k)(A+A_H).grad psi - psi|A+A_H|^2 + i beta psi div A
//           - psi(|psi|^2 - 2 + u + u_H)
// Theta   = -|psi|^2 (A+A_H) + J - curl_G
// Gamma   = Re(conj(psi) psi_t) + div(-|psi|^2 (A+A_H) + J)
// so that rhs(z) = linear_rhs(z) + (Upsilon/gamma, Theta, Gamma/c0) exactly.
Forcings forcings(const State& z, const StateDot& zt, const PhysicalParams& p,
                  const BoundaryData& bd);

struct SplitTrajectory {
    std::vector<double> t;
    std::vector<State> z;
    std::vector<State> z_l;
    std::vector<State> z_k;
    std::vector<double> z1_l;
    std::vector<double> z2_k;
    double reconstruction_max = 0.0;  // max z1 of z - (z_l + z_k)
    double dt = 0.0;
};

// Runs the full and linear flows in lockstep and forms z_k by subtraction;
// throws if the bookkeeping identity z_l + z_k == z drifts beyond 1e-10.
SplitTrajectory split(const State& z0, const PhysicalParams& p, const BoundaryData& bd,
                      const IntegratorConfig& cfg, double T, int record_every);

struct ForcedSystemResidual {
    double r_psi = 0.0;
    double r_A = 0.0;
    double r_u = 0.0;
    double total = 0.0;
    int samples = 0;
};

// Residual of z_k in the forced system, with the forcings evaluated on the
// recorded full solution and the time derivative of z_k taken by centered
// differences of the records. The initial 10% of the horizon (the stiff
// warm-up layer) is skipped; past it the residual is O(dt + h^2).
ForcedSystemResidual forced_system_residual(const SplitTrajectory& st, const PhysicalParams& p,
                                            const BoundaryData& bd);

struct DecayFit {
    bool already_zero = false;
    double nu = 0.0;
    double log_m1 = 0.0;
    double r2 = 0.0;
};

// least-squares exponential fit of a z1-norm series; drops the initial 10%
// transient and everything below 1e-12
DecayFit fit_decay_rate(const std::vector<double>& t, const std::vector<double>& z1_values);

// lambda_hat(t*) = max over difference directions of
// z1(linear_flow(d, t*)) / z1(d), evaluated at each requested t*.
std::vector<double> contraction_sweep(const std::vector<State>& directions,
                                      const PhysicalParams& p, const IntegratorConfig& cfg,
                                      const std::vector<double>& t_stars);

struct SmoothingEstimate {
    double lambda_big = 0.0;          // max ratio
    std::vector<double> ratios;       // z2(K z1 - K z2) / z1(z1(0)-z2(0)) per pair
};

// K(z) = S(t*) z - linear_flow(z(0), t*); the smoothing ratio measures the
// Z2 gain of K differences over the initial Z1 distance.
SmoothingEstimate smoothing_estimate(const std::vector<std::pair<State, State>>& pairs,
                                     const PhysicalParams& p, const BoundaryData& bd,
                                     const IntegratorConfig& cfg, double t_star);

struct AbsorbingRun {
    double plateau_z2 = 0.0;      // sup over the tail window
    double plateau_f2 = 0.0;
    double tail_variation_z2 = 0.0;
    double tail_variation_f2 = 0.0;
};

struct AbsorbingReport {
    std::vector<AbsorbingRun> runs;
    double r2_hat = 0.0;  // common bound over the corpus: max plateau_z2
};

// Plateau diagnostics over the tail t >= T/2 of already-computed records.
// A quantity that has collapsed below 5% of its running peak counts as
// settled at zero; otherwise tail variation is (max-min)/max over the tail.
AbsorbingReport absorbing_diagnostics(const std::vector<SimulationResult>& results);

} // namespace glsf
