#pragma once
#include <vector>

#include "glsf/functionals.hpp"

namespace glsf {

enum class Scheme { imex, explicit_euler };

struct IntegratorConfig {
    double dt = 1e-3;
    Scheme scheme = Scheme::imex;
    double solve_tol = 1e-10;  // absolute residual max-norm of the implicit solves
    long max_steps = 100000000;
};

struct TrajectoryRecord {
    double t = 0.0;
    double L = 0.0;       // Lyapunov functional
    double D = 0.0;       // dissipation rate, from rhs at record time
    double z1 = 0.0;
    double z2 = 0.0;
    double grad_u = 0.0;  // ||grad u||
    double divA = 0.0;    // ||div A||
    double psit = 0.0;    // ||psi_t||
    double F2 = 0.0;
};

// Right-hand sides of the evolution system:
//   gamma psi_t = (1/k^2) lap psi - (2i/k)(A+A_H).grad psi - psi|A+A_H|^2
//                 + i beta (div A) psi - psi(|psi|^2 - 1 + u + u_H)
//   A_t  = graddiv A - mu curlcurl A - |psi|^2 (A+A_H) + J - grad u - curl_G
//   c0 u_t = Re(conj(psi) psi_t) + k0 lap u + div(-|psi|^2 (A+A_H) + J)
// with J = (i/2k)(psi grad conj(psi) - conj(psi) grad psi), evaluated in
// complex arithmetic; its imaginary part is asserted to be roundoff and
// dropped. The u equation uses the psi_t computed just above it.
StateDot rhs(const State& z, const PhysicalParams& p, const BoundaryData& bd);

// One forward-Euler step z + dt * rhs(z). Stable only for dt of order h^2;
// kept as the desk-scale oracle for the IMEX scheme.
State step_explicit_euler(const State& z, const PhysicalParams& p, const BoundaryData& bd,
                          double dt);

// Semi-implicit stepper. The constant-coefficient stiff operators are
// implicit -- (1/k^2) lap on psi, graddiv - mu curlcurl on A, (k0/c0) lap on
// u -- everything else explicit, swept in the order psi -> A -> u with fresh
// values downstream. Implicit systems are SPD in the quadrature inner
// product and solved by CG with extrapolated warm starts.
class ImexStepper {
public:
    ImexStepper(const Grid2D& grid, const PhysicalParams& p, const BoundaryData& bd,
                double solve_tol = 1e-10, bool linear_flow = false);

    void step(State& z, double dt);

private:
    struct Warm {
        std::vector<double> prev1, prev2;
        int have = 0;
        void note(const std::vector<double>& sol);
        void guess(std::vector<double>& x0) const;
    };

    const Grid2D& grid_;
    PhysicalParams p_;
    const BoundaryData* bd_;
    double tol_;
    bool linear_;
    double last_dt_ = -1.0;
    std::vector<double> w_scalar_;  // quadrature weights
    std::vector<double> w_vector_;  // duplicated for packed vector unknowns
    Warm warm_re_, warm_im_, warm_a_, warm_u_;

    void solve_psi(const ComplexField& rhs_field, ComplexField& out, double dt);
    void solve_a(const VectorField& rhs_field, VectorField& out, double dt);
    void solve_u(const ScalarField& rhs_field, ScalarField& out, double dt);
};

struct SimulationResult {
    std::vector<TrajectoryRecord> records;
    State final_state;
    long steps = 0;
    long monotonicity_violations = 0;
    double worst_violation = 0.0;     // max of (L_{n+1} - L_n - tol_step), <= 0 if none
    double int_psit_at = 0.0;         // running integral of ||psi_t||^2 + ||A_t||^2
    double int_gd_gu = 0.0;           // running integral of ||graddiv A||^2 + ||grad u||^2
    double sup_psit = 0.0;
    bool aborted = false;
    double t_last_good = 0.0;
    long step_last_good = 0;
};

// Advances z0 to time T recording every record_every steps (plus the final
// step). L is evaluated every step; an increase beyond
//   tol_step = 1e-12 max(1,|L_n|) + 10 dt^2 (1 + D_n)
// counts as a monotonicity violation. Non-finite values abort the run and
// the result carries the partial records.
SimulationResult simulate(const State& z0, const PhysicalParams& p, const BoundaryData& bd,
                          const IntegratorConfig& cfg, double T, int record_every);

double monotonicity_tolerance(double L, double D, double dt);

struct DissipationIdentityReport {
    long total = 0;
    long within = 0;
    double worst = 0.0;  // worst relative defect
};

// Checks |(L_{n+1}-L_n)/dt + D(midpoint)| <= rel_tol * max(D, floor) along an
// IMEX trajectory, with D evaluated from rhs at the midpoint state.
DissipationIdentityReport dissipation_identity_check(const State& z0, const PhysicalParams& p,
                                                     const BoundaryData& bd, double dt, double T,
                                                     double rel_tol = 0.05,
                                                     double floor = 1e-8);

struct DependenceCurve {
    std::vector<double> t;
    std::vector<double> rho;      // z1(z1(t)-z2(t))^2 / z1(z01-z02)^2
    double initial_distance = 0.0;
};

// Paired-trajectory growth curve for continuous dependence on initial data.
DependenceCurve continuous_dependence_experiment(const State& z01, const State& z02,
                                                 const PhysicalParams& p, const BoundaryData& bd,
                                                 const IntegratorConfig& cfg, double T,
                                                 int record_every);

struct HolderReport {
    bool fixed_point = false;
    double alpha = 0.0;      // fitted exponent of ||S(t*+d)z - S(t*)z|| ~ C d^alpha
    double log_c = 0.0;
    double r2 = 0.0;
};

// Fits the Holder-in-time exponent at t_star over offsets 2^-4..2^-10 t_star.
HolderReport holder_time_check(const State& z0, const PhysicalParams& p, const BoundaryData& bd,
                               double t_star);

} // namespace glsf
