#include "glsf/stationary.hpp"

#include <cmath>

namespace glsf {

namespace {

double interior_weighted_l2(const Grid2D& g, const std::vector<double>& r) {
    double s = 0.0;
    for (int j = 1; j < g.ny; ++j)
        for (int i = 1; i < g.nx; ++i) {
            const double v = r[g.idx(i, j)];
            s += v * v;
        }
    return std::sqrt(s * g.hx * g.hy);
}

} // namespace

StationaryResidual stationary_residual(const State& z, const PhysicalParams& p,
                                       const BoundaryData& bd) {
    const Grid2D& g = z.grid();
    StationaryResidual out;

    StateDot dot = rhs(z, p, bd);
    out.r_psi = p.gamma * norm(dot.psit);
    out.r_A = norm(dot.At);

    // u equation without the psi_t coupling: k0 lap u + div(transport)
    std::vector<double> ru(g.num_nodes(), 0.0);
    for (int n = 0; n < g.num_nodes(); ++n) {
        const double coupling = (std::conj(z.psi.v[n]) * dot.psit.v[n]).real();
        ru[n] = p.c0 * dot.ut.v[n] - coupling;
    }
    out.r_u = interior_weighted_l2(g, ru);

    out.grad_u_norm = norm(grad(z.u, ScalarBC::dirichlet0));
    out.divA_norm = norm(div(z.A));
    return out;
}

ReducedResidual reduced_residual(const State& z, const PhysicalParams& p,
                                 const BoundaryData& bd) {
    const Grid2D& g = z.grid();
    ReducedResidual out;
    out.u_norm = norm(z.u);
    out.divA_norm = norm(div(z.A));
    out.precondition_warning = out.u_norm > 1e-6 || out.divA_norm > 1e-6;

    ComplexVectorField gp = grad(z.psi);
    ComplexField lapp = laplacian(z.psi);
    VectorField cc = curlcurl2d(z.A);

    ComplexField rp(g);
    VectorField ra(g);
    const double ik2 = 1.0 / (p.kappa * p.kappa);
    const cplx twoik(0.0, 2.0 / p.kappa);
    const cplx i2k(0.0, 0.5 / p.kappa);
    for (int n = 0; n < g.num_nodes(); ++n) {
        const double ax = z.A.x[n] + bd.A_H.x[n];
        const double ay = z.A.y[n] + bd.A_H.y[n];
        const cplx ps = z.psi.v[n];
        const double psi2 = std::norm(ps);
        rp.v[n] = ik2 * lapp.v[n] - twoik * (ax * gp.x[n] + ay * gp.y[n]) -
                  ps * (ax * ax + ay * ay) - ps * (psi2 - 1.0 + bd.u_H.v[n]);

        const cplx jx = i2k * (ps * std::conj(gp.x[n]) - std::conj(ps) * gp.x[n]);
        const cplx jy = i2k * (ps * std::conj(gp.y[n]) - std::conj(ps) * gp.y[n]);
        ra.x[n] = p.mu * cc.x[n] + psi2 * ax - jx.real() + bd.curl_G.x[n];
        ra.y[n] = p.mu * cc.y[n] + psi2 * ay - jy.real() + bd.curl_G.y[n];
    }
    // the normal components on the boundary are the constrained directions
    for (int j = 0; j <= g.ny; ++j) {
        ra.x[g.idx(0, j)] = 0.0;
        ra.x[g.idx(g.nx, j)] = 0.0;
    }
    for (int i = 0; i <= g.nx; ++i) {
        ra.y[g.idx(i, 0)] = 0.0;
        ra.y[g.idx(i, g.ny)] = 0.0;
    }
    out.r_psi = norm(rp);
    out.r_A = norm(ra);
    return out;
}

FindStationaryResult find_stationary(const State& z0, const PhysicalParams& p,
                                     const BoundaryData& bd, double tol, double max_time,
                                     const IntegratorConfig& cfg) {
    FindStationaryResult res;
    State z = z0;
    z.enforce_constraints();
    ImexStepper stepper(z.grid(), p, bd, cfg.solve_tol);

    const int check_every = 25;
    const long max_steps = std::lround(max_time / cfg.dt);
    int consecutive = 0;
    long n = 0;

    auto dissipation_now = [&]() {
        StateDot dot = rhs(z, p, bd);
        return dissipation(z, dot, p);
    };

    double D = dissipation_now();
    double L = lyapunov(z, p, bd);
    const double stop = tol * tol;
    if (D <= stop * (1.0 + std::abs(L))) {
        res.converged = true;  // already stationary
    }
    while (!res.converged && n < max_steps) {
        for (int k = 0; k < check_every && n < max_steps; ++k, ++n) stepper.step(z, cfg.dt);
        if (!z.finite()) {
            throw SimulationAborted("find_stationary: non-finite state", n * cfg.dt, n);
        }
        D = dissipation_now();
        L = lyapunov(z, p, bd);
        if (D <= stop * (1.0 + std::abs(L))) {
            if (++consecutive >= 3) res.converged = true;
        } else {
            consecutive = 0;
        }
    }

    res.t_elapsed = n * cfg.dt;
    res.final_dissipation = D;
    res.residual = stationary_residual(z, p, bd);
    res.state = std::move(z);
    return res;
}

StationaryProperties stationary_properties_check(const State& z, double tol) {
    StationaryProperties out;
    out.u_norm = norm(z.u);
    out.divA_norm = norm(div(z.A));
    out.z1 = z1_norm(z);
    out.within_tolerance = out.u_norm <= tol && out.divA_norm <= tol;
    return out;
}

} // namespace glsf
