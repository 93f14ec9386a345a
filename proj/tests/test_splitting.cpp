#include <cmath>

#include "doctest.h"
#include "glsf/splitting.hpp"
#include "support/testutil.hpp"

using namespace glsf;
using glsf::test::Rng;

namespace {

constexpr double pi = 3.14159265358979323846;

PhysicalParams default_params() { return derive_params(1.0, 2.0, 1.0, 1.0, 1.0); }

} // namespace

TEST_SUITE("splitting") {

TEST_CASE("linear rhs: zero state, eigenmode, additivity") {
    Grid2D g(32, 32, 1.0, 1.0);
    PhysicalParams p = default_params();

    State zero(g);
    StateDot d0 = linear_rhs(zero, p);
    CHECK(max_abs(d0.psit) == 0.0);
    CHECK(max_abs(d0.At) == 0.0);
    CHECK(max_abs(d0.ut) == 0.0);

    // psi = cos(pi x): gamma psi_t = -(pi^2/kappa^2 + 1) psi + O(h^2)
    State zc(g);
    zc.psi = test::fill_complex(g, [](double x, double) { return cplx(std::cos(pi * x), 0.0); });
    StateDot dc = linear_rhs(zc, p);
    const double rate = (pi * pi / (p.kappa * p.kappa) + 1.0) / p.gamma;
    double worst = 0.0;
    for (int n = 0; n < g.num_nodes(); ++n)
        worst = std::max(worst, std::abs(dc.psit.v[n].real() + rate * zc.psi.v[n].real()));
    CHECK(worst <= 5e-3 * rate);

    Rng rng(8);
    State a = test::random_state(g, rng);
    State b = test::random_state(g, rng);
    State sum = a;
    StateDot bd_(g);
    bd_.psit = b.psi;
    bd_.At = b.A;
    bd_.ut = b.u;
    add_scaled(sum, 1.0, bd_);
    StateDot da = linear_rhs(a, p), db = linear_rhs(b, p), ds = linear_rhs(sum, p);
    double lin_err = 0.0;
    for (int n = 0; n < g.num_nodes(); ++n) {
        lin_err = std::max(lin_err, std::abs(ds.psit.v[n] - da.psit.v[n] - db.psit.v[n]));
        lin_err = std::max(lin_err, std::abs(ds.At.x[n] - da.At.x[n] - db.At.x[n]));
        lin_err = std::max(lin_err, std::abs(ds.ut.v[n] - da.ut.v[n] - db.ut.v[n]));
    }
    const double scale = max_abs(ds.psit) + max_abs(ds.At) + max_abs(ds.ut) + 1.0;
    CHECK(lin_err <= 1e-12 * scale);
}

TEST_CASE("linear flow: decay of the slowest eigenmode matches the analytic rate") {
    Grid2D g(32, 32, 1.0, 1.0);
    PhysicalParams p = default_params();
    IntegratorConfig cfg;
    cfg.dt = 1e-3;

    State zc(g);
    zc.psi = test::fill_complex(g, [](double x, double) { return cplx(std::cos(pi * x), 0.0); });
    LinearTrajectory traj = simulate_linear(zc, p, cfg, 2.0, 20);
    CHECK(traj.norm_nonincreasing);
    DecayFit fit = fit_decay_rate(traj.t, traj.z1);
    CHECK(!fit.already_zero);
    const double rate = (pi * pi / (p.kappa * p.kappa) + 1.0) / p.gamma;
    CHECK(std::abs(fit.nu - rate) <= 0.02 * rate);
    CHECK(fit.r2 >= 0.999);
}

TEST_CASE("linear flow commutes with scalar multiplication") {
    Grid2D g(16, 16, 1.0, 1.0);
    PhysicalParams p = default_params();
    IntegratorConfig cfg;
    cfg.dt = 2e-3;
    cfg.solve_tol = 1e-12;  // absolute solver tolerances would otherwise break homogeneity
    State z0 = random_smooth_state(g, 5, 1.0);
    State z0s = z0;
    scale_state(z0s, -3.7);
    State f1 = linear_flow(z0, p, cfg, 0.5);
    State f2 = linear_flow(z0s, p, cfg, 0.5);
    scale_state(f1, -3.7);
    CHECK(z1_norm(state_diff(f1, f2)) <= 1e-10 * std::max(1.0, z1_norm(f2)));
}

TEST_CASE("linear flow norm is non-increasing on random data") {
    Grid2D g(16, 16, 1.0, 1.0);
    PhysicalParams p = default_params();
    IntegratorConfig cfg;
    cfg.dt = 1e-3;
    cfg.dt = 2e-3;
    for (int k = 0; k < 5; ++k) {
        State z0 = random_smooth_state(g, 100 + k, 1.0);
        LinearTrajectory traj = simulate_linear(z0, p, cfg, 10.0, 50);
        CHECK(traj.norm_nonincreasing);
        DecayFit fit = fit_decay_rate(traj.t, traj.z1);
        CHECK(!fit.already_zero);
        CHECK(fit.nu > 0.0);
        CHECK(fit.r2 >= 0.99);
    }
}

TEST_CASE("forcings: closed forms and the exact splitting identity") {
    Grid2D g(16, 16, 1.0, 1.0);
    PhysicalParams p = default_params();

    SUBCASE("uniform superfluid state") {
        BoundaryData bd = zero_boundary_data(g);
        State one = uniform_state(g, cplx(1.0, 0.0));
        StateDot dot = rhs(one, p, bd);
        Forcings f = forcings(one, dot, p, bd);
        for (int n = 0; n < g.num_nodes(); ++n) {
            CHECK(f.upsilon.v[n].real() == doctest::Approx(1.0).epsilon(1e-14));
            CHECK(std::abs(f.upsilon.v[n].imag()) <= 1e-15);
        }
        CHECK(max_abs(f.theta) <= 1e-15);
        CHECK(max_abs(f.gamma_src) <= 1e-15);
    }

    SUBCASE("rhs equals linear_rhs plus scaled forcings") {
        VectorField gf = swirl_body_force(g, 0.4);
        BoundaryData bd = make_boundary_data(g, 0.3, [](double, double) { return 0.2; }, gf);
        Rng rng(3);
        for (int trial = 0; trial < 20; ++trial) {
            State z = test::random_state(g, rng);
            StateDot full = rhs(z, p, bd);
            StateDot lin = linear_rhs(z, p);
            Forcings f = forcings(z, full, p, bd);
            double worst = 0.0;
            for (int n = 0; n < g.num_nodes(); ++n) {
                worst = std::max(worst, std::abs(full.psit.v[n] - lin.psit.v[n] -
                                                 f.upsilon.v[n] / p.gamma));
                worst = std::max(worst, std::abs(full.At.x[n] - lin.At.x[n] - f.theta.x[n]));
                worst = std::max(worst, std::abs(full.At.y[n] - lin.At.y[n] - f.theta.y[n]));
                worst = std::max(worst,
                                 std::abs(full.ut.v[n] - lin.ut.v[n] - f.gamma_src.v[n] / p.c0));
            }
            const double scale =
                max_abs(full.psit) + max_abs(full.At) + max_abs(full.ut) + 1.0;
            CHECK(worst <= 1e-12 * scale);
        }
    }
}

TEST_CASE("split bookkeeping and the forced-system residual") {
    Grid2D g(16, 16, 1.0, 1.0);
    PhysicalParams p = default_params();
    BoundaryData bd = zero_boundary_data(g);
    IntegratorConfig cfg;
    cfg.dt = 2e-3;

    SUBCASE("zero initial data stays zero") {
        SplitTrajectory st = split(State(g), p, bd, cfg, 0.5, 25);
        for (const State& z : st.z) CHECK(z1_norm(z) == 0.0);
        for (const State& zl : st.z_l) CHECK(z1_norm(zl) == 0.0);
        for (const State& zk : st.z_k) CHECK(z1_norm(zk) == 0.0);
    }

    SUBCASE("stationary base: z constant, z_l decays, z_k fills in") {
        State one = uniform_state(g, cplx(1.0, 0.0));
        SplitTrajectory st = split(one, p, bd, cfg, 2.0, 50);
        CHECK(st.reconstruction_max <= 1e-10);
        const double z1_one = z1_norm(one);
        for (const State& z : st.z)
            CHECK(std::abs(z1_norm(z) - z1_one) <= 1e-10);
        CHECK(st.z1_l.back() < 0.15 * st.z1_l.front());
        CHECK(z1_norm(state_diff(st.z_k.back(), one)) < 0.15 * z1_one);
    }

    SUBCASE("random base: residual of z_k in the forced system shrinks with dt and h") {
        // record spacing proportional to h so the centered time difference
        // contributes the O(h^2) part of the O(dt + h^2) bound
        auto residual_at = [&](int n, double dt) {
            Grid2D gg(n, n, 1.0, 1.0);
            BoundaryData bb = zero_boundary_data(gg);
            IntegratorConfig c2;
            c2.dt = dt;
            const int rec = std::max(1, static_cast<int>(std::lround(0.5 / (n * dt))));
            State z0 = random_smooth_state(gg, 17, 1.0);
            SplitTrajectory st = split(z0, p, bb, c2, 0.4, rec);
            return forced_system_residual(st, p, bb).total;
        };
        const double coarse = residual_at(12, 2e-4);
        const double fine = residual_at(24, 1e-4);
        CHECK(fine > 0.0);
        CHECK(coarse / fine >= 2.0);
    }
}

TEST_CASE("decay fit on synthetic series") {
    std::vector<double> t, v, z;
    for (int k = 0; k <= 100; ++k) {
        t.push_back(0.05 * k);
        v.push_back(3.0 * std::exp(-1.7 * 0.05 * k));
        z.push_back(0.0);
    }
    DecayFit fit = fit_decay_rate(t, v);
    CHECK(!fit.already_zero);
    CHECK(fit.nu == doctest::Approx(1.7).epsilon(1e-10));
    CHECK(fit.r2 >= 0.999999);

    DecayFit zfit = fit_decay_rate(t, z);
    CHECK(zfit.already_zero);
}

TEST_CASE("contraction sweep") {
    Grid2D g(24, 24, 1.0, 1.0);
    PhysicalParams p = default_params();
    IntegratorConfig cfg;
    cfg.dt = 1e-3;

    std::vector<State> dirs;
    for (int k = 0; k < 4; ++k) dirs.push_back(random_smooth_state(g, 300 + k, 1.0));
    // the slowest eigenmode: constant psi (rate 1/gamma)
    dirs.push_back(uniform_state(g, cplx(1.0, 0.0)));

    std::vector<double> t_stars = {0.0, 0.25, 0.5, 1.0, 2.0, 4.0};
    std::vector<double> lam = contraction_sweep(dirs, p, cfg, t_stars);
    CHECK(lam[0] == doctest::Approx(1.0).epsilon(1e-12));
    for (std::size_t k = 1; k < lam.size(); ++k) CHECK(lam[k] <= lam[k - 1] + 1e-12);
    // slowest mode dominates: lambda(t*) ~ e^{-t*/gamma}
    CHECK(std::abs(lam.back() - std::exp(-4.0 / p.gamma)) <= 0.02 * std::exp(-4.0 / p.gamma));
    bool below_half = false;
    for (std::size_t k = 0; k < lam.size(); ++k)
        if (t_stars[k] <= 10.0 && lam[k] < 0.5) below_half = true;
    CHECK(below_half);
}

TEST_CASE("smoothing estimate is finite and reproducible") {
    Grid2D g(16, 16, 1.0, 1.0);
    PhysicalParams p = default_params();
    BoundaryData bd = zero_boundary_data(g);
    IntegratorConfig cfg;
    cfg.dt = 2e-3;

    auto make_pairs = [&](int base_seed, int count) {
        std::vector<std::pair<State, State>> pairs;
        for (int k = 0; k < count; ++k) {
            State za = random_smooth_state(g, base_seed + 2 * k, 1.0);
            State zb = za;
            State dir = random_smooth_state(g, base_seed + 2 * k + 1, 1.0);
            StateDot dd(g);
            dd.psit = dir.psi;
            dd.At = dir.A;
            dd.ut = dir.u;
            add_scaled(zb, 1e-3, dd);
            pairs.emplace_back(za, zb);
        }
        return pairs;
    };

    SUBCASE("identical pair gives zero") {
        State z = random_smooth_state(g, 7, 1.0);
        SmoothingEstimate est = smoothing_estimate({{z, z}}, p, bd, cfg, 1.0);
        CHECK(est.ratios.size() == 1);
        CHECK(est.ratios[0] == 0.0);
    }

    SUBCASE("stability across disjoint samples") {
        SmoothingEstimate e1 = smoothing_estimate(make_pairs(1000, 8), p, bd, cfg, 1.0);
        SmoothingEstimate e2 = smoothing_estimate(make_pairs(2000, 8), p, bd, cfg, 1.0);
        CHECK(std::isfinite(e1.lambda_big));
        CHECK(std::isfinite(e2.lambda_big));
        CHECK(e1.lambda_big > 0.0);
        CHECK(e2.lambda_big > 0.0);
        CHECK(e1.lambda_big <= 2.0 * e2.lambda_big);
        CHECK(e2.lambda_big <= 2.0 * e1.lambda_big);
    }
}

TEST_CASE("absorbing diagnostics on a settled corpus") {
    Grid2D g(16, 16, 1.0, 1.0);
    PhysicalParams p = default_params();
    BoundaryData bd = zero_boundary_data(g);
    IntegratorConfig cfg;
    cfg.dt = 2e-3;

    std::vector<SimulationResult> runs;
    runs.push_back(simulate(uniform_state(g, cplx(1.0, 0.0)), p, bd, cfg, 2.0, 20));
    runs.push_back(simulate(random_smooth_state(g, 9, 0.8), p, bd, cfg, 12.0, 40));
    AbsorbingReport rep = absorbing_diagnostics(runs);
    REQUIRE(rep.runs.size() == 2);
    CHECK(rep.runs[0].tail_variation_z2 <= 1e-9);
    CHECK(rep.runs[1].tail_variation_z2 <= 0.05);
    CHECK(rep.r2_hat >= rep.runs[0].plateau_z2);
    CHECK(std::isfinite(rep.r2_hat));
}

} // TEST_SUITE
