#include "glsf/state.hpp"

namespace glsf {

void State::enforce_constraints() {
    const Grid2D& g = grid();
    for (int j = 0; j <= g.ny; ++j) {
        A.x[g.idx(0, j)] = 0.0;
        A.x[g.idx(g.nx, j)] = 0.0;
        u.v[g.idx(0, j)] = 0.0;
        u.v[g.idx(g.nx, j)] = 0.0;
    }
    for (int i = 0; i <= g.nx; ++i) {
        A.y[g.idx(i, 0)] = 0.0;
        A.y[g.idx(i, g.ny)] = 0.0;
        u.v[g.idx(i, 0)] = 0.0;
        u.v[g.idx(i, g.ny)] = 0.0;
    }
}

void zero_dot_constraints(const Grid2D& g, StateDot& d) {
    for (int j = 0; j <= g.ny; ++j) {
        d.At.x[g.idx(0, j)] = 0.0;
        d.At.x[g.idx(g.nx, j)] = 0.0;
        d.ut.v[g.idx(0, j)] = 0.0;
        d.ut.v[g.idx(g.nx, j)] = 0.0;
    }
    for (int i = 0; i <= g.nx; ++i) {
        d.At.y[g.idx(i, 0)] = 0.0;
        d.At.y[g.idx(i, g.ny)] = 0.0;
        d.ut.v[g.idx(i, 0)] = 0.0;
        d.ut.v[g.idx(i, g.ny)] = 0.0;
    }
}

void add_scaled(State& z, double a, const StateDot& dz) {
    const int n = z.grid().num_nodes();
    for (int k = 0; k < n; ++k) {
        z.psi.v[k] += a * dz.psit.v[k];
        z.A.x[k] += a * dz.At.x[k];
        z.A.y[k] += a * dz.At.y[k];
        z.u.v[k] += a * dz.ut.v[k];
    }
}

State state_diff(const State& z1, const State& z2) {
    require_same_grid(z1.psi.grid, z2.psi.grid, "state_diff");
    State d(z1.grid());
    const int n = d.grid().num_nodes();
    for (int k = 0; k < n; ++k) {
        d.psi.v[k] = z1.psi.v[k] - z2.psi.v[k];
        d.A.x[k] = z1.A.x[k] - z2.A.x[k];
        d.A.y[k] = z1.A.y[k] - z2.A.y[k];
        d.u.v[k] = z1.u.v[k] - z2.u.v[k];
    }
    return d;
}

void scale_state(State& z, double a) {
    const int n = z.grid().num_nodes();
    for (int k = 0; k < n; ++k) {
        z.psi.v[k] *= a;
        z.A.x[k] *= a;
        z.A.y[k] *= a;
        z.u.v[k] *= a;
    }
}

State uniform_state(const Grid2D& grid, cplx value) {
    State z(grid);
    for (auto& p : z.psi.v) p = value;
    return z;
}

} // namespace glsf
