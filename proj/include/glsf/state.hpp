#pragma once
#include <cstdint>

#include "glsf/fields.hpp"

namespace glsf {

// The dynamical variables z = (psi, A, u). Boundary encodings:
//   psi : no nodal constraint (Neumann data lives in the operators)
//   A   : normal components vanish on boundary nodes (A.n = 0)
//   u   : vanishes on boundary nodes (homogeneous Dirichlet)
struct State {
    ComplexField psi;
    VectorField A;
    ScalarField u;

    State() = default;
    explicit State(const Grid2D& g) : psi(g), A(g), u(g) {}

    const Grid2D& grid() const { return *psi.grid; }

    // re-impose the boundary encodings in place
    void enforce_constraints();

    bool finite() const { return all_finite(psi) && all_finite(A) && all_finite(u); }
};

// Instantaneous time derivative (psi_t, A_t, u_t); same constraints as State
// since the flow preserves the boundary encodings.
struct StateDot {
    ComplexField psit;
    VectorField At;
    ScalarField ut;

    StateDot() = default;
    explicit StateDot(const Grid2D& g) : psit(g), At(g), ut(g) {}

    bool finite() const { return all_finite(psit) && all_finite(At) && all_finite(ut); }
};

// zero the constrained slots of a time derivative (the flow keeps A.n = 0
// and u|boundary = 0, so their rates vanish there)
void zero_dot_constraints(const Grid2D& g, StateDot& d);

// in-place z += a * dz
void add_scaled(State& z, double a, const StateDot& dz);
// returns z1 - z2
State state_diff(const State& z1, const State& z2);
// in-place z *= a
void scale_state(State& z, double a);

// Deterministic smooth random state: low-mode trigonometric fields scaled so
// that z1_norm(z) equals z1_target (the A-part is built from a stream
// function plus a Neumann potential gradient, so A.n = 0 holds exactly).
State random_smooth_state(const Grid2D& grid, std::uint64_t seed, double z1_target);

// psi = value everywhere, A = 0, u = 0
State uniform_state(const Grid2D& grid, cplx value);

} // namespace glsf
