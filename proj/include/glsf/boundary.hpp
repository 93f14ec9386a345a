#pragma once
#include <functional>

#include "glsf/fields.hpp"
#include "glsf/operators.hpp"

namespace glsf {

using BoundaryValueFn = std::function<double(double x, double y)>;

// Time-independent boundary data: the harmonic temperature extension u_H,
// the divergence-free vector-potential extension A_H with curl A_H = -omega,
// the body force g (divergence-free), and the scalar potential G with
// perp_grad(G) = grad(u_H) + g and G = 0 on the boundary.
struct BoundaryData {
    const Grid2D* grid = nullptr;
    ScalarField u_H;
    VectorField A_H;
    ScalarField G;
    VectorField g;
    VectorField curl_G;  // perp_grad(G), cached; enters every A-equation evaluation
    double omega = 0.0;

    // build_G first-order residuals (see build_G); flag set when the inputs
    // are incompatible and no exact G exists
    double g_residual_x = 0.0;
    double g_residual_y = 0.0;
    bool g_residual_flag = false;

    bool is_zero = false;  // all fields identically zero (default preset)
};

// Solves the 5-point Dirichlet Laplace problem with boundary trace u_b.
// Interior residual max-norm <= 1e-10 on success.
ScalarField build_harmonic_temperature(const Grid2D& grid, const BoundaryValueFn& u_b);

// Stream-function construction A_H = perp_grad(phi), where phi solves the
// composed-difference Poisson problem laplacian_wide_dirichlet0(phi) = omega
// with zero boundary values. By construction div A_H vanishes to roundoff
// and curl2d(A_H) = -omega at interior nodes to solver tolerance.
VectorField build_vector_potential_extension(const Grid2D& grid, double omega);

struct BuildGResult {
    ScalarField G;
    double residual_x = 0.0;  // || dy G - (dx u_H + g1) || over interior nodes
    double residual_y = 0.0;  // || -dx G - (dy u_H + g2) ||
    bool flagged = false;     // residual large relative to the target field
};

// Solves laplacian_wide_dirichlet0(G) = dy g1 - dx g2 with zero Dirichlet
// boundary and reports the first-order residuals of perp_grad(G) against
// grad(u_H) + g. Incompatible inputs succeed but come back flagged.
BuildGResult build_G(const Grid2D& grid, const ScalarField& u_H, const VectorField& g);

// Assembles the full boundary-data bundle.
BoundaryData make_boundary_data(const Grid2D& grid, double omega, const BoundaryValueFn& u_b,
                                const VectorField& g);

// The default preset: omega = 0, u_b = 0, g = 0 (all fields vanish).
BoundaryData zero_boundary_data(const Grid2D& grid);

// Divergence-free body-force profile: discrete perp-gradient of
// amp * sin(pi x / lx) * sin(pi y / ly).
VectorField swirl_body_force(const Grid2D& grid, double amp);

struct BoundaryDiagnostics {
    double div_A_max = 0.0;       // max |div A_H|
    double curlcurl_max = 0.0;    // max |curl-curl A_H| with boundary curl -omega
    double curl_err_max = 0.0;    // max over interior |curl A_H + omega|
    double harmonic_max = 0.0;    // max interior |laplacian u_H|
    double div_g_max = 0.0;       // max |div g|
};

BoundaryDiagnostics boundary_diagnostics(const BoundaryData& bd);

} // namespace glsf
