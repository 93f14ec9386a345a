#pragma once
#include <string>
#include <vector>

#include "glsf/errors.hpp"

namespace glsf {

// Model constants. beta and eta are derived:
//   beta = kappa*gamma - 1/kappa
//   eta  = 2*k0/(k0 + 1)   (so 0 < eta < 2)
// The heat supply r of the original model is identically zero in the
// regime implemented here and is kept only as documentation.
struct PhysicalParams {
    double gamma = 1.0;  // relaxation coefficient of the order parameter
    double kappa = 1.0;  // Ginzburg-Landau parameter
    double mu = 1.0;     // curl-curl coefficient
    double c0 = 1.0;     // specific-heat coefficient
    double k0 = 1.0;     // thermal conductivity coefficient
    double beta = 0.0;   // derived
    double eta = 1.0;    // derived

    static constexpr double heat_supply_r = 0.0;
};

// Validates positivity and fills the derived constants.
// Throws ParamDomainError naming the offending field.
PhysicalParams derive_params(double gamma, double kappa, double mu, double c0, double k0);

// Uniform rectangular node-centered grid on [0,lx] x [0,ly] with
// (nx+1) x (ny+1) nodes and trapezoidal quadrature weights (half
// weights on edges, quarter weights on corners).
struct Grid2D {
    int nx = 0, ny = 0;
    double lx = 0.0, ly = 0.0;
    double hx = 0.0, hy = 0.0;

    Grid2D() = default;
    Grid2D(int nx_, int ny_, double lx_, double ly_);

    int npx() const { return nx + 1; }
    int npy() const { return ny + 1; }
    int num_nodes() const { return npx() * npy(); }
    int idx(int i, int j) const { return j * npx() + i; }

    double x(int i) const { return i * hx; }
    double y(int j) const { return j * hy; }

    bool on_boundary(int i, int j) const {
        return i == 0 || i == nx || j == 0 || j == ny;
    }

    // trapezoidal weight factors per axis
    double wx(int i) const { return (i == 0 || i == nx) ? 0.5 : 1.0; }
    double wy(int j) const { return (j == 0 || j == ny) ? 0.5 : 1.0; }
    double weight(int i, int j) const { return hx * hy * wx(i) * wy(j); }

    bool same_as(const Grid2D& o) const {
        return nx == o.nx && ny == o.ny && lx == o.lx && ly == o.ly;
    }

    double area() const { return lx * ly; }
};

} // namespace glsf
