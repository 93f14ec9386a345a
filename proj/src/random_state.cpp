#include <cmath>
#include <random>

#include "glsf/functionals.hpp"
#include "glsf/state.hpp"

namespace glsf {

namespace {

// mt19937_64-backed uniform in [-1,1); the mapping from raw words is spelled
// out so streams are identical across standard libraries
struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    double unit() { return (eng() >> 11) * 0x1.0p-53; }
    double sym() { return 2.0 * unit() - 1.0; }
};

} // namespace

State random_smooth_state(const Grid2D& grid, std::uint64_t seed, double z1_target) {
    Rng rng(seed);
    const double pi = 3.14159265358979323846;
    const int mmax = 3;

    State z(grid);
    ScalarField stream(grid);   // A = perp_grad(stream) + grad(chi)
    ScalarField chi(grid);

    // draw every coefficient up front, independent of the grid sweep order
    std::vector<double> cre, cim, cu, cs, cc;
    for (int m = 0; m <= mmax; ++m)
        for (int n = 0; n <= mmax; ++n) {
            cre.push_back(rng.sym());
            cim.push_back(rng.sym());
            cu.push_back(rng.sym());
            cs.push_back(rng.sym());
            cc.push_back(rng.sym());
        }
    // keep the mean order parameter away from the unstable normal state so
    // generic samples are not exponentially close to the saddle
    cre[0] = std::copysign(0.4 + 0.6 * std::abs(cre[0]), cre[0]);

    for (int j = 0; j <= grid.ny; ++j)
        for (int i = 0; i <= grid.nx; ++i) {
            const double xs = grid.x(i) / grid.lx;
            const double ys = grid.y(j) / grid.ly;
            cplx psi(0.0, 0.0);
            double uval = 0.0, sval = 0.0, cval = 0.0;
            int k = 0;
            for (int m = 0; m <= mmax; ++m)
                for (int n = 0; n <= mmax; ++n, ++k) {
                    const double s2 = 1.0 + m * m + n * n;
                    const double damp = 1.0 / (s2 * s2);
                    const double damp_a = damp / s2;  // the A modes are the stiffest in Z1
                    const double cosmn = std::cos(pi * m * xs) * std::cos(pi * n * ys);
                    psi += damp * cplx(cre[k], cim[k]) * cosmn;
                    cval += damp_a * cc[k] * cosmn;
                    if (m > 0 && n > 0) {
                        const double sinmn = std::sin(pi * m * xs) * std::sin(pi * n * ys);
                        uval += damp * cu[k] * sinmn;
                        sval += damp_a * cs[k] * sinmn;
                    }
                }
            z.psi(i, j) = psi;
            z.u(i, j) = uval;
            stream(i, j) = sval;
            chi(i, j) = cval;
        }

    VectorField a1 = perp_grad(stream);
    VectorField a2 = grad(chi, ScalarBC::neumann);
    for (int n = 0; n < grid.num_nodes(); ++n) {
        z.A.x[n] = a1.x[n] + a2.x[n];
        z.A.y[n] = a1.y[n] + a2.y[n];
    }
    z.enforce_constraints();

    const double n0 = z1_norm(z);
    if (n0 > 0.0 && z1_target > 0.0) scale_state(z, z1_target / n0);
    return z;
}

} // namespace glsf
