#include "glsf/functionals.hpp"

#include <algorithm>
#include <cmath>

namespace glsf {

namespace {

// W = (i/kappa) grad psi + psi (A + A_H)
ComplexVectorField covariant_gradient(const State& z, const PhysicalParams& p,
                                      const BoundaryData& bd) {
    const Grid2D& g = z.grid();
    ComplexVectorField w(g);
    ComplexVectorField gp = grad(z.psi);
    const cplx ik(0.0, 1.0 / p.kappa);
    for (int n = 0; n < g.num_nodes(); ++n) {
        const double ax = z.A.x[n] + bd.A_H.x[n];
        const double ay = z.A.y[n] + bd.A_H.y[n];
        w.x[n] = ik * gp.x[n] + z.psi.v[n] * ax;
        w.y[n] = ik * gp.y[n] + z.psi.v[n] * ay;
    }
    return w;
}

template <class F>
double quadrature(const Grid2D& g, F&& integrand) {
    double total = 0.0;
    for (int j = 0; j <= g.ny; ++j) {
        double row = 0.0;
        for (int i = 0; i <= g.nx; ++i) row += g.wx(i) * integrand(g.idx(i, j));
        total += g.wy(j) * row;
    }
    return total * g.hx * g.hy;
}

} // namespace

double lyapunov(const State& z, const PhysicalParams& p, const BoundaryData& bd) {
    const Grid2D& g = z.grid();
    ComplexVectorField w = covariant_gradient(z, p, bd);
    ScalarField diva = div(z.A);
    ScalarField curla = curl2d(z.A);
    return 0.5 * quadrature(g, [&](int n) {
        const double w2 = std::norm(w.x[n]) + std::norm(w.y[n]);
        const double psi2 = std::norm(z.psi.v[n]);
        const double dev = psi2 - 1.0;
        double val = w2 + 0.5 * dev * dev + p.mu * curla.v[n] * curla.v[n] +
                     p.eta * diva.v[n] * diva.v[n] + p.c0 * z.u.v[n] * z.u.v[n];
        if (!bd.is_zero) {
            val += psi2 * bd.u_H.v[n] +
                   2.0 * (bd.curl_G.x[n] * z.A.x[n] + bd.curl_G.y[n] * z.A.y[n]);
        }
        return val;
    });
}

double f1(const State& z, const PhysicalParams& p, const BoundaryData& bd) {
    const Grid2D& g = z.grid();
    ComplexVectorField w = covariant_gradient(z, p, bd);
    ScalarField diva = div(z.A);
    ScalarField curla = curl2d(z.A);
    return quadrature(g, [&](int n) {
        const double w2 = std::norm(w.x[n]) + std::norm(w.y[n]);
        const double psi2 = std::norm(z.psi.v[n]);
        const double dev = psi2 - 1.0;
        double val = w2 + 0.5 * dev * dev + diva.v[n] * diva.v[n] +
                     curla.v[n] * curla.v[n] + z.u.v[n] * z.u.v[n];
        if (!bd.is_zero) val += psi2 * bd.u_H.v[n];
        return val;
    });
}

double f2_epsilon(const PhysicalParams& p) {
    const double a = p.gamma / 4.0;
    const double b = 1.0 / 3.0;
    const double c = (std::sqrt(1.0 + p.c0 * p.c0) - 1.0) / (2.0 * p.c0);
    return 0.5 * std::min({a, b, c});
}

double f2(const State& z, const PhysicalParams& p, const BoundaryData& bd) {
    const Grid2D& g = z.grid();
    ComplexField lap = laplacian(z.psi);
    VectorField cc = curlcurl2d(z.A);
    VectorField gd = graddiv(z.A);
    VectorField gu = grad(z.u, ScalarBC::dirichlet0);
    const double eps = f2_epsilon(p);
    const double wu = p.k0 / (2.0 * eps * p.c0);
    return quadrature(g, [&](int n) {
        const double rx = gd.x[n] - gu.x[n] - bd.curl_G.x[n];
        const double ry = gd.y[n] - gu.y[n] - bd.curl_G.y[n];
        return std::norm(lap.v[n]) / (p.kappa * p.kappa) +
               p.mu * (cc.x[n] * cc.x[n] + cc.y[n] * cc.y[n]) + rx * rx + ry * ry +
               wu * (gu.x[n] * gu.x[n] + gu.y[n] * gu.y[n]);
    });
}

Mat3 q_matrix(const PhysicalParams& p) {
    const double h = (p.eta - 2.0) / 2.0;
    return Mat3{{{1.0, h, 1.0}, {h, 1.0, -1.0}, {1.0, -1.0, p.k0 + 1.0}}};
}

double q_min_eigenvalue(const PhysicalParams& p) {
    // closed-form symmetric 3x3 eigenvalues via the trigonometric method
    const Mat3 m = q_matrix(p);
    const double tr = m[0][0] + m[1][1] + m[2][2];
    const double q = tr / 3.0;
    double p2 = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const double b = m[i][j] - (i == j ? q : 0.0);
            p2 += b * b;
        }
    const double pnorm = std::sqrt(p2 / 6.0);
    if (pnorm == 0.0) return q;
    // r = det((M - qI)/p) / 2
    Mat3 b;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) b[i][j] = (m[i][j] - (i == j ? q : 0.0)) / pnorm;
    const double det = b[0][0] * (b[1][1] * b[2][2] - b[1][2] * b[2][1]) -
                       b[0][1] * (b[1][0] * b[2][2] - b[1][2] * b[2][0]) +
                       b[0][2] * (b[1][0] * b[2][1] - b[1][1] * b[2][0]);
    const double r = std::clamp(det / 2.0, -1.0, 1.0);
    const double phi = std::acos(r) / 3.0;
    // smallest eigenvalue
    return q + 2.0 * pnorm * std::cos(phi + 2.0 * 3.14159265358979323846 / 3.0);
}

double q_value(const VectorField& a, const VectorField& b, const VectorField& c,
               const PhysicalParams& p) {
    require_same_grid(a.grid, b.grid, "q_value");
    require_same_grid(a.grid, c.grid, "q_value");
    const Grid2D& g = *a.grid;
    const double hab = p.eta - 2.0;
    const double k1 = p.k0 + 1.0;
    return quadrature(g, [&](int n) {
        const double aa = a.x[n] * a.x[n] + a.y[n] * a.y[n];
        const double bb = b.x[n] * b.x[n] + b.y[n] * b.y[n];
        const double ccv = c.x[n] * c.x[n] + c.y[n] * c.y[n];
        const double ab = a.x[n] * b.x[n] + a.y[n] * b.y[n];
        const double ac = a.x[n] * c.x[n] + a.y[n] * c.y[n];
        const double bc = b.x[n] * c.x[n] + b.y[n] * c.y[n];
        return aa + bb + k1 * ccv + hab * ab + 2.0 * ac - 2.0 * bc;
    });
}

double dissipation(const State& z, const StateDot& zt, const PhysicalParams& p) {
    const Grid2D& g = z.grid();
    ScalarField diva = div(z.A);
    VectorField gd = grad(diva, ScalarBC::neumann);
    VectorField gu = grad(z.u, ScalarBC::dirichlet0);
    const double gauge = quadrature(g, [&](int n) {
        const cplx r = zt.psit.v[n] - cplx(0.0, p.kappa) * z.psi.v[n] * diva.v[n];
        return std::norm(r);
    });
    return p.gamma * gauge + q_value(zt.At, gd, gu, p);
}

double z1_norm(const State& z) {
    const Grid2D& g = z.grid();
    ComplexVectorField gp = grad(z.psi);
    ScalarField diva = div(z.A);
    ScalarField curla = curl2d(z.A);
    const double s = quadrature(g, [&](int n) {
        return std::norm(z.psi.v[n]) + std::norm(gp.x[n]) + std::norm(gp.y[n]) +
               diva.v[n] * diva.v[n] + curla.v[n] * curla.v[n] + z.u.v[n] * z.u.v[n];
    });
    return std::sqrt(s);
}

double z2_norm(const State& z) {
    const Grid2D& g = z.grid();
    ComplexVectorField gp = grad(z.psi);
    ComplexField lap = laplacian(z.psi);
    VectorField gd = graddiv(z.A);
    VectorField cc = curlcurl2d(z.A);
    VectorField gu = grad(z.u, ScalarBC::dirichlet0);
    const double s = quadrature(g, [&](int n) {
        return std::norm(z.psi.v[n]) + std::norm(gp.x[n]) + std::norm(gp.y[n]) +
               std::norm(lap.v[n]) + gd.x[n] * gd.x[n] + gd.y[n] * gd.y[n] +
               cc.x[n] * cc.x[n] + cc.y[n] * cc.y[n] + gu.x[n] * gu.x[n] + gu.y[n] * gu.y[n];
    });
    return std::sqrt(s);
}

double pointwise_identity_residual(cplx psi, cplx psit, double div_a, double kappa) {
    const double lhs = std::norm(psit);
    const cplx shifted = psit - cplx(0.0, kappa) * psi * div_a;
    const cplx cross = psit * std::conj(psi) - std::conj(psit) * psi; // purely imaginary
    const double rhs = std::norm(shifted) - kappa * kappa * std::norm(psi) * div_a * div_a -
                       (cplx(0.0, kappa) * cross).real() * div_a;
    return std::abs(lhs - rhs);
}

StateDot energy_gradient(const State& z, const PhysicalParams& p, const BoundaryData& bd) {
    const Grid2D& g = z.grid();
    StateDot f(g);

    ComplexVectorField w = covariant_gradient(z, p, bd);
    ComplexField divw = div(w);
    VectorField cc = curlcurl2d(z.A);
    VectorField gd = graddiv(z.A);
    const cplx ik(0.0, 1.0 / p.kappa);

    for (int n = 0; n < g.num_nodes(); ++n) {
        const double ax = z.A.x[n] + bd.A_H.x[n];
        const double ay = z.A.y[n] + bd.A_H.y[n];
        const cplx psi = z.psi.v[n];
        const double psi2 = std::norm(psi);

        f.psit.v[n] = ik * divw.v[n] + ax * w.x[n] + ay * w.y[n] + psi * (psi2 - 1.0) +
                      psi * bd.u_H.v[n];

        const cplx rex = std::conj(psi) * w.x[n];
        const cplx rey = std::conj(psi) * w.y[n];
        f.At.x[n] = rex.real() + p.mu * cc.x[n] - p.eta * gd.x[n] + bd.curl_G.x[n];
        f.At.y[n] = rey.real() + p.mu * cc.y[n] - p.eta * gd.y[n] + bd.curl_G.y[n];

        f.ut.v[n] = p.c0 * z.u.v[n];
    }
    return f;
}

} // namespace glsf
