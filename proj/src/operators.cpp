#include "glsf/operators.hpp"

namespace glsf {

namespace {

// Centered x-derivative row sweep with ghost closure. T is double or cplx.
template <class T>
void d_dx(const Grid2D& g, const std::vector<T>& s, std::vector<T>& out, ScalarBC bc) {
    const int nx = g.nx, ny = g.ny;
    const double ih2 = 1.0 / (2.0 * g.hx);
    const double ih = 1.0 / g.hx;
    for (int j = 0; j <= ny; ++j) {
        const int row = g.idx(0, j);
        if (bc == ScalarBC::neumann) {
            out[row] = T(0.0);
            out[row + nx] = T(0.0);
        } else {
            out[row] = s[row + 1] * ih;
            out[row + nx] = -s[row + nx - 1] * ih;
        }
        for (int i = 1; i < nx; ++i) out[row + i] = (s[row + i + 1] - s[row + i - 1]) * ih2;
    }
}

template <class T>
void d_dy(const Grid2D& g, const std::vector<T>& s, std::vector<T>& out, ScalarBC bc) {
    const int nx = g.nx, ny = g.ny;
    const int np = g.npx();
    const double ih2 = 1.0 / (2.0 * g.hy);
    const double ih = 1.0 / g.hy;
    for (int i = 0; i <= nx; ++i) {
        if (bc == ScalarBC::neumann) {
            out[g.idx(i, 0)] = T(0.0);
            out[g.idx(i, ny)] = T(0.0);
        } else {
            out[g.idx(i, 0)] = s[g.idx(i, 1)] * ih;
            out[g.idx(i, ny)] = -s[g.idx(i, ny - 1)] * ih;
        }
    }
    for (int j = 1; j < ny; ++j) {
        const int row = g.idx(0, j);
        for (int i = 0; i <= nx; ++i) out[row + i] = (s[row + i + np] - s[row + i - np]) * ih2;
    }
}

// Exact negative-adjoint x-derivative: for all s, f
//   sum_i wx_i (Gx s)_i f_i = -sum_i wx_i s_i (Ax f)_i
// where Gx is the Neumann-closure centered derivative. Out-of-range terms
// vanish; neighbors on the boundary carry their half weight.
template <class T>
void adj_dx(const Grid2D& g, const std::vector<T>& f, std::vector<T>& out) {
    const int nx = g.nx, ny = g.ny;
    const double ih2 = 1.0 / (2.0 * g.hx);
    const double ih = 1.0 / g.hx;
    for (int j = 0; j <= ny; ++j) {
        const int row = g.idx(0, j);
        out[row] = f[row + 1] * ih;                 // (w1*f1)/(w0*2h) = f1/h
        out[row + nx] = -f[row + nx - 1] * ih;
        if (nx >= 2) {
            out[row + 1] = (f[row + 2] - 0.5 * f[row]) * ih2;
            out[row + nx - 1] = (0.5 * f[row + nx] - f[row + nx - 2]) * ih2;
        }
        for (int i = 2; i <= nx - 2; ++i) out[row + i] = (f[row + i + 1] - f[row + i - 1]) * ih2;
    }
}

template <class T>
void adj_dy(const Grid2D& g, const std::vector<T>& f, std::vector<T>& out) {
    const int nx = g.nx, ny = g.ny;
    const int np = g.npx();
    const double ih2 = 1.0 / (2.0 * g.hy);
    const double ih = 1.0 / g.hy;
    for (int i = 0; i <= nx; ++i) {
        out[g.idx(i, 0)] = f[g.idx(i, 1)] * ih;
        out[g.idx(i, ny)] = -f[g.idx(i, ny - 1)] * ih;
        if (ny >= 2) {
            out[g.idx(i, 1)] = (f[g.idx(i, 2)] - 0.5 * f[g.idx(i, 0)]) * ih2;
            out[g.idx(i, ny - 1)] = (0.5 * f[g.idx(i, ny)] - f[g.idx(i, ny - 2)]) * ih2;
        }
    }
    for (int j = 2; j <= ny - 2; ++j) {
        const int row = g.idx(0, j);
        for (int i = 0; i <= nx; ++i) out[row + i] = (f[row + i + np] - f[row + i - np]) * ih2;
    }
}

template <class T, class Out>
void add_vectors(std::vector<T>& acc, const std::vector<Out>& b) {
    for (std::size_t n = 0; n < acc.size(); ++n) acc[n] += b[n];
}

} // namespace

VectorField grad(const ScalarField& s, ScalarBC bc) {
    VectorField g(*s.grid);
    d_dx(*s.grid, s.v, g.x, bc);
    d_dy(*s.grid, s.v, g.y, bc);
    return g;
}

ComplexVectorField grad(const ComplexField& s) {
    ComplexVectorField g(*s.grid);
    d_dx(*s.grid, s.v, g.x, ScalarBC::neumann);
    d_dy(*s.grid, s.v, g.y, ScalarBC::neumann);
    return g;
}

ScalarField div(const VectorField& v) {
    const Grid2D& g = *v.grid;
    ScalarField out(g);
    std::vector<double> tmp(g.num_nodes());
    adj_dx(g, v.x, out.v);
    adj_dy(g, v.y, tmp);
    add_vectors(out.v, tmp);
    return out;
}

ComplexField div(const ComplexVectorField& v) {
    const Grid2D& g = *v.grid;
    ComplexField out(g);
    std::vector<cplx> tmp(g.num_nodes());
    adj_dx(g, v.x, out.v);
    adj_dy(g, v.y, tmp);
    add_vectors(out.v, tmp);
    return out;
}

ScalarField curl2d(const VectorField& v) {
    const Grid2D& g = *v.grid;
    ScalarField c(g);
    const int np = g.npx();
    const double ihx2 = 1.0 / (2.0 * g.hx);
    const double ihy2 = 1.0 / (2.0 * g.hy);
    for (int j = 1; j < g.ny; ++j) {
        const int row = g.idx(0, j);
        for (int i = 1; i < g.nx; ++i) {
            const int n = row + i;
            c.v[n] = (v.y[n + 1] - v.y[n - 1]) * ihx2 - (v.x[n + np] - v.x[n - np]) * ihy2;
        }
    }
    // boundary values stay 0: the tangential-curl closure
    return c;
}

VectorField perp_grad(const ScalarField& c) {
    VectorField p(*c.grid);
    d_dy(*c.grid, c.v, p.x, ScalarBC::dirichlet0);
    d_dx(*c.grid, c.v, p.y, ScalarBC::dirichlet0);
    for (double& val : p.y) val = -val;
    return p;
}

VectorField curlcurl2d(const VectorField& v) { return perp_grad(curl2d(v)); }

VectorField graddiv(const VectorField& v) { return grad(div(v), ScalarBC::neumann); }

namespace {

template <class T>
void lap5(const Grid2D& g, const std::vector<T>& s, std::vector<T>& out, ScalarBC bc) {
    const int nx = g.nx, ny = g.ny;
    const int np = g.npx();
    const double ax = 1.0 / (g.hx * g.hx);
    const double ay = 1.0 / (g.hy * g.hy);
    // even ghost reflection for neumann, odd (about a zero boundary value)
    // for dirichlet0
    const double refl = (bc == ScalarBC::neumann) ? 1.0 : -1.0;
    for (int j = 0; j <= ny; ++j) {
        const int row = g.idx(0, j);
        for (int i = 0; i <= nx; ++i) {
            const int n = row + i;
            T xl = (i > 0) ? s[n - 1] : refl * s[n + 1];
            T xr = (i < nx) ? s[n + 1] : refl * s[n - 1];
            T yl = (j > 0) ? s[n - np] : refl * s[n + np];
            T yr = (j < ny) ? s[n + np] : refl * s[n - np];
            out[n] = ax * (xl + xr - 2.0 * s[n]) + ay * (yl + yr - 2.0 * s[n]);
        }
    }
}

} // namespace

ScalarField laplacian(const ScalarField& s, ScalarBC bc) {
    ScalarField out(*s.grid);
    lap5(*s.grid, s.v, out.v, bc);
    return out;
}

ComplexField laplacian(const ComplexField& s) {
    ComplexField out(*s.grid);
    lap5(*s.grid, s.v, out.v, ScalarBC::neumann);
    return out;
}

ScalarField laplacian_wide_dirichlet0(const ScalarField& s) {
    const Grid2D& g = *s.grid;
    std::vector<double> dx1(g.num_nodes()), dy1(g.num_nodes());
    ScalarField out(g);
    std::vector<double> tmp(g.num_nodes());
    d_dx(g, s.v, dx1, ScalarBC::dirichlet0);
    d_dx(g, dx1, out.v, ScalarBC::dirichlet0);
    d_dy(g, s.v, dy1, ScalarBC::dirichlet0);
    d_dy(g, dy1, tmp, ScalarBC::dirichlet0);
    add_vectors(out.v, tmp);
    return out;
}

} // namespace glsf
