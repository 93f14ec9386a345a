#include "glsf/fields.hpp"

#include <cmath>

namespace glsf {

void require_same_grid(const Grid2D* a, const Grid2D* b, const char* where) {
    if (a == nullptr || b == nullptr || !a->same_as(*b)) {
        throw GridMismatchError(std::string(where) + ": fields live on different grids");
    }
}

namespace {

template <class F>
double weighted_sum(const Grid2D& g, F&& node_value) {
    // row-by-row accumulation, deterministic order
    double total = 0.0;
    for (int j = 0; j <= g.ny; ++j) {
        double row = 0.0;
        for (int i = 0; i <= g.nx; ++i) {
            row += g.wx(i) * node_value(g.idx(i, j));
        }
        total += g.wy(j) * row;
    }
    return total * g.hx * g.hy;
}

} // namespace

double inner(const ScalarField& a, const ScalarField& b) {
    require_same_grid(a.grid, b.grid, "inner(scalar)");
    const auto& g = *a.grid;
    return weighted_sum(g, [&](int n) { return a.v[n] * b.v[n]; });
}

cplx inner(const ComplexField& a, const ComplexField& b) {
    require_same_grid(a.grid, b.grid, "inner(complex)");
    const auto& g = *a.grid;
    double re = weighted_sum(g, [&](int n) {
        return a.v[n].real() * b.v[n].real() + a.v[n].imag() * b.v[n].imag();
    });
    double im = weighted_sum(g, [&](int n) {
        return a.v[n].real() * b.v[n].imag() - a.v[n].imag() * b.v[n].real();
    });
    return cplx(re, im);
}

double inner(const VectorField& a, const VectorField& b) {
    require_same_grid(a.grid, b.grid, "inner(vector)");
    const auto& g = *a.grid;
    return weighted_sum(g, [&](int n) { return a.x[n] * b.x[n] + a.y[n] * b.y[n]; });
}

double norm(const ScalarField& a) { return std::sqrt(inner(a, a)); }

double norm(const ComplexField& a) {
    const auto& g = *a.grid;
    return std::sqrt(weighted_sum(g, [&](int n) { return std::norm(a.v[n]); }));
}

double norm(const VectorField& a) { return std::sqrt(inner(a, a)); }

double integrate(const ScalarField& a) {
    const auto& g = *a.grid;
    return weighted_sum(g, [&](int n) { return a.v[n]; });
}

bool all_finite(const ScalarField& a) {
    for (double x : a.v)
        if (!std::isfinite(x)) return false;
    return true;
}

bool all_finite(const ComplexField& a) {
    for (const cplx& z : a.v)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

bool all_finite(const VectorField& a) {
    for (double x : a.x)
        if (!std::isfinite(x)) return false;
    for (double y : a.y)
        if (!std::isfinite(y)) return false;
    return true;
}

double max_abs(const ScalarField& a) {
    double m = 0.0;
    for (double x : a.v) m = std::max(m, std::abs(x));
    return m;
}

double max_abs(const VectorField& a) {
    double m = 0.0;
    for (double x : a.x) m = std::max(m, std::abs(x));
    for (double y : a.y) m = std::max(m, std::abs(y));
    return m;
}

double max_abs(const ComplexField& a) {
    double m = 0.0;
    for (const cplx& z : a.v) m = std::max(m, std::abs(z));
    return m;
}

} // namespace glsf
