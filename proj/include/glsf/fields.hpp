#pragma once
#include <complex>
#include <vector>

#include "glsf/params.hpp"

namespace glsf {

using cplx = std::complex<double>;

// Node-collocated fields. Values are stored row-major: index = j*(nx+1)+i.
// All inner products and norms use the grid's trapezoidal quadrature, so
// inner(1,1) integrates to lx*ly.

struct ScalarField {
    const Grid2D* grid = nullptr;
    std::vector<double> v;

    ScalarField() = default;
    explicit ScalarField(const Grid2D& g) : grid(&g), v(g.num_nodes(), 0.0) {}

    double& operator()(int i, int j) { return v[grid->idx(i, j)]; }
    double operator()(int i, int j) const { return v[grid->idx(i, j)]; }
};

struct ComplexField {
    const Grid2D* grid = nullptr;
    std::vector<cplx> v;

    ComplexField() = default;
    explicit ComplexField(const Grid2D& g) : grid(&g), v(g.num_nodes(), cplx(0.0, 0.0)) {}

    cplx& operator()(int i, int j) { return v[grid->idx(i, j)]; }
    cplx operator()(int i, int j) const { return v[grid->idx(i, j)]; }
};

struct VectorField {
    const Grid2D* grid = nullptr;
    std::vector<double> x, y;

    VectorField() = default;
    explicit VectorField(const Grid2D& g)
        : grid(&g), x(g.num_nodes(), 0.0), y(g.num_nodes(), 0.0) {}
};

struct ComplexVectorField {
    const Grid2D* grid = nullptr;
    std::vector<cplx> x, y;

    ComplexVectorField() = default;
    explicit ComplexVectorField(const Grid2D& g)
        : grid(&g), x(g.num_nodes(), cplx(0.0)), y(g.num_nodes(), cplx(0.0)) {}
};

void require_same_grid(const Grid2D* a, const Grid2D* b, const char* where);

// L2 inner products (complex version is conjugate-linear in the first slot).
double inner(const ScalarField& a, const ScalarField& b);
cplx inner(const ComplexField& a, const ComplexField& b);
double inner(const VectorField& a, const VectorField& b);

double norm(const ScalarField& a);
double norm(const ComplexField& a);
double norm(const VectorField& a);

// quadrature of the raw values
double integrate(const ScalarField& a);

bool all_finite(const ScalarField& a);
bool all_finite(const ComplexField& a);
bool all_finite(const VectorField& a);

double max_abs(const ScalarField& a);
double max_abs(const VectorField& a);
double max_abs(const ComplexField& a);

} // namespace glsf
