#pragma once
#include <functional>
#include <vector>

#include "glsf/errors.hpp"

namespace glsf {

// Conjugate gradients for matrix-free SPD operators. The operator must be
// self-adjoint and positive definite with respect to the supplied weights
// (the grid's trapezoidal quadrature in practice). Constrained unknowns are
// handled by the caller: keep them zero in b and x and project them to zero
// inside apply.
//
// Convergence is declared on the max-norm of the (recurred) residual, which
// is the norm the module contracts are stated in.

struct CgOptions {
    double tol_max = 1e-10;  // absolute residual max-norm
    int max_iter = 10000;
    bool throw_on_fail = true;
};

struct CgResult {
    int iterations = 0;
    double residual_max = 0.0;
    bool converged = false;
};

using ApplyFn = std::function<void(const std::vector<double>&, std::vector<double>&)>;

CgResult cg_solve(const ApplyFn& apply, const std::vector<double>& b, std::vector<double>& x,
                  const std::vector<double>& weights, const CgOptions& opts);

} // namespace glsf
