#include "glsf/cg.hpp"

#include <cmath>
#include <string>

namespace glsf {

namespace {

double wdot(const std::vector<double>& w, const std::vector<double>& a,
            const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t n = 0; n < a.size(); ++n) s += w[n] * a[n] * b[n];
    return s;
}

double max_abs_vec(const std::vector<double>& a) {
    double m = 0.0;
    for (double x : a) m = std::max(m, std::abs(x));
    return m;
}

} // namespace

CgResult cg_solve(const ApplyFn& apply, const std::vector<double>& b, std::vector<double>& x,
                  const std::vector<double>& weights, const CgOptions& opts) {
    const std::size_t n = b.size();
    std::vector<double> r(n), p(n), ap(n);

    apply(x, ap);
    for (std::size_t k = 0; k < n; ++k) r[k] = b[k] - ap[k];

    CgResult res;
    res.residual_max = max_abs_vec(r);
    if (res.residual_max <= opts.tol_max) {
        res.converged = true;
        return res;
    }

    p = r;
    double rr = wdot(weights, r, r);
    for (int it = 1; it <= opts.max_iter; ++it) {
        apply(p, ap);
        const double pap = wdot(weights, p, ap);
        if (!(pap > 0.0)) {
            throw SolverError("cg: operator not positive definite (p'Ap = " +
                                  std::to_string(pap) + ")",
                              res.residual_max);
        }
        const double alpha = rr / pap;
        for (std::size_t k = 0; k < n; ++k) {
            x[k] += alpha * p[k];
            r[k] -= alpha * ap[k];
        }
        res.iterations = it;
        res.residual_max = max_abs_vec(r);
        if (res.residual_max <= opts.tol_max) {
            res.converged = true;
            return res;
        }
        const double rr_new = wdot(weights, r, r);
        const double beta = rr_new / rr;
        rr = rr_new;
        for (std::size_t k = 0; k < n; ++k) p[k] = r[k] + beta * p[k];
    }

    if (opts.throw_on_fail) {
        throw SolverError("cg: no convergence within " + std::to_string(opts.max_iter) +
                              " iterations, residual max-norm " +
                              std::to_string(res.residual_max),
                          res.residual_max);
    }
    return res;
}

} // namespace glsf
