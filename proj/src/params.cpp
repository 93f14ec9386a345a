#include "glsf/params.hpp"

#include <cmath>

namespace glsf {

PhysicalParams derive_params(double gamma, double kappa, double mu, double c0, double k0) {
    auto require_positive = [](double v, const char* name) {
        if (!(v > 0.0) || !std::isfinite(v)) {
            throw ParamDomainError(std::string("parameter '") + name +
                                   "' must be a positive finite real, got " + std::to_string(v));
        }
    };
    require_positive(gamma, "gamma");
    require_positive(kappa, "kappa");
    require_positive(mu, "mu");
    require_positive(c0, "c0");
    require_positive(k0, "k0");

    PhysicalParams p;
    p.gamma = gamma;
    p.kappa = kappa;
    p.mu = mu;
    p.c0 = c0;
    p.k0 = k0;
    p.beta = kappa * gamma - 1.0 / kappa;
    p.eta = 2.0 * k0 / (k0 + 1.0);
    return p;
}

Grid2D::Grid2D(int nx_, int ny_, double lx_, double ly_) : nx(nx_), ny(ny_), lx(lx_), ly(ly_) {
    if (nx < 4 || ny < 4) {
        throw ParamDomainError("grid cell counts nx, ny must be >= 4, got nx=" +
                               std::to_string(nx) + " ny=" + std::to_string(ny));
    }
    if (!(lx > 0.0) || !(ly > 0.0) || !std::isfinite(lx) || !std::isfinite(ly)) {
        throw ParamDomainError("grid side lengths lx, ly must be positive finite reals");
    }
    hx = lx / nx;
    hy = ly / ny;
}

} // namespace glsf
