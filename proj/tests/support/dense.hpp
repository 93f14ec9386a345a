#pragma once
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

// Dense direct-solve oracle for the iterative solvers: assemble the operator
// by probing basis vectors, then Gaussian elimination with partial pivoting.
// Only meant for grids up to ~32^2.

namespace glsf::test {

using DenseApply = std::function<void(const std::vector<double>&, std::vector<double>&)>;

inline std::vector<double> assemble_dense(int n, const DenseApply& apply) {
    std::vector<double> mat(static_cast<std::size_t>(n) * n, 0.0);
    std::vector<double> e(n, 0.0), col(n, 0.0);
    for (int j = 0; j < n; ++j) {
        e[j] = 1.0;
        apply(e, col);
        e[j] = 0.0;
        for (int i = 0; i < n; ++i) mat[static_cast<std::size_t>(i) * n + j] = col[i];
    }
    return mat;
}

inline std::vector<double> dense_solve(std::vector<double> a, std::vector<double> b) {
    const int n = static_cast<int>(b.size());
    std::vector<int> piv(n);
    for (int i = 0; i < n; ++i) piv[i] = i;
    for (int k = 0; k < n; ++k) {
        int pivot = k;
        double best = std::abs(a[static_cast<std::size_t>(k) * n + k]);
        for (int i = k + 1; i < n; ++i) {
            const double v = std::abs(a[static_cast<std::size_t>(i) * n + k]);
            if (v > best) {
                best = v;
                pivot = i;
            }
        }
        if (best == 0.0) throw std::runtime_error("dense_solve: singular matrix");
        if (pivot != k) {
            for (int j = 0; j < n; ++j)
                std::swap(a[static_cast<std::size_t>(k) * n + j],
                          a[static_cast<std::size_t>(pivot) * n + j]);
            std::swap(b[k], b[pivot]);
        }
        const double akk = a[static_cast<std::size_t>(k) * n + k];
        for (int i = k + 1; i < n; ++i) {
            const double f = a[static_cast<std::size_t>(i) * n + k] / akk;
            if (f == 0.0) continue;
            for (int j = k; j < n; ++j)
                a[static_cast<std::size_t>(i) * n + j] -= f * a[static_cast<std::size_t>(k) * n + j];
            b[i] -= f * b[k];
        }
    }
    std::vector<double> x(n, 0.0);
    for (int i = n - 1; i >= 0; --i) {
        double s = b[i];
        for (int j = i + 1; j < n; ++j) s -= a[static_cast<std::size_t>(i) * n + j] * x[j];
        x[i] = s / a[static_cast<std::size_t>(i) * n + i];
    }
    return x;
}

} // namespace glsf::test
