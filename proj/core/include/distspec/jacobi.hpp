#ifndef DISTSPEC_JACOBI_HPP
#define DISTSPEC_JACOBI_HPP

#include <span>
#include <vector>

#include "distspec/distance.hpp"

namespace distspec {

/// Dense symmetric real matrix, row-major.
struct RealMatrix {
    int n = 0;
    std::vector<double> a;

    RealMatrix() = default;
    explicit RealMatrix(int size) : n(size), a(static_cast<std::size_t>(size) * static_cast<std::size_t>(size), 0.0) {}

    double& at(int i, int j) { return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)]; }
    double at(int i, int j) const { return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)]; }

    static RealMatrix from(const DistanceMatrix& d);
    double max_abs() const;
};

struct EigenPair {
    double lambda = 0.0;
    std::vector<double> x;  // unit 2-norm
};

/// Cyclic Jacobi rotations until the off-diagonal Frobenius mass drops below
/// tol * max(1, ||A||_F). Returns all n eigenpairs sorted by ascending
/// eigenvalue; eigenvectors are orthonormal columns of the accumulated
/// rotation. Throws on non-symmetric input (beyond tol * scale) and on
/// non-convergence after `max_sweeps` sweeps.
std::vector<EigenPair> eigen_decomposition(const RealMatrix& m, double tol = 1e-13, int max_sweeps = 100);

/// ||A y - lambda y||_inf.
double residual(const RealMatrix& m, double lambda, std::span<const double> y);

}  // namespace distspec

#endif
