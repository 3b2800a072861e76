#include "distspec/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace distspec {

RealMatrix RealMatrix::from(const DistanceMatrix& d) {
    RealMatrix m(d.size());
    for (std::size_t i = 0; i < m.a.size(); ++i) m.a[i] = static_cast<double>(d.entries()[i]);
    return m;
}

double RealMatrix::max_abs() const {
    double best = 0.0;
    for (double v : a) best = std::max(best, std::fabs(v));
    return best;
}

namespace {

double off_diagonal_mass(const RealMatrix& m) {
    double s = 0.0;
    for (int i = 0; i < m.n; ++i)
        for (int j = i + 1; j < m.n; ++j) s += 2.0 * m.at(i, j) * m.at(i, j);
    return std::sqrt(s);
}

double frobenius(const RealMatrix& m) {
    double s = 0.0;
    for (double v : m.a) s += v * v;
    return std::sqrt(s);
}

}  // namespace

std::vector<EigenPair> eigen_decomposition(const RealMatrix& input, double tol, int max_sweeps) {
    const int n = input.n;
    if (tol <= 0.0) throw std::invalid_argument("eigen_decomposition: tol must be positive");
    const double scale = std::max(1.0, frobenius(input));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::fabs(input.at(i, j) - input.at(j, i)) > tol * scale)
                throw std::invalid_argument("eigen_decomposition: matrix not symmetric within tolerance");

    RealMatrix a = input;
    // symmetrize exactly so rotations stay consistent
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double v = 0.5 * (a.at(i, j) + a.at(j, i));
            a.at(i, j) = v;
            a.at(j, i) = v;
        }

    RealMatrix v(n);
    for (int i = 0; i < n; ++i) v.at(i, i) = 1.0;

    const double threshold = tol * scale;
    int sweep = 0;
    while (off_diagonal_mass(a) > threshold) {
        if (++sweep > max_sweeps)
            throw std::runtime_error("eigen_decomposition: no convergence after " + std::to_string(max_sweeps) + " sweeps");
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a.at(p, q);
                if (apq == 0.0) continue;
                const double theta = (a.at(q, q) - a.at(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);

                const double app = a.at(p, p), aqq = a.at(q, q);
                a.at(p, p) = app - t * apq;
                a.at(q, q) = aqq + t * apq;
                a.at(p, q) = 0.0;
                a.at(q, p) = 0.0;
                for (int r = 0; r < n; ++r) {
                    if (r != p && r != q) {
                        const double arp = a.at(r, p), arq = a.at(r, q);
                        a.at(r, p) = arp - s * (arq + tau * arp);
                        a.at(p, r) = a.at(r, p);
                        a.at(r, q) = arq + s * (arp - tau * arq);
                        a.at(q, r) = a.at(r, q);
                    }
                    const double vrp = v.at(r, p), vrq = v.at(r, q);
                    v.at(r, p) = vrp - s * (vrq + tau * vrp);
                    v.at(r, q) = vrq + s * (vrp - tau * vrq);
                }
            }
        }
    }

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) { return a.at(i, i) < a.at(j, j); });

    std::vector<EigenPair> pairs(static_cast<std::size_t>(n));
    for (int idx = 0; idx < n; ++idx) {
        const int col = order[static_cast<std::size_t>(idx)];
        EigenPair& pr = pairs[static_cast<std::size_t>(idx)];
        pr.lambda = a.at(col, col);
        pr.x.resize(static_cast<std::size_t>(n));
        for (int r = 0; r < n; ++r) pr.x[static_cast<std::size_t>(r)] = v.at(r, col);
        // rotations keep columns unit, renormalize against drift anyway
        double norm = 0.0;
        for (double e : pr.x) norm += e * e;
        norm = std::sqrt(norm);
        if (norm > 0.0)
            for (double& e : pr.x) e /= norm;
    }

    // contract: every returned pair is a genuine eigenpair of the input
    const double bound = 1e-8 * n * std::max(1.0, input.max_abs());
    for (const auto& pr : pairs)
        if (residual(input, pr.lambda, pr.x) > bound)
            throw std::runtime_error("eigen_decomposition: residual exceeds bound; convergence failure");
    return pairs;
}

double residual(const RealMatrix& m, double lambda, std::span<const double> y) {
    if (static_cast<int>(y.size()) != m.n) throw std::invalid_argument("residual: dimension mismatch");
    double worst = 0.0;
    for (int i = 0; i < m.n; ++i) {
        double acc = 0.0;
        for (int j = 0; j < m.n; ++j) acc += m.at(i, j) * y[static_cast<std::size_t>(j)];
        worst = std::max(worst, std::fabs(acc - lambda * y[static_cast<std::size_t>(i)]));
    }
    return worst;
}

}  // namespace distspec
