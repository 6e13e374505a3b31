#include "seidel/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "seidel/errors.hpp"

namespace seidel {

namespace {

double offdiag_norm(const RealMatrix& a) {
    const int n = a.order();
    double sum = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) sum += a(i, j) * a(i, j);
    return std::sqrt(2.0 * sum);
}

}  // namespace

EigenDecomposition jacobi_eigen(const RealMatrix& a0, double tolerance) {
    const int n = a0.order();
    RealMatrix a = a0;
    RealMatrix v = RealMatrix::identity(n);

    double off = offdiag_norm(a);
    int sweep = 0;
    while (off > tolerance) {
        if (sweep++ == kMaxJacobiSweeps)
            throw convergence_error("jacobi_eigen: no convergence after " +
                                        std::to_string(kMaxJacobiSweeps) +
                                        " sweeps, off-diagonal norm " + std::to_string(off),
                                    off);
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                // Rotation choosing the smaller angle: tan(2*phi) = 2*apq / (aqq - app).
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                double t = 1.0 / (std::fabs(theta) + std::hypot(theta, 1.0));
                if (theta < 0.0) t = -t;
                const double c = 1.0 / std::hypot(t, 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);

                a(p, p) -= t * apq;
                a(q, q) += t * apq;
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (int r = 0; r < n; ++r) {
                    if (r != p && r != q) {
                        const double arp = a(r, p), arq = a(r, q);
                        a(r, p) = arp - s * (arq + tau * arp);
                        a(r, q) = arq + s * (arp - tau * arq);
                        a(p, r) = a(r, p);
                        a(q, r) = a(r, q);
                    }
                    const double vrp = v(r, p), vrq = v(r, q);
                    v(r, p) = vrp - s * (vrq + tau * vrp);
                    v(r, q) = vrq + s * (vrp - tau * vrq);
                }
            }
        off = offdiag_norm(a);
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return a(x, x) < a(y, y); });

    EigenDecomposition d;
    d.eigenvalues.resize(n);
    d.vectors = RealMatrix(n);
    for (int j = 0; j < n; ++j) {
        d.eigenvalues[j] = a(order[j], order[j]);
        for (int r = 0; r < n; ++r) d.vectors(r, j) = v(r, order[j]);
    }
    d.residual = off;
    return d;
}

EigenDecomposition eigen_decompose(const SeidelMatrix& s) {
    return jacobi_eigen(s.to_real_matrix(), kEigTolFactor * s.frobenius_norm());
}

}  // namespace seidel
