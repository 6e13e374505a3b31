#include "seidel/seidel_matrix.hpp"

#include <cmath>

#include "seidel/kernels.hpp"

namespace seidel {

SeidelMatrix::SeidelMatrix(const Graph& g)
    : n_(g.order()), entries_(static_cast<std::size_t>(n_) * n_, 1) {
    for (int i = 0; i < n_; ++i) entries_[static_cast<std::size_t>(i) * n_ + i] = 0;
    for (auto [i, j] : g.edges()) {
        entries_[static_cast<std::size_t>(i) * n_ + j] = -1;
        entries_[static_cast<std::size_t>(j) * n_ + i] = -1;
    }
}

IntMatrix SeidelMatrix::to_int_matrix() const {
    IntMatrix m(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) m(i, j) = entry(i, j);
    return m;
}

RealMatrix SeidelMatrix::to_real_matrix() const {
    RealMatrix m(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) m(i, j) = static_cast<double>(entry(i, j));
    return m;
}

double SeidelMatrix::frobenius_norm() const {
    // Every off-diagonal entry is +-1, so ||S||_F^2 = n(n-1).
    return std::sqrt(static_cast<double>(n_) * (n_ - 1));
}

SeidelMatrix seidel_matrix(const Graph& g) { return SeidelMatrix(g); }

IntMatrix square(const SeidelMatrix& s) {
    IntMatrix a = s.to_int_matrix();
    IntMatrix c(s.order());
    kernels::symmetric_square(a, c);
    return c;
}

bool square_is_scalar(const SeidelMatrix& s, std::int64_t& alpha) {
    const IntMatrix sq = square(s);
    const int n = s.order();
    const std::int64_t diag = sq(0, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j ? sq(i, j) != diag : sq(i, j) != 0) return false;
        }
    alpha = diag;
    return true;
}

}  // namespace seidel
