#pragma once

#include <vector>

#include "seidel/matrix.hpp"
#include "seidel/seidel_matrix.hpp"

namespace seidel {

// Convergence target for the Jacobi sweep: off-diagonal Frobenius norm
// below kEigTolFactor * ||S||_F.
inline constexpr double kEigTolFactor = 1e-12;
inline constexpr int kMaxJacobiSweeps = 30;

struct EigenDecomposition {
    // Ascending eigenvalues theta_1 <= ... <= theta_n.
    std::vector<double> eigenvalues;
    // Column j of vectors is the unit eigenvector for eigenvalues[j].
    RealMatrix vectors;
    // The off-diagonal norm actually reached.
    double residual = 0.0;
};

// Cyclic Jacobi diagonalisation of a symmetric matrix. Throws
// convergence_error if the sweep budget runs out before the tolerance is
// met (does not happen for Seidel matrices in practice; the budget is a
// safety net).
EigenDecomposition jacobi_eigen(const RealMatrix& a, double tolerance);

// Decomposes S with tolerance kEigTolFactor * ||S||_F.
EigenDecomposition eigen_decompose(const SeidelMatrix& s);

}  // namespace seidel
