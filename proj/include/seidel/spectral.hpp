#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "seidel/eigen.hpp"
#include "seidel/kernels.hpp"
#include "seidel/matrix.hpp"
#include "seidel/seidel_matrix.hpp"

namespace seidel {

// Relative floor under which a characteristic-polynomial value counts as a
// root hit (and the evaluation point as a pole of the integrand).
inline constexpr double kPolyTol = 1e-10;

// Eigenvalues with |theta| below kZeroEigenvalueFactor * max|theta| are
// treated as exact zeros when clustering |theta| values.
inline constexpr double kZeroEigenvalueFactor = 1e-9;

// |S| = (S^2)^{1/2} assembled from the decomposition as W diag(|theta|) W^T.
RealMatrix abs_matrix(const EigenDecomposition& eig);

// [S^k]_ii for k in {2, 4}, exact 64-bit integers (safe for n <= 1500 at
// k = 4). k = 2 always gives n-1. diag_power_all shares one S^2 product
// across the whole diagonal.
std::int64_t diag_power(const SeidelMatrix& s, int i, int k);
std::vector<std::int64_t> diag_power_all(const SeidelMatrix& s, int k);

// phi(z) = det(zI - S) and the minor phi_i(z) = det(zI - S with row and
// column i deleted). The scaled variants return mantissa * 2^exponent and
// are safe for |z| large enough that phi overflows a double.
std::complex<double> char_poly_at(const SeidelMatrix& s, std::complex<double> z);
std::complex<double> char_poly_minor_at(const SeidelMatrix& s, int i, std::complex<double> z);
kernels::ScaledDet char_poly_scaled_at(const SeidelMatrix& s, std::complex<double> z);
kernels::ScaledDet char_poly_minor_scaled_at(const SeidelMatrix& s, int i, std::complex<double> z);

}  // namespace seidel
