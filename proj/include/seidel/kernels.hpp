#pragma once

#include <cmath>
#include <complex>
#include <span>
#include <vector>

#include "seidel/matrix.hpp"

// Dense inner-loop kernels. Each one comes in two flavours: a plain serial
// reference implementation (suffix _serial) and an OpenMP row-parallel
// version that performs the exact same per-element arithmetic, so the two
// produce bit-identical results. The parallel versions fall back to the
// serial loop below a size cutoff where a thread team costs more than the
// work. bench/bench_kernels.cpp compares the two flavours.
namespace seidel::kernels {

// c = a * a for a symmetric integer matrix, exact 64-bit arithmetic.
void symmetric_square_serial(const IntMatrix& a, IntMatrix& c);
void symmetric_square(const IntMatrix& a, IntMatrix& c);

// m = w * diag(d) * w^T. d.size() must equal w.order().
void weighted_gram_serial(const RealMatrix& w, std::span<const double> d, RealMatrix& m);
void weighted_gram(const RealMatrix& w, std::span<const double> d, RealMatrix& m);

// Determinant kept as mantissa * 2^exponent with |mantissa| in [1, 2), so
// ratios of determinants of order ~n at |z| >> 1 never overflow.
struct ScaledDet {
    std::complex<double> mantissa{0.0, 0.0};
    long exponent = 0;

    std::complex<double> value() const {
        return {std::ldexp(mantissa.real(), static_cast<int>(exponent)),
                std::ldexp(mantissa.imag(), static_cast<int>(exponent))};
    }
    // log2 |det|, or -inf for a singular matrix.
    double log2_abs() const;
};

// In-place LU with partial pivoting on a row-major n*n complex matrix.
// The 0x0 determinant is 1.
ScaledDet lu_determinant_serial(std::vector<std::complex<double>>& a, int n);
ScaledDet lu_determinant(std::vector<std::complex<double>>& a, int n);

// Deterministic pairwise reduction; the result depends only on the order of
// xs, never on thread count.
double pairwise_sum(std::span<const double> xs);

}  // namespace seidel::kernels
