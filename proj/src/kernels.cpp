#include "seidel/kernels.hpp"

#include <algorithm>
#include <limits>
#include <utility>

namespace seidel::kernels {

namespace {

// Below this order a thread team costs more than the loop body.
constexpr int kParallelCutoff = 48;

// Row i of c = a * a, exploiting symmetry (fills (i,j) and (j,i) for j >= i).
// Both flavours of symmetric_square call this, so they agree bit for bit.
void square_row(const IntMatrix& a, IntMatrix& c, int i) {
    const int n = a.order();
    const std::int64_t* ai = a.row(i);
    for (int j = i; j < n; ++j) {
        const std::int64_t* aj = a.row(j);
        std::int64_t acc = 0;
        for (int k = 0; k < n; ++k) acc += ai[k] * aj[k];
        c(i, j) = acc;
        c(j, i) = acc;
    }
}

void gram_row(const RealMatrix& w, std::span<const double> d, RealMatrix& m, int i) {
    const int n = w.order();
    const double* wi = w.row(i);
    for (int j = i; j < n; ++j) {
        const double* wj = w.row(j);
        double acc = 0.0;
        for (int k = 0; k < n; ++k) acc += wi[k] * d[k] * wj[k];
        m(i, j) = acc;
        m(j, i) = acc;
    }
}

double abs2(std::complex<double> z) { return z.real() * z.real() + z.imag() * z.imag(); }

void renormalize(ScaledDet& det) {
    double m = std::max(std::fabs(det.mantissa.real()), std::fabs(det.mantissa.imag()));
    if (m == 0.0 || !std::isfinite(m)) return;
    int e = 0;
    std::frexp(m, &e);
    det.mantissa = {std::ldexp(det.mantissa.real(), -e), std::ldexp(det.mantissa.imag(), -e)};
    det.exponent += e;
}

// Eliminates column k of row r against pivot row k. Shared by both LU
// flavours for bit-identical factors.
void eliminate_row(std::complex<double>* a, int n, int k, int r, std::complex<double> akk) {
    std::complex<double> f = a[static_cast<std::size_t>(r) * n + k] / akk;
    a[static_cast<std::size_t>(r) * n + k] = f;
    const std::complex<double>* pivot = a + static_cast<std::size_t>(k) * n;
    std::complex<double>* row = a + static_cast<std::size_t>(r) * n;
    for (int c = k + 1; c < n; ++c) row[c] -= f * pivot[c];
}

template <bool Parallel>
ScaledDet lu_factorize(std::vector<std::complex<double>>& a, int n) {
    ScaledDet det{{1.0, 0.0}, 0};
    for (int k = 0; k < n; ++k) {
        int piv = k;
        double best = abs2(a[static_cast<std::size_t>(k) * n + k]);
        for (int r = k + 1; r < n; ++r) {
            double v = abs2(a[static_cast<std::size_t>(r) * n + k]);
            if (v > best) {
                best = v;
                piv = r;
            }
        }
        if (best == 0.0) return {{0.0, 0.0}, 0};
        if (piv != k) {
            for (int c = 0; c < n; ++c)
                std::swap(a[static_cast<std::size_t>(k) * n + c],
                          a[static_cast<std::size_t>(piv) * n + c]);
            det.mantissa = -det.mantissa;
        }
        const std::complex<double> akk = a[static_cast<std::size_t>(k) * n + k];
        det.mantissa *= akk;
        renormalize(det);
        if constexpr (Parallel) {
#pragma omp parallel for schedule(static)
            for (int r = k + 1; r < n; ++r) eliminate_row(a.data(), n, k, r, akk);
        } else {
            for (int r = k + 1; r < n; ++r) eliminate_row(a.data(), n, k, r, akk);
        }
    }
    return det;
}

}  // namespace

double ScaledDet::log2_abs() const {
    double m = std::abs(mantissa);
    if (m == 0.0) return -std::numeric_limits<double>::infinity();
    return std::log2(m) + static_cast<double>(exponent);
}

void symmetric_square_serial(const IntMatrix& a, IntMatrix& c) {
    const int n = a.order();
    if (c.order() != n) c = IntMatrix(n);
    for (int i = 0; i < n; ++i) square_row(a, c, i);
}

void symmetric_square(const IntMatrix& a, IntMatrix& c) {
    const int n = a.order();
    if (n < kParallelCutoff) {
        symmetric_square_serial(a, c);
        return;
    }
    if (c.order() != n) c = IntMatrix(n);
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) square_row(a, c, i);
}

void weighted_gram_serial(const RealMatrix& w, std::span<const double> d, RealMatrix& m) {
    const int n = w.order();
    if (m.order() != n) m = RealMatrix(n);
    for (int i = 0; i < n; ++i) gram_row(w, d, m, i);
}

void weighted_gram(const RealMatrix& w, std::span<const double> d, RealMatrix& m) {
    const int n = w.order();
    if (n < kParallelCutoff) {
        weighted_gram_serial(w, d, m);
        return;
    }
    if (m.order() != n) m = RealMatrix(n);
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) gram_row(w, d, m, i);
}

ScaledDet lu_determinant_serial(std::vector<std::complex<double>>& a, int n) {
    return lu_factorize<false>(a, n);
}

ScaledDet lu_determinant(std::vector<std::complex<double>>& a, int n) {
    if (n < kParallelCutoff) return lu_factorize<false>(a, n);
    return lu_factorize<true>(a, n);
}

double pairwise_sum(std::span<const double> xs) {
    if (xs.size() <= 8) {
        double s = 0.0;
        for (double x : xs) s += x;
        return s;
    }
    const std::size_t half = xs.size() / 2;
    return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

}  // namespace seidel::kernels
