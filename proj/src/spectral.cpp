#include "seidel/spectral.hpp"

#include <cmath>
#include <string>

#include "seidel/errors.hpp"

namespace seidel {

namespace {

void require_vertex(const SeidelMatrix& s, int i, const char* who) {
    if (i < 0 || i >= s.order())
        throw index_error(std::string(who) + ": vertex " + std::to_string(i) +
                          " out of range for order " + std::to_string(s.order()));
}

// zI - S as a dense row-major complex buffer; delete_row < 0 keeps all rows.
std::vector<std::complex<double>> resolvent_matrix(const SeidelMatrix& s, std::complex<double> z,
                                                   int deleted) {
    const int n = s.order();
    const int m = deleted < 0 ? n : n - 1;
    std::vector<std::complex<double>> a(static_cast<std::size_t>(m) * m);
    int r = 0;
    for (int i = 0; i < n; ++i) {
        if (i == deleted) continue;
        int c = 0;
        for (int j = 0; j < n; ++j) {
            if (j == deleted) continue;
            std::complex<double> value = -static_cast<double>(s.entry(i, j));
            if (i == j) value += z;
            a[static_cast<std::size_t>(r) * m + c] = value;
            ++c;
        }
        ++r;
    }
    return a;
}

}  // namespace

RealMatrix abs_matrix(const EigenDecomposition& eig) {
    const int n = eig.vectors.order();
    std::vector<double> abs_theta(n);
    for (int j = 0; j < n; ++j) abs_theta[j] = std::fabs(eig.eigenvalues[j]);
    RealMatrix m(n);
    kernels::weighted_gram(eig.vectors, abs_theta, m);
    return m;
}

std::int64_t diag_power(const SeidelMatrix& s, int i, int k) {
    require_vertex(s, i, "diag_power");
    if (k != 2 && k != 4)
        throw invalid_parameter("diag_power: k must be 2 or 4, got " + std::to_string(k));
    const int n = s.order();
    if (k == 2) {
        std::int64_t acc = 0;
        for (int j = 0; j < n; ++j) {
            const std::int64_t e = s.entry(i, j);
            acc += e * e;
        }
        return acc;
    }
    // [S^4]_ii = sum_j ([S^2]_ij)^2; one row of S^2 suffices.
    std::int64_t acc = 0;
    for (int j = 0; j < n; ++j) {
        std::int64_t row = 0;
        for (int l = 0; l < n; ++l)
            row += static_cast<std::int64_t>(s.entry(i, l)) * s.entry(l, j);
        acc += row * row;
    }
    return acc;
}

std::vector<std::int64_t> diag_power_all(const SeidelMatrix& s, int k) {
    if (k != 2 && k != 4)
        throw invalid_parameter("diag_power_all: k must be 2 or 4, got " + std::to_string(k));
    const int n = s.order();
    std::vector<std::int64_t> diag(n);
    if (k == 2) {
        for (int i = 0; i < n; ++i) diag[i] = n - 1;
        return diag;
    }
    const IntMatrix sq = square(s);
    for (int i = 0; i < n; ++i) {
        std::int64_t acc = 0;
        const std::int64_t* row = sq.row(i);
        for (int j = 0; j < n; ++j) acc += row[j] * row[j];
        diag[i] = acc;
    }
    return diag;
}

std::complex<double> char_poly_at(const SeidelMatrix& s, std::complex<double> z) {
    return char_poly_scaled_at(s, z).value();
}

std::complex<double> char_poly_minor_at(const SeidelMatrix& s, int i, std::complex<double> z) {
    return char_poly_minor_scaled_at(s, i, z).value();
}

kernels::ScaledDet char_poly_scaled_at(const SeidelMatrix& s, std::complex<double> z) {
    auto a = resolvent_matrix(s, z, -1);
    return kernels::lu_determinant(a, s.order());
}

kernels::ScaledDet char_poly_minor_scaled_at(const SeidelMatrix& s, int i,
                                             std::complex<double> z) {
    require_vertex(s, i, "char_poly_minor_at");
    auto a = resolvent_matrix(s, z, i);
    return kernels::lu_determinant(a, s.order() - 1);
}

}  // namespace seidel
