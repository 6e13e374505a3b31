#include "seidel/coulson.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "seidel/eigen.hpp"
#include "seidel/energy.hpp"
#include "seidel/errors.hpp"
#include "seidel/kernels.hpp"
#include "seidel/spectral.hpp"

namespace seidel {

namespace {

constexpr int kNodesPerPanel = 16;
// Quadrature nodes with |t| below this are nudged off zero; the integrand is
// bounded there even when S is singular, but Phi(it) itself vanishes.
constexpr double kZeroNodeGuard = 1e-8;

struct GaussRule {
    std::array<double, kNodesPerPanel> x;  // nodes on [-1, 1]
    std::array<double, kNodesPerPanel> w;
};

// Gauss-Legendre nodes as roots of P_16 by Newton iteration on the
// three-term recurrence; weights 2 / ((1 - x^2) P'_16(x)^2).
GaussRule make_rule() {
    GaussRule rule{};
    const int n = kNodesPerPanel;
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            const double z1 = z;
            z = z1 - p0 / pp;
            if (std::fabs(z - z1) < 1e-15) break;
        }
        rule.x[i] = -z;
        rule.x[n - 1 - i] = z;
        rule.w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        rule.w[n - 1 - i] = rule.w[i];
    }
    return rule;
}

const GaussRule& rule() {
    static const GaussRule r = make_rule();
    return r;
}

// Integral over u in (-pi/2, pi/2) of Re g(tan u) * sec^2 u du, composite
// Gauss-Legendre with the given panel count. Panel subtotals are reduced by
// pairwise summation in panel order, so the value is independent of the
// number of threads.
double integrate_panels(const SeidelMatrix& s, int i, int panels) {
    const GaussRule& r = rule();
    const double h = std::numbers::pi / panels;
    std::vector<double> partial(panels);
#pragma omp parallel for schedule(dynamic)
    for (int p = 0; p < panels; ++p) {
        const double lo = -0.5 * std::numbers::pi + p * h;
        double acc = 0.0;
        for (int k = 0; k < kNodesPerPanel; ++k) {
            const double u = lo + 0.5 * h * (r.x[k] + 1.0);
            double t = std::tan(u);
            if (std::fabs(t) < kZeroNodeGuard) t = t < 0.0 ? -kZeroNodeGuard : kZeroNodeGuard;
            const double sec2 = 1.0 + t * t;  // sec^2 u = 1 + tan^2 u
            acc += r.w[k] * coulson_integrand(s, i, t).real() * sec2;
        }
        partial[p] = 0.5 * h * acc;
    }
    return kernels::pairwise_sum(partial);
}

}  // namespace

std::complex<double> coulson_integrand(const SeidelMatrix& s, int i, double t) {
    const std::complex<double> z(0.0, t);
    const kernels::ScaledDet den = char_poly_scaled_at(s, z);
    if (den.log2_abs() < std::log2(kPolyTol))
        throw near_pole_error("coulson_integrand: |Phi(it)| below poly_tol at t = " +
                                  std::to_string(t),
                              t);
    const kernels::ScaledDet num = char_poly_minor_scaled_at(s, i, z);
    // |Phi_i / Phi| <= ~1/|t|, so the exponent gap is small and the ratio is
    // representable even when both determinants individually overflow.
    const std::complex<double> mantissa_ratio = num.mantissa / den.mantissa;
    const int shift = static_cast<int>(num.exponent - den.exponent);
    const std::complex<double> ratio(std::ldexp(mantissa_ratio.real(), shift),
                                     std::ldexp(mantissa_ratio.imag(), shift));
    return 1.0 - z * ratio;
}

CoulsonResult coulson_energy(const SeidelMatrix& s, int i, const QuadratureConfig& cfg) {
    CoulsonResult result;
    int panels = std::max(cfg.panels, 1);
    long nodes = static_cast<long>(panels) * kNodesPerPanel;
    double value = integrate_panels(s, i, panels);
    double delta = std::numeric_limits<double>::infinity();

    while (!(delta < cfg.target_tol)) {
        const long next_nodes = static_cast<long>(panels) * 2 * kNodesPerPanel;
        if (nodes + next_nodes > cfg.max_evaluations) {
            result.budget_exhausted = true;
            break;
        }
        panels *= 2;
        nodes += next_nodes;
        const double refined = integrate_panels(s, i, panels);
        delta = std::fabs(refined - value);
        value = refined;
    }

    result.value = value / std::numbers::pi;
    result.abs_error_estimate = std::isfinite(delta) ? delta / std::numbers::pi : delta;
    result.nodes_used = nodes;
    result.spectral_reference = vertex_energy(eigen_decompose(s), i);
    result.agreement = std::fabs(result.value - result.spectral_reference);
    return result;
}

double scalar_identity_check(double theta, double T) {
    if (!(T > 0.0)) throw invalid_parameter("scalar_identity_check: T must be positive");
    const GaussRule& r = rule();
    const int panels = std::clamp(static_cast<int>(4.0 * std::ceil(T)), 256, 65536);
    const double h = 2.0 * T / panels;
    std::vector<double> partial(panels);
#pragma omp parallel for schedule(static)
    for (int p = 0; p < panels; ++p) {
        const double lo = -T + p * h;
        double acc = 0.0;
        for (int k = 0; k < kNodesPerPanel; ++k) {
            const double t = lo + 0.5 * h * (r.x[k] + 1.0);
            const std::complex<double> it(0.0, t);
            const std::complex<double> g =
                theta == 0.0 ? std::complex<double>(0.0, 0.0) : 1.0 - it / (it - theta);
            acc += r.w[k] * g.real();
        }
        partial[p] = 0.5 * h * acc;
    }
    return kernels::pairwise_sum(partial) / std::numbers::pi;
}

}  // namespace seidel
