#include "seidel/energy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "seidel/errors.hpp"
#include "seidel/spectral.hpp"

namespace seidel {

double vertex_energy(const EigenDecomposition& d, int i) {
    const int n = static_cast<int>(d.eigenvalues.size());
    if (i < 0 || i >= n)
        throw index_error("vertex_energy: vertex " + std::to_string(i) +
                          " out of range for order " + std::to_string(n));
    double acc = 0.0;
    for (int j = 0; j < n; ++j) {
        const double w = d.vectors(i, j);
        acc += w * w * std::fabs(d.eigenvalues[j]);
    }
    return acc;
}

std::vector<double> vertex_energies(const EigenDecomposition& d) {
    const int n = static_cast<int>(d.eigenvalues.size());
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) out[i] = vertex_energy(d, i);
    return out;
}

double total_energy(const EigenDecomposition& d) {
    double acc = 0.0;
    for (double theta : d.eigenvalues) acc += std::fabs(theta);
    return acc;
}

double two_abs_value_energy(double a, double b, int n) {
    if (!(a > b) || b < 0.0)
        throw invalid_parameter("two_abs_value_energy: need a > b >= 0");
    return b + (a - b) * (n - 1 - b * b) / (a * a - b * b);
}

double closed_form_complete(int n) {
    if (n < 3) throw invalid_parameter("closed_form_complete: requires n >= 3");
    return 2.0 * (n - 1) / n;
}

double closed_form_complete_bipartite(int r, int s) {
    if (r < 1 || s < 1)
        throw invalid_parameter("closed_form_complete_bipartite: both parts must be nonempty");
    const int p = r + s;
    return 2.0 * (p - 1) / p;
}

double closed_form_conference(int v) {
    if (v < 5 || v % 4 != 1)
        throw invalid_parameter("closed_form_conference: order must be 1 (mod 4) and >= 5");
    return (v - 1) / std::sqrt(static_cast<double>(v));
}

UpperBoundCheck upper_bound_check(const EigenDecomposition& d, const SeidelMatrix& s) {
    const int n = s.order();
    UpperBoundCheck check;
    check.bound = std::sqrt(static_cast<double>(n - 1));
    check.attained.resize(n);
    for (int i = 0; i < n; ++i)
        check.attained[i] = std::fabs(vertex_energy(d, i) - check.bound) <= 1e-9;
    // Equality at every vertex is equivalent to S^2 = (n-1)I, so the
    // all-vertices flag comes from the exact integer test rather than the
    // floating comparisons.
    std::int64_t alpha = 0;
    check.equality_all = square_is_scalar(s, alpha) && alpha == n - 1;
    return check;
}

double holder_lower_bound(const SeidelMatrix& s, int i) {
    const int n = s.order();
    if (n < 2) throw invalid_parameter("holder_lower_bound: needs order >= 2");
    const double s4 = static_cast<double>(diag_power(s, i, 4));
    return std::pow(static_cast<double>(n - 1), 1.5) / std::sqrt(s4);
}

Constancy constancy_diagnostic(const SeidelMatrix& s, const EigenDecomposition& d) {
    Constancy result;
    std::int64_t alpha = 0;
    if (square_is_scalar(s, alpha)) {
        result.mechanism = ConstancyMechanism::s2_scalar;
        result.alpha = alpha;
        return result;
    }

    const int n = s.order();
    double max_abs = 0.0;
    for (double theta : d.eigenvalues) max_abs = std::max(max_abs, std::fabs(theta));
    // square_is_scalar(S) caught n == 1 (S^2 = 0 = 0*I), so max_abs > 0 here.
    std::vector<double> abs_theta(d.eigenvalues.size());
    for (std::size_t j = 0; j < abs_theta.size(); ++j) {
        const double a = std::fabs(d.eigenvalues[j]);
        abs_theta[j] = a < kZeroEigenvalueFactor * max_abs ? 0.0 : a;
    }
    std::sort(abs_theta.begin(), abs_theta.end());

    // Greedy 1-d clustering of the sorted |theta| values.
    const double tol = kClusterTolFactor * max_abs;
    std::vector<double> means;
    double start = abs_theta[0], sum = abs_theta[0];
    int count = 1;
    for (std::size_t j = 1; j < abs_theta.size(); ++j) {
        if (abs_theta[j] - start > tol) {
            means.push_back(sum / count);
            start = abs_theta[j];
            sum = 0.0;
            count = 0;
        }
        sum += abs_theta[j];
        ++count;
    }
    means.push_back(sum / count);

    if (means.size() == 2 && n >= 2) {
        result.mechanism = ConstancyMechanism::two_abs;
        result.b = means[0];
        result.a = means[1];
    }
    return result;
}

std::string constancy_tag(ConstancyMechanism m) {
    switch (m) {
        case ConstancyMechanism::s2_scalar:
            return "s2_scalar";
        case ConstancyMechanism::two_abs:
            return "two_abs";
        case ConstancyMechanism::none_detected:
            return "none_detected";
    }
    return "none_detected";
}

EnergyReport analyze(const Graph& g) {
    const SeidelMatrix s = seidel_matrix(g);
    const EigenDecomposition d = eigen_decompose(s);
    const int n = g.order();

    EnergyReport report;
    report.n = n;
    report.per_vertex = vertex_energies(d);
    report.total = total_energy(d);
    report.upper_bound = std::sqrt(static_cast<double>(n - 1));
    report.s2_diag = n - 1;
    report.s4_diag = diag_power_all(s, 4);
    report.holder_lower.resize(n, 0.0);
    if (n >= 2)
        for (int i = 0; i < n; ++i) report.holder_lower[i] = holder_lower_bound(s, i);

    std::int64_t alpha = 0;
    report.upper_equality = square_is_scalar(s, alpha) && alpha == n - 1;
    const auto [lo, hi] = std::minmax_element(report.per_vertex.begin(), report.per_vertex.end());
    report.constant = (*hi - *lo) <= 1e-8;
    report.constancy = constancy_diagnostic(s, d);
    return report;
}

}  // namespace seidel
