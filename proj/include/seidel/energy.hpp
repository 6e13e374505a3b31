#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "seidel/eigen.hpp"
#include "seidel/graph.hpp"
#include "seidel/seidel_matrix.hpp"

namespace seidel {

// Relative cluster width when testing whether {|theta_j|} takes exactly two
// distinct values.
inline constexpr double kClusterTolFactor = 1e-7;

// E_S(v_i) = sum_j w_ij^2 |theta_j|, the i-th diagonal entry of |S|.
double vertex_energy(const EigenDecomposition& d, int i);
std::vector<double> vertex_energies(const EigenDecomposition& d);

// E_S(G) = sum_j |theta_j| = sum_i E_S(v_i).
double total_energy(const EigenDecomposition& d);

// Closed form b + (a-b)(n-1-b^2)/(a^2-b^2) valid when every |theta_j| is a
// or b. Requires a > b >= 0.
double two_abs_value_energy(double a, double b, int n);

// Family closed forms: 2(n-1)/n, 2(r+s-1)/(r+s), (v-1)/sqrt(v).
double closed_form_complete(int n);            // n >= 3
double closed_form_complete_bipartite(int r, int s);
double closed_form_conference(int v);          // v ≡ 1 (mod 4)

struct UpperBoundCheck {
    double bound = 0.0;            // sqrt(n-1)
    std::vector<bool> attained;    // energy within 1e-9 of the bound
    bool equality_all = false;     // exact integer test S^2 == (n-1) I
};
UpperBoundCheck upper_bound_check(const EigenDecomposition& d, const SeidelMatrix& s);

// (n-1)^{3/2} / sqrt([S^4]_ii), the [S^4]_ii entry exact.
double holder_lower_bound(const SeidelMatrix& s, int i);

// Sufficient conditions for constant vertex energy. none_detected makes no
// claim either way (the vertex-transitive mechanism is not tested here).
enum class ConstancyMechanism { s2_scalar, two_abs, none_detected };

struct Constancy {
    ConstancyMechanism mechanism = ConstancyMechanism::none_detected;
    std::int64_t alpha = 0;       // S^2 = alpha I       (s2_scalar)
    double a = 0.0;               // |theta| levels a > b (two_abs)
    double b = 0.0;
};

Constancy constancy_diagnostic(const SeidelMatrix& s, const EigenDecomposition& d);

std::string constancy_tag(ConstancyMechanism m);

// Everything the CLI reports for one graph.
struct EnergyReport {
    int n = 0;
    std::vector<double> per_vertex;
    double total = 0.0;
    double upper_bound = 0.0;               // sqrt(n-1)
    std::vector<double> holder_lower;
    std::int64_t s2_diag = 0;               // n-1, identical at every vertex
    std::vector<std::int64_t> s4_diag;
    bool upper_equality = false;            // S^2 == (n-1) I exactly
    bool constant = false;                  // observed spread <= 1e-8
    Constancy constancy;
};

EnergyReport analyze(const Graph& g);

}  // namespace seidel
