#pragma once

#include <complex>

#include "seidel/seidel_matrix.hpp"

namespace seidel {

struct QuadratureConfig {
    double target_tol = 1e-8;   // stop once panel doubling changes the value less
    int panels = 64;            // initial panel count (16-node Gauss-Legendre each)
    long max_evaluations = 1L << 20;
};

struct CoulsonResult {
    double value = 0.0;               // (1/pi) * integral
    double abs_error_estimate = 0.0;  // |last - previous| refinement delta
    long nodes_used = 0;
    double spectral_reference = 0.0;  // vertex_energy for the same vertex
    double agreement = 0.0;           // |value - spectral_reference|
    bool budget_exhausted = false;    // target_tol not reached within budget
};

// g(t) = 1 - it * Phi_i(it) / Phi(it), evaluated via scaled LU determinants.
// Throws near_pole_error when |Phi(it)| falls below the poly_tol scale.
std::complex<double> coulson_integrand(const SeidelMatrix& s, int i, double t);

// E_S(v_i) = (1/pi) p.v. Integral g(t) dt, by t = tan(u) substitution and
// composite Gauss-Legendre quadrature with panel doubling. Independent of
// the eigensolver: the integrand uses determinants only. The spectral
// reference is computed afterwards just to fill in the agreement field.
CoulsonResult coulson_energy(const SeidelMatrix& s, int i, const QuadratureConfig& cfg = {});

// The scalar identity |theta| = (1/pi) Integral (1 - it/(it-theta)) dt,
// truncated to [-T, T]. Used to validate the quadrature in isolation.
double scalar_identity_check(double theta, double T);

}  // namespace seidel
