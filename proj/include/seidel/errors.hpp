#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace seidel {

// Bad construction or call parameters (zero order, q != 1 mod 4, a <= b, ...).
struct invalid_parameter : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Paley generator is restricted to prime fields.
struct unsupported_field : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Vertex index outside [0, n).
struct index_error : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// Rejected text input; line numbers are 1-based.
class parse_error : public std::runtime_error {
public:
    parse_error(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Eigensolver ran out of sweeps; residual is the off-diagonal norm it got stuck at.
class convergence_error : public std::runtime_error {
public:
    convergence_error(const std::string& what, double residual)
        : std::runtime_error(what), residual_(residual) {}

    double residual() const { return residual_; }

private:
    double residual_;
};

// |Phi(it)| fell below poly_tol at the requested evaluation point t.
class near_pole_error : public std::runtime_error {
public:
    near_pole_error(const std::string& what, double t) : std::runtime_error(what), t_(t) {}

    double t() const { return t_; }

private:
    double t_;
};

}  // namespace seidel
