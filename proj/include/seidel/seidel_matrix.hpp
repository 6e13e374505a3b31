#pragma once

#include <cstdint>
#include <vector>

#include "seidel/graph.hpp"
#include "seidel/matrix.hpp"

namespace seidel {

// The Seidel matrix S = J - I - 2A: zero diagonal, -1 between adjacent
// vertices, +1 between distinct non-adjacent ones. Entries are stored as
// int8 so exact integer identities (S^2 diagonal, scalarity tests) stay in
// 64-bit integer arithmetic.
class SeidelMatrix {
public:
    explicit SeidelMatrix(const Graph& g);

    int order() const { return n_; }
    int entry(int i, int j) const { return entries_[static_cast<std::size_t>(i) * n_ + j]; }

    IntMatrix to_int_matrix() const;
    RealMatrix to_real_matrix() const;

    // ||S||_F = sqrt(n(n-1)) exactly, computed from the order.
    double frobenius_norm() const;

private:
    int n_;
    std::vector<std::int8_t> entries_;
};

SeidelMatrix seidel_matrix(const Graph& g);

// S^2 in exact integer arithmetic.
IntMatrix square(const SeidelMatrix& s);

// True iff S^2 == alpha I for an integer alpha; alpha is set on success.
bool square_is_scalar(const SeidelMatrix& s, std::int64_t& alpha);

}  // namespace seidel
