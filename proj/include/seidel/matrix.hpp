#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace seidel {

// Dense row-major square matrix.
template <typename T>
class SquareMatrix {
public:
    SquareMatrix() = default;
    explicit SquareMatrix(int n, T fill = T{})
        : n_(n), a_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), fill) {}

    int order() const { return n_; }

    T& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    const T& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    T* data() { return a_.data(); }
    const T* data() const { return a_.data(); }
    const T* row(int i) const { return a_.data() + static_cast<std::size_t>(i) * n_; }

    static SquareMatrix identity(int n) {
        SquareMatrix m(n);
        for (int i = 0; i < n; ++i) m(i, i) = T{1};
        return m;
    }

    friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

private:
    int n_ = 0;
    std::vector<T> a_;
};

using RealMatrix = SquareMatrix<double>;
using IntMatrix = SquareMatrix<std::int64_t>;

}  // namespace seidel
