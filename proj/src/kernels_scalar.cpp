// Scalar reference kernels. These define the semantics; the SIMD lane is
// tested against them.

#include "symlab/kernels.hpp"

namespace symlab::kernels::scalar {

double dot(const double* a, const double* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void matvec(const double* W, const double* x, const double* b, double* y,
            std::size_t rows, std::size_t cols) {
    for (std::size_t r = 0; r < rows; ++r) {
        y[r] = b[r] + dot(W + r * cols, x, cols);
    }
}

void matvec_t_acc(const double* W, const double* d, double* out,
                  std::size_t rows, std::size_t cols) {
    for (std::size_t r = 0; r < rows; ++r) {
        axpy(d[r], W + r * cols, out, cols);
    }
}

void ger_acc(const double* d, const double* x, double* dW, std::size_t rows,
             std::size_t cols) {
    for (std::size_t r = 0; r < rows; ++r) {
        axpy(d[r], x, dW + r * cols, cols);
    }
}

} // namespace symlab::kernels::scalar
