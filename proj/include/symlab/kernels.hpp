// kernels.hpp -- data-parallel inner loops behind MLP training and L-BFGS
//
// Every routine has a scalar reference implementation and, on x86-64, an
// AVX2+FMA variant. The lane is picked once at startup from CPUID; set
// SYMLAB_KERNEL=scalar (or avx2) to force one. The two lanes are
// equivalence-tested against each other; they are not bit-identical
// (FMA and lane-wise summation reorder roundoff) but agree to ~1e-14
// relative. Within one process the lane is fixed, so runs stay
// bit-reproducible.

#pragma once

#include <cstddef>

namespace symlab::kernels {

/// Inner product a. b over n entries.
using DotFn = double (*)(const double* a, const double* b, std::size_t n);

/// y += alpha * x over n entries.
using AxpyFn = void (*)(double alpha, const double* x, double* y, std::size_t n);

/// y = W x + b. W is rows x cols row-major, y has rows entries.
using MatvecFn = void (*)(const double* W, const double* x, const double* b,
                          double* y, std::size_t rows, std::size_t cols);

/// out += W^T d. W is rows x cols row-major, d has rows entries,
/// out has cols entries.
using MatvecTAccFn = void (*)(const double* W, const double* d, double* out,
                              std::size_t rows, std::size_t cols);

/// dW += d x^T (rank-1 update). dW is rows x cols row-major.
using GerAccFn = void (*)(const double* d, const double* x, double* dW,
                          std::size_t rows, std::size_t cols);

// Dispatched entry points. Resolved before main() runs.
extern DotFn dot;
extern AxpyFn axpy;
extern MatvecFn matvec;
extern MatvecTAccFn matvec_t_acc;
extern GerAccFn ger_acc;

/// Name of the active lane: "scalar" or "avx2".
const char* active_lane();

/// Re-runs dispatch with an explicit lane name ("scalar", "avx2", or
/// nullptr for auto). Returns false if the lane is unavailable on this
/// CPU. Intended for tests; not thread-safe against concurrent kernel use.
bool select_lane(const char* name);

// Reference lane, always available. Exposed so the SIMD lane can be
// equivalence-tested against it.
namespace scalar {
double dot(const double* a, const double* b, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
void matvec(const double* W, const double* x, const double* b, double* y,
            std::size_t rows, std::size_t cols);
void matvec_t_acc(const double* W, const double* d, double* out,
                  std::size_t rows, std::size_t cols);
void ger_acc(const double* d, const double* x, double* dW, std::size_t rows,
             std::size_t cols);
} // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
bool supported();
double dot(const double* a, const double* b, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
void matvec(const double* W, const double* x, const double* b, double* y,
            std::size_t rows, std::size_t cols);
void matvec_t_acc(const double* W, const double* d, double* out,
                  std::size_t rows, std::size_t cols);
void ger_acc(const double* d, const double* x, double* dW, std::size_t rows,
             std::size_t cols);
} // namespace avx2
#endif

} // namespace symlab::kernels
