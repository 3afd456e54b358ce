// lbfgs.hpp -- limited-memory BFGS with strong-Wolfe line search

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "symlab/errors.hpp"

namespace symlab {

struct LbfgsConfig {
    std::size_t memory = 10;            // stored (s, y) pairs
    std::size_t max_iterations = 100;   // outer iterations
    double grad_tolerance = 1e-5;       // infinity norm
    double wolfe_c1 = 1e-4;             // sufficient decrease
    double wolfe_c2 = 0.9;              // curvature
    std::size_t max_line_search_steps = 20; // evaluations per line search
    std::string trace_path;             // per-iteration CSV when non-empty
};

void validate(const LbfgsConfig& config);

enum class Termination { converged, iteration_cap, line_search_failure };

const char* to_string(Termination t);

struct OptimizeResult {
    std::vector<double> final_point;
    double final_value = 0.0;
    double final_grad_norm = 0.0; // infinity norm
    std::size_t iterations_used = 0;
    Termination termination = Termination::converged;
    std::size_t function_evals = 0;
};

/// Evaluates f(x) and writes the gradient into grad_out (same length as x).
using ValueGradFn =
    std::function<double(std::span<const double> x, std::span<double> grad_out)>;

/// One record per accepted step. dir_deriv_* are g.d at the step's start and
/// end; together with f_before/f_after they let callers audit the Wolfe
/// conditions.
struct IterationInfo {
    std::size_t iteration;
    double f_before;
    double f_after;
    double dir_deriv_start;
    double dir_deriv_end;
    double step_length;
    double grad_inf_norm;
};
using IterationObserver = std::function<void(const IterationInfo&)>;

struct CurvaturePair {
    std::vector<double> s; // x_{k+1} - x_k
    std::vector<double> y; // g_{k+1} - g_k
    double rho;            // 1 / (s.y)
};

/// Two-loop recursion: -H g with the usual gamma = s.y / y.y initial
/// scaling (gamma = 1 with empty history, i.e. steepest descent). History is
/// ordered oldest to newest; every pair must satisfy s.y > 0.
std::vector<double> two_loop_direction(std::span<const CurvaturePair> history,
                                       std::span<const double> grad);

/// Minimizes fg from x0. Each accepted step satisfies the strong Wolfe
/// conditions, so the objective sequence is non-increasing. On line-search
/// failure the best point seen so far is returned with the termination label
/// set accordingly. Throws NumericError if fg ever produces a non-finite
/// value or gradient.
OptimizeResult minimize(const ValueGradFn& fg, std::vector<double> x0,
                        const LbfgsConfig& config = {},
                        const IterationObserver& observer = {});

} // namespace symlab
