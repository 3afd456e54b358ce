#include "symlab/lbfgs.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include "symlab/kernels.hpp"

namespace symlab {

void validate(const LbfgsConfig& config) {
    if (config.memory < 1) throw Error("lbfgs memory must be >= 1");
    if (config.max_iterations < 1) throw Error("max_iterations must be >= 1");
    if (!(config.wolfe_c1 > 0.0 && config.wolfe_c1 < config.wolfe_c2 &&
          config.wolfe_c2 < 1.0)) {
        throw Error("wolfe constants must satisfy 0 < c1 < c2 < 1");
    }
    if (config.max_line_search_steps < 1) {
        throw Error("max_line_search_steps must be >= 1");
    }
    if (config.grad_tolerance < 0.0) throw Error("grad_tolerance must be >= 0");
}

const char* to_string(Termination t) {
    switch (t) {
        case Termination::converged: return "converged";
        case Termination::iteration_cap: return "iteration-cap";
        case Termination::line_search_failure: return "line-search-failure";
    }
    return "?";
}

namespace {

double inf_norm(std::span<const double> v) {
    double m = 0.0;
    for (const double x : v) m = std::max(m, std::abs(x));
    return m;
}

double norm2(std::span<const double> v) {
    return std::sqrt(kernels::dot(v.data(), v.data(), v.size()));
}

void check_finite(double f, std::span<const double> g,
                  std::span<const double> x) {
    if (std::isfinite(f)) {
        bool ok = true;
        for (const double gi : g) {
            if (!std::isfinite(gi)) {
                ok = false;
                break;
            }
        }
        if (ok) return;
    }
    std::string msg = "non-finite objective or gradient at point (";
    char buf[32];
    for (std::size_t i = 0; i < std::min<std::size_t>(x.size(), 8); ++i) {
        std::snprintf(buf, sizeof buf, "%s%.6g", i ? ", " : "", x[i]);
        msg += buf;
    }
    if (x.size() > 8) msg += ", ...";
    msg += ")";
    throw NumericError(msg);
}

/// Minimizer of the cubic interpolant through (a0, f0, d0), (a1, f1, d1);
/// NaN when the data does not pin down an interior minimum.
double cubic_minimizer(double a0, double f0, double d0, double a1, double f1,
                       double d1) {
    const double h = d0 + d1 - 3.0 * (f0 - f1) / (a0 - a1);
    const double disc = h * h - d0 * d1;
    if (disc < 0.0) return std::numeric_limits<double>::quiet_NaN();
    const double sign = a1 > a0 ? 1.0 : -1.0;
    const double s = sign * std::sqrt(disc);
    const double denom = d1 - d0 + 2.0 * s;
    if (denom == 0.0) return std::numeric_limits<double>::quiet_NaN();
    return a1 - (a1 - a0) * (d1 + s - h) / denom;
}

struct Evaluator {
    const ValueGradFn& fg;
    std::span<const double> x0;
    std::span<const double> d;
    std::vector<double> xt, gt;
    std::size_t evals = 0;
    // best trial seen, for the line-search-failure fallback
    double best_f = std::numeric_limits<double>::infinity();
    std::vector<double> best_x;

    Evaluator(const ValueGradFn& fn, std::span<const double> x,
              std::span<const double> dir)
        : fg(fn), x0(x), d(dir), xt(x.size()), gt(x.size()) {}

    /// phi(alpha) and phi'(alpha) along d; keeps xt/gt at the evaluated point.
    std::pair<double, double> operator()(double alpha) {
        for (std::size_t i = 0; i < x0.size(); ++i) xt[i] = x0[i] + alpha * d[i];
        const double f = fg(xt, gt);
        ++evals;
        check_finite(f, gt, xt);
        if (f < best_f) {
            best_f = f;
            best_x = xt;
        }
        return {f, kernels::dot(gt.data(), d.data(), d.size())};
    }
};

struct LineSearchOutcome {
    bool ok = false;
    double alpha = 0.0;
    double f = 0.0;
    double dphi = 0.0; // g_new . d
};

/// Strong Wolfe search (bracket + zoom with cubic interpolation). On
/// success the evaluator's xt/gt hold the accepted point.
LineSearchOutcome strong_wolfe(Evaluator& eval, double phi0, double dphi0,
                               double alpha_init, const LbfgsConfig& cfg) {
    const double c1 = cfg.wolfe_c1;
    const double c2 = cfg.wolfe_c2;
    const std::size_t budget = cfg.max_line_search_steps;
    constexpr double kAlphaMax = 1e20;

    const auto armijo_fails = [&](double alpha, double phi) {
        return phi > phi0 + c1 * alpha * dphi0;
    };
    const auto curvature_holds = [&](double dphi) {
        return std::abs(dphi) <= -c2 * dphi0;
    };

    // zoom keeps a bracketing interval [lo, hi] (not necessarily ordered)
    // with phi(lo) the lowest value satisfying Armijo
    const auto zoom = [&](double alo, double flo, double dlo, double ahi,
                          double fhi, double dhi) -> LineSearchOutcome {
        while (eval.evals < budget) {
            const double lo = std::min(alo, ahi);
            const double hi = std::max(alo, ahi);
            const double width = hi - lo;
            if (width <= 1e-16 * std::max(1.0, hi)) break;
            double a = cubic_minimizer(alo, flo, dlo, ahi, fhi, dhi);
            if (!(a > lo + 0.1 * width && a < hi - 0.1 * width)) {
                a = lo + 0.5 * width;
            }
            const auto [fa, da] = eval(a);
            if (armijo_fails(a, fa) || fa >= flo) {
                ahi = a;
                fhi = fa;
                dhi = da;
            } else {
                if (curvature_holds(da)) return {true, a, fa, da};
                if (da * (ahi - alo) >= 0.0) {
                    ahi = alo;
                    fhi = flo;
                    dhi = dlo;
                }
                alo = a;
                flo = fa;
                dlo = da;
            }
        }
        return {};
    };

    double a_prev = 0.0;
    double f_prev = phi0;
    double d_prev = dphi0;
    double a = std::min(alpha_init, kAlphaMax);
    for (bool first = true; eval.evals < budget; first = false) {
        const auto [fa, da] = eval(a);
        if (armijo_fails(a, fa) || (!first && fa >= f_prev)) {
            return zoom(a_prev, f_prev, d_prev, a, fa, da);
        }
        if (curvature_holds(da)) return {true, a, fa, da};
        if (da >= 0.0) {
            return zoom(a, fa, da, a_prev, f_prev, d_prev);
        }
        if (a >= kAlphaMax) break;
        a_prev = a;
        f_prev = fa;
        d_prev = da;
        a = std::min(2.0 * a, kAlphaMax);
    }
    return {};
}

} // namespace

std::vector<double> two_loop_direction(std::span<const CurvaturePair> history,
                                       std::span<const double> grad) {
    if (grad.empty()) throw Error("two_loop_direction needs a non-empty gradient");
    const std::size_t n = grad.size();
    std::vector<double> q(grad.begin(), grad.end());
    std::vector<double> alpha(history.size());
    for (std::size_t i = history.size(); i-- > 0;) {
        const CurvaturePair& p = history[i];
        alpha[i] = p.rho * kernels::dot(p.s.data(), q.data(), n);
        kernels::axpy(-alpha[i], p.y.data(), q.data(), n);
    }
    double gamma = 1.0;
    if (!history.empty()) {
        const CurvaturePair& last = history.back();
        gamma = 1.0 / (last.rho * kernels::dot(last.y.data(), last.y.data(), n));
    }
    for (double& qi : q) qi *= gamma;
    for (std::size_t i = 0; i < history.size(); ++i) {
        const CurvaturePair& p = history[i];
        const double beta = p.rho * kernels::dot(p.y.data(), q.data(), n);
        kernels::axpy(alpha[i] - beta, p.s.data(), q.data(), n);
    }
    for (double& qi : q) qi = -qi;
    return q;
}

OptimizeResult minimize(const ValueGradFn& fg, std::vector<double> x0,
                        const LbfgsConfig& config,
                        const IterationObserver& observer) {
    validate(config);
    if (x0.empty()) throw Error("cannot minimize over an empty point");
    const std::size_t n = x0.size();

    std::ofstream trace;
    char row[128];
    const auto trace_row = [&](std::size_t iter, double f, double ginf,
                               double step) {
        if (config.trace_path.empty()) return;
        if (!trace.is_open()) {
            trace.open(config.trace_path);
            trace << "iteration,f,grad_inf,step\n";
        }
        std::snprintf(row, sizeof row, "%zu,%.17g,%.17g,%.17g\n", iter, f, ginf, step);
        trace << row;
    };

    std::vector<double> x = std::move(x0);
    std::vector<double> g(n);
    double f = fg(x, g);
    std::size_t evals = 1;
    check_finite(f, g, x);
    double ginf = inf_norm(g);
    trace_row(0, f, ginf, 0.0);

    OptimizeResult result;
    result.termination = Termination::iteration_cap;
    result.iterations_used = config.max_iterations;

    std::vector<CurvaturePair> history; // oldest first; erase moves, not copies

    if (ginf <= config.grad_tolerance) {
        result.termination = Termination::converged;
        result.iterations_used = 0;
    } else {
        for (std::size_t iter = 1; iter <= config.max_iterations; ++iter) {
            std::vector<double> d = two_loop_direction(history, g);
            double gd = kernels::dot(g.data(), d.data(), n);
            if (gd >= 0.0) {
                // curvature information went stale; restart from steepest descent
                history.clear();
                for (std::size_t i = 0; i < n; ++i) d[i] = -g[i];
                gd = -kernels::dot(g.data(), g.data(), n);
            }

            const double alpha_init =
                iter == 1 ? 1.0 / std::max(norm2(d), 1e-30) : 1.0;

            Evaluator eval(fg, x, d);
            const LineSearchOutcome ls = strong_wolfe(eval, f, gd, alpha_init, config);
            result.function_evals += eval.evals;

            if (!ls.ok) {
                result.termination = Termination::line_search_failure;
                result.iterations_used = iter;
                if (eval.best_f < f) {
                    x = std::move(eval.best_x);
                    std::vector<double> gb(n);
                    f = fg(x, gb);
                    ++result.function_evals;
                    check_finite(f, gb, x);
                    g = std::move(gb);
                    ginf = inf_norm(g);
                }
                break;
            }

            CurvaturePair pair;
            pair.s.resize(n);
            pair.y.resize(n);
            for (std::size_t i = 0; i < n; ++i) {
                pair.s[i] = eval.xt[i] - x[i];
                pair.y[i] = eval.gt[i] - g[i];
            }
            const double sy = kernels::dot(pair.s.data(), pair.y.data(), n);
            if (sy > 1e-10 * norm2(pair.s) * norm2(pair.y)) {
                pair.rho = 1.0 / sy;
                history.push_back(std::move(pair));
                if (history.size() > config.memory) history.erase(history.begin());
            }

            const double f_before = f;
            x.swap(eval.xt);
            g.swap(eval.gt);
            f = ls.f;
            ginf = inf_norm(g);

            trace_row(iter, f, ginf, ls.alpha);
            if (observer) {
                observer(IterationInfo{iter, f_before, f, gd, ls.dphi, ls.alpha, ginf});
            }

            if (ginf <= config.grad_tolerance) {
                result.termination = Termination::converged;
                result.iterations_used = iter;
                break;
            }
        }
    }

    result.final_point = std::move(x);
    result.final_value = f;
    result.final_grad_norm = ginf;
    result.function_evals += evals;
    return result;
}

} // namespace symlab
