// stats.hpp -- the small statistics kit behind reports and theorem-2 checks

#pragma once

#include <cstddef>
#include <span>

namespace symlab {

double mean(std::span<const double> xs);

/// Sample standard deviation (n-1 denominator); 0 for fewer than 2 samples.
double sample_std(std::span<const double> xs);

/// Two-sided 97.5% Student-t quantile for the given degrees of freedom.
double t_quantile_975(std::size_t df);

/// Half-width of the 95% CI of the mean: t_{.975, n-1} * sd / sqrt(n);
/// 0 for fewer than 2 samples.
double ci95_halfwidth(std::span<const double> xs);

struct Summary {
    double mean = 0.0;
    double stddev = 0.0;
    double ci95 = 0.0;
    std::size_t n = 0;
};

Summary summarize(std::span<const double> xs);

} // namespace symlab
