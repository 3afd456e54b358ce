#include "symlab/stats.hpp"

#include <cmath>

#include <boost/math/distributions/students_t.hpp>

namespace symlab {

double mean(std::span<const double> xs) {
    if (xs.empty()) return 0.0;
    double acc = 0.0;
    for (const double x : xs) acc += x;
    return acc / static_cast<double>(xs.size());
}

double sample_std(std::span<const double> xs) {
    if (xs.size() < 2) return 0.0;
    const double m = mean(xs);
    double acc = 0.0;
    for (const double x : xs) acc += (x - m) * (x - m);
    return std::sqrt(acc / static_cast<double>(xs.size() - 1));
}

double t_quantile_975(std::size_t df) {
    const boost::math::students_t dist(static_cast<double>(df));
    return boost::math::quantile(dist, 0.975);
}

double ci95_halfwidth(std::span<const double> xs) {
    if (xs.size() < 2) return 0.0;
    const double sd = sample_std(xs);
    return t_quantile_975(xs.size() - 1) * sd / std::sqrt(static_cast<double>(xs.size()));
}

Summary summarize(std::span<const double> xs) {
    return Summary{mean(xs), sample_std(xs), ci95_halfwidth(xs), xs.size()};
}

} // namespace symlab
