#ifndef HPERC_STATS_HPP
#define HPERC_STATS_HPP

#include <cmath>
#include <utility>

namespace hperc {

// Wilson score interval for a binomial proportion, 95% by default.
inline std::pair<double, double> wilson_interval(long long successes, long long trials,
                                                 double z = 1.959963984540054) {
    if (trials <= 0) return {0.0, 1.0};
    const double n = static_cast<double>(trials);
    const double phat = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (phat + z2 / (2.0 * n)) / denom;
    const double half =
        (z / denom) * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n));
    double lo = center - half, hi = center + half;
    if (lo < 0.0) lo = 0.0;
    if (hi > 1.0) hi = 1.0;
    return {lo, hi};
}

}  // namespace hperc

#endif
