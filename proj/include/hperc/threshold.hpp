#ifndef HPERC_THRESHOLD_HPP
#define HPERC_THRESHOLD_HPP

#include <string>
#include <utility>
#include <vector>

#include "hperc/percolation.hpp"
#include "hperc/rng.hpp"

namespace hperc {

struct PercolationProbability {
    double estimate = 0.0;
    double ci_lo = 0.0;  // Wilson 95%
    double ci_hi = 1.0;
    long long successes = 0;
    int trials = 0;
};

struct PcEstimate {
    int n = 0;
    std::string template_id;
    double p_hat = 0.0;
    double ci_lo = 0.0;  // final bisection bracket; always contains p_hat
    double ci_hi = 1.0;
    double final_level_fraction = 0.0;       // percolation fraction at the last midpoint
    double final_level_wilson_lo = 0.0;      // Wilson 95% on that fraction
    double final_level_wilson_hi = 1.0;
    int trials_per_level = 0;
    int bisection_levels = 0;
    Seed seed;
    std::string rng_name;
    bool coupled = true;
};

struct EllEstimate {
    double slope = 0.0;      // of log p_hat vs log n
    double intercept = 0.0;
    double ell_hat = 0.0;    // -slope
    double residual_rms = 0.0;
    std::vector<std::pair<int, double>> points;  // (n, p_hat)
};

// Fraction of `trials` seeded samples of G(n,p) that H-percolate.
// Trial i uses the child stream (seed, i).
PercolationProbability percolation_probability(int n, const TemplateGraph& h, double p,
                                               int trials, const Seed& seed, int threads = 1);

// Stochastic bisection for the p where the percolation probability crosses 1/2,
// on the initial bracket [n^-2, 1]. Coupled mode (default) reuses one uniform
// pair-matrix per trial across all levels, which makes each trial's outcome
// monotone in p. Throws std::domain_error when v_H > n (bracket failure).
PcEstimate estimate_pc(int n, const TemplateGraph& h, int trials_per_level, int levels,
                       const Seed& seed, int threads = 1, bool coupled = true);

// Least-squares fit of log p_hat against log n over the given sizes.
EllEstimate estimate_ell(const TemplateGraph& h, const std::vector<int>& n_list,
                         int trials_per_level, int levels, const Seed& seed, int threads = 1,
                         bool coupled = true);

}  // namespace hperc

#endif
