#ifndef HPERC_EXPERIMENTS_HPP
#define HPERC_EXPERIMENTS_HPP

#include <map>
#include <optional>
#include <vector>

#include "hperc/balance.hpp"
#include "hperc/rng.hpp"

namespace hperc {

// Classification of `samples` random templates G(k,alpha).
struct BalanceStats {
    int k = 0;
    double alpha = 0.0;
    int samples = 0;
    double frac_strictly_balanced = 0.0;
    double frac_balanced_not_strict = 0.0;
    double frac_unbalanced = 0.0;
    // Fraction of all samples that have a low-degree witness vertex (k >= 4).
    double frac_with_low_degree_witness = 0.0;
    // Witness subset size v_F -> count, over samples failing strict balance.
    std::map<int, long long> witness_size_histogram;
    Seed seed;
};

struct AlphaSweepRow {
    int k = 0;
    double alpha = 0.0;
    double a_equivalent = 0.0;  // alpha * k / ln k
    double frac_strictly_balanced = 0.0;
    double ci_lo = 0.0;  // Wilson 95%
    double ci_hi = 1.0;
    int samples = 0;
};

// Sample i uses the child stream (seed, i); classification is exact rational
// arithmetic via the balance analyzer.
// `force_large` lifts the analyzer size guard (k may then go up to 32).
BalanceStats sample_balance_stats(int k, double alpha, int samples, const Seed& seed,
                                  int threads = 1, bool force_large = false);

// Smallest-index vertex v whose removal leaves a subgraph violating the
// balance inequality: (e_H - deg(v) - 1)/(k-3) > (e_H - 2)/(k-2).
// Requires v_H >= 4.
std::optional<int> low_degree_witness(const TemplateGraph& h);

// P(Bin(k, alpha) <= floor(threshold)), log-space accumulation.
double binomial_lower_tail(int k, double alpha, double threshold);

std::vector<AlphaSweepRow> alpha_sweep(int k, const std::vector<double>& alpha_list,
                                       int samples, const Seed& seed, int threads = 1,
                                       bool force_large = false);

// Histogram over v_F of the first maximal-ratio witness among samples that
// fail strict balance. Same sample stream as sample_balance_stats.
std::map<int, long long> witness_location_report(int k, double alpha, int samples,
                                                 const Seed& seed, int threads = 1,
                                                 bool force_large = false);

}  // namespace hperc

#endif
