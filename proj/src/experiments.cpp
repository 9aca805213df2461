#include "hperc/experiments.hpp"

#include <cmath>
#include <mutex>
#include <thread>

#include "hperc/stats.hpp"

namespace hperc {

namespace {

struct Tally {
    long long strict = 0;
    long long balanced_not_strict = 0;
    long long unbalanced = 0;
    long long with_low_degree_witness = 0;
    std::map<int, long long> witness_sizes;

    void merge(const Tally& o) {
        strict += o.strict;
        balanced_not_strict += o.balanced_not_strict;
        unbalanced += o.unbalanced;
        with_low_degree_witness += o.with_low_degree_witness;
        for (auto [s, c] : o.witness_sizes) witness_sizes[s] += c;
    }
};

void classify_sample(int k, double alpha, const Seed& stream, bool force_large,
                     Tally& tally) {
    Graph g = sample_gnp(k, alpha, stream);
    TemplateGraph h = TemplateGraph::from_graph(std::move(g));
    BalanceReport rep = analyze_balance(h, force_large);
    if (rep.strictly_balanced)
        ++tally.strict;
    else if (rep.balanced)
        ++tally.balanced_not_strict;
    else
        ++tally.unbalanced;
    if (rep.violating_witness)
        ++tally.witness_sizes[static_cast<int>(rep.violating_witness->first.size())];
    if (k >= 4 && low_degree_witness(h)) ++tally.with_low_degree_witness;
}

Tally classify_all(int k, double alpha, int samples, const Seed& seed, int threads,
                   bool force_large) {
    if (samples < 1) throw std::domain_error("samples must be >= 1");
    if (k < 3) throw std::domain_error("k must be >= 3");
    if (k > kAnalyzerGuardVertices && !force_large)
        throw std::domain_error("k exceeds the analyzer guard");
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw std::domain_error("alpha must lie in [0,1]");

    threads = std::max(1, std::min(threads, samples));
    if (threads == 1) {
        Tally tally;
        for (int i = 0; i < samples; ++i)
            classify_sample(k, alpha, child_seed(seed, i), force_large, tally);
        return tally;
    }
    Tally total;
    std::mutex mu;
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            Tally local;
            for (int i = t; i < samples; i += threads)
                classify_sample(k, alpha, child_seed(seed, i), force_large, local);
            std::lock_guard<std::mutex> lk(mu);
            total.merge(local);
        });
    }
    for (auto& th : pool) th.join();
    return total;
}

}  // namespace

BalanceStats sample_balance_stats(int k, double alpha, int samples, const Seed& seed,
                                  int threads, bool force_large) {
    Tally tally = classify_all(k, alpha, samples, seed, threads, force_large);
    BalanceStats stats;
    stats.k = k;
    stats.alpha = alpha;
    stats.samples = samples;
    const double inv = 1.0 / samples;
    stats.frac_strictly_balanced = tally.strict * inv;
    stats.frac_balanced_not_strict = tally.balanced_not_strict * inv;
    stats.frac_unbalanced = tally.unbalanced * inv;
    stats.frac_with_low_degree_witness = tally.with_low_degree_witness * inv;
    stats.witness_size_histogram = std::move(tally.witness_sizes);
    stats.seed = seed;
    return stats;
}

std::optional<int> low_degree_witness(const TemplateGraph& h) {
    const int k = h.vertex_count();
    if (k < 4) throw std::domain_error("low_degree_witness requires at least 4 vertices");
    const long long e = h.edge_count();
    for (int v = 0; v < k; ++v) {
        // (e - deg(v) - 1)/(k-3) > (e - 2)/(k-2), exact cross-multiplication.
        const long long lhs = (e - h.degrees[v] - 1) * (k - 2);
        const long long rhs = (e - 2) * (k - 3);
        if (lhs > rhs) return v;
    }
    return std::nullopt;
}

double binomial_lower_tail(int k, double alpha, double threshold) {
    if (k < 0) throw std::domain_error("k must be nonnegative");
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw std::domain_error("alpha must lie in [0,1]");
    const int t = static_cast<int>(std::floor(threshold));
    if (t < 0) return 0.0;
    if (t >= k) return 1.0;
    if (alpha == 0.0) return 1.0;
    if (alpha == 1.0) return 0.0;

    // Multiplicative pmf recurrence; exact in binary for dyadic alpha, and
    // more accurate than lgamma sums elsewhere. Falls back to log space only
    // if the first mass underflows.
    double term = std::pow(1.0 - alpha, k);
    if (term > 0.0) {
        const double ratio = alpha / (1.0 - alpha);
        double sum = term;
        for (int i = 0; i < t; ++i) {
            term *= ratio * (k - i) / (i + 1);
            sum += term;
        }
        return std::min(sum, 1.0);
    }
    const double la = std::log(alpha);
    const double l1a = std::log1p(-alpha);
    const double lg = std::lgamma(k + 1.0);
    double sum = 0.0;
    for (int i = 0; i <= t; ++i)
        sum += std::exp(lg - std::lgamma(i + 1.0) - std::lgamma(k - i + 1.0) + i * la +
                        (k - i) * l1a);
    return std::min(sum, 1.0);
}

std::vector<AlphaSweepRow> alpha_sweep(int k, const std::vector<double>& alpha_list,
                                       int samples, const Seed& seed, int threads,
                                       bool force_large) {
    std::vector<AlphaSweepRow> rows;
    rows.reserve(alpha_list.size());
    for (std::size_t i = 0; i < alpha_list.size(); ++i) {
        const double alpha = alpha_list[i];
        if (!(alpha > 0.0 && alpha <= 1.0))
            throw std::domain_error("sweep alphas must lie in (0,1]");
        BalanceStats stats =
            sample_balance_stats(k, alpha, samples, child_seed(seed, i), threads, force_large);
        AlphaSweepRow row;
        row.k = k;
        row.alpha = alpha;
        row.a_equivalent = alpha * k / std::log(static_cast<double>(k));
        row.frac_strictly_balanced = stats.frac_strictly_balanced;
        const long long succ =
            static_cast<long long>(std::llround(stats.frac_strictly_balanced * samples));
        std::tie(row.ci_lo, row.ci_hi) = wilson_interval(succ, samples);
        row.samples = samples;
        rows.push_back(row);
    }
    return rows;
}

std::map<int, long long> witness_location_report(int k, double alpha, int samples,
                                                 const Seed& seed, int threads,
                                                 bool force_large) {
    return sample_balance_stats(k, alpha, samples, seed, threads, force_large)
        .witness_size_histogram;
}

}  // namespace hperc
