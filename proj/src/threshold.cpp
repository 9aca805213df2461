#include "hperc/threshold.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "hperc/stats.hpp"

namespace hperc {

namespace {

// Runs `count` independent trials split across threads; the result is a plain
// success count, so scheduling never affects the outcome.
template <typename TrialFn>
long long count_successes(int count, int threads, TrialFn&& trial) {
    threads = std::max(1, std::min(threads, count));
    if (threads == 1) {
        long long succ = 0;
        for (int i = 0; i < count; ++i)
            if (trial(i)) ++succ;
        return succ;
    }
    std::atomic<long long> succ{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            long long local = 0;
            for (int i = t; i < count; i += threads)
                if (trial(i)) ++local;
            succ += local;
        });
    }
    for (auto& th : pool) th.join();
    return succ.load();
}

}  // namespace

PercolationProbability percolation_probability(int n, const TemplateGraph& h, double p,
                                               int trials, const Seed& seed, int threads) {
    if (trials < 1) throw std::domain_error("trials must be >= 1");
    if (!(p >= 0.0 && p <= 1.0))
        throw std::domain_error("edge probability must lie in [0,1]");
    if (h.vertex_count() > n) throw std::domain_error("template larger than host graph");

    long long succ = count_successes(trials, threads, [&](int i) {
        Graph g = sample_gnp(n, p, child_seed(seed, static_cast<std::uint64_t>(i)));
        return percolates(g, h);
    });
    auto [lo, hi] = wilson_interval(succ, trials);
    return {static_cast<double>(succ) / trials, lo, hi, succ, trials};
}

PcEstimate estimate_pc(int n, const TemplateGraph& h, int trials_per_level, int levels,
                       const Seed& seed, int threads, bool coupled) {
    if (levels < 1) throw std::domain_error("levels must be >= 1");
    if (trials_per_level < 1) throw std::domain_error("trials_per_level must be >= 1");
    if (h.vertex_count() > n)
        throw std::domain_error(
            "bracket failure: template larger than host graph, percolation probability "
            "stays below 1/2 on (0,1)");

    double lo = 1.0 / (static_cast<double>(n) * n);
    double hi = 1.0;
    long long last_succ = 0;
    // Coupled mode: trial t reuses one uniform pair-matrix at every level, so
    // its outcome is monotone in p. Outcomes already implied by a previous
    // level are reused instead of re-running the closure; the counts are
    // identical to direct evaluation.
    std::vector<double> known_fail(coupled ? trials_per_level : 0, -1.0);
    std::vector<double> known_succ(coupled ? trials_per_level : 0, 2.0);
    for (int level = 0; level < levels; ++level) {
        const double mid = 0.5 * (lo + hi);
        const Seed level_seed = coupled ? seed : child_seed(seed, 0x10000000ULL + level);
        long long succ = count_successes(trials_per_level, threads, [&](int i) {
            if (coupled) {
                if (mid >= known_succ[i]) return true;
                if (mid <= known_fail[i]) return false;
            }
            auto u = pair_uniforms(n, child_seed(level_seed, static_cast<std::uint64_t>(i)));
            Graph g = graph_from_uniforms(n, u, mid);
            bool perc = percolates(g, h);
            if (coupled) {
                if (perc)
                    known_succ[i] = mid;
                else
                    known_fail[i] = mid;
            }
            return perc;
        });
        last_succ = succ;
        if (static_cast<double>(succ) / trials_per_level >= 0.5)
            hi = mid;
        else
            lo = mid;
    }

    PcEstimate est;
    est.n = n;
    est.template_id = h.id;
    est.p_hat = 0.5 * (lo + hi);
    est.ci_lo = lo;
    est.ci_hi = hi;
    est.final_level_fraction = static_cast<double>(last_succ) / trials_per_level;
    std::tie(est.final_level_wilson_lo, est.final_level_wilson_hi) =
        wilson_interval(last_succ, trials_per_level);
    est.trials_per_level = trials_per_level;
    est.bisection_levels = levels;
    est.seed = seed;
    est.rng_name = kRngName;
    est.coupled = coupled;
    return est;
}

EllEstimate estimate_ell(const TemplateGraph& h, const std::vector<int>& n_list,
                         int trials_per_level, int levels, const Seed& seed, int threads,
                         bool coupled) {
    if (n_list.size() < 3) throw std::domain_error("need at least 3 sizes");
    if (!std::is_sorted(n_list.begin(), n_list.end()) ||
        std::adjacent_find(n_list.begin(), n_list.end()) != n_list.end())
        throw std::domain_error("sizes must be strictly increasing");

    EllEstimate est;
    std::vector<double> xs, ys;
    for (std::size_t i = 0; i < n_list.size(); ++i) {
        PcEstimate pc = estimate_pc(n_list[i], h, trials_per_level, levels,
                                    child_seed(seed, i), threads, coupled);
        est.points.emplace_back(n_list[i], pc.p_hat);
        xs.push_back(std::log(static_cast<double>(n_list[i])));
        ys.push_back(std::log(pc.p_hat));
    }

    const double m = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    const double denom = m * sxx - sx * sx;
    est.slope = (m * sxy - sx * sy) / denom;
    est.intercept = (sy - est.slope * sx) / m;
    est.ell_hat = -est.slope;
    double ss = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double r = ys[i] - (est.intercept + est.slope * xs[i]);
        ss += r * r;
    }
    est.residual_rms = std::sqrt(ss / m);
    return est;
}

}  // namespace hperc
