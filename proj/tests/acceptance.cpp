// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Statistical criteria use fixed seeds, so reruns are deterministic.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "hperc/experiments.hpp"
#include "hperc/io_util.hpp"
#include "hperc/percolation.hpp"
#include "hperc/threshold.hpp"
#include "oracles.hpp"

using namespace hperc;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void report(int idx, const std::string& name, bool ok, const std::string& detail,
            double seconds) {
    std::printf("%s: criterion %d (%s) %s [%.1fs]\n", ok ? "PASS" : "FAIL", idx,
                name.c_str(), detail.c_str(), seconds);
    std::fflush(stdout);
    if (!ok) ++failures;
}

double timed(std::function<void()> fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Graph graph_from_mask(int n, std::uint32_t mask) {
    Graph g(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if (mask & (1u << bit)) g.add_edge(u, v);
    return g;
}

// 1. Oracle equivalence on every labeled graph with 3..6 vertices.
void criterion1() {
    bool ok = true;
    long long count = 0;
    std::string detail;
    double secs = timed([&] {
        for (int n = 3; n <= 6 && ok; ++n) {
            const int pairs = n * (n - 1) / 2;
            for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
                Graph g = graph_from_mask(n, mask);
                TemplateGraph h = TemplateGraph::from_graph(g);
                auto naive = oracles::naive_balance(g);
                auto [bal, wb] = is_balanced(h);
                auto [strict, ws] = is_strictly_balanced(h);
                auto [lstar, mins] = lambda_star(h);
                Fraction lam = lambda(h);
                bool sample_ok = bal == naive.balanced && strict == naive.strictly_balanced &&
                                 lstar == naive.lambda_star;
                // The lambda relations need an edge (the sole exception below
                // 7 vertices is the edgeless graph on 3).
                if (g.edge_count() >= 1)
                    sample_ok = sample_ok && lstar <= lam && ((lstar == lam) == bal);
                ++count;
                if (!sample_ok) {
                    ok = false;
                    detail = "mismatch at n=" + std::to_string(n) +
                             " mask=" + std::to_string(mask);
                    break;
                }
            }
        }
    });
    if (ok) detail = std::to_string(count) + " graphs, all matched, lambda*<=lambda held";
    report(1, "balance oracle equivalence", ok && secs < 300.0, detail, secs);
}

// 2. Closure correctness: anchored search vs brute force; strategy and
// order-independence equivalences.
void criterion2() {
    bool ok = true;
    std::string detail = "2000 embedding checks, 500 strategy pairs, 500 order pairs";
    double secs = timed([&] {
        SplitMix64 rng(Seed{60221023, 0});
        int checked = 0;
        while (checked < 2000 && ok) {
            int n = 4 + static_cast<int>(rng.next_u64() % 4);
            int k = 3 + static_cast<int>(rng.next_u64() % 3);
            if (k > n) continue;
            Graph g = oracles::random_graph(n, rng.next_uniform(), rng);
            Graph hg = oracles::random_graph(k, 0.3 + 0.7 * rng.next_uniform(), rng);
            if (hg.edge_count() == 0) continue;
            TemplateGraph h = TemplateGraph::from_graph(hg);
            int u = static_cast<int>(rng.next_u64() % n);
            int v = static_cast<int>(rng.next_u64() % n);
            if (u == v || g.has_edge(u, v)) continue;
            Graph ge = g;
            ge.add_edge(u, v);
            if (edge_completes_copy(g, h, u, v) !=
                oracles::brute_force_copy_through(ge, h, u, v)) {
                ok = false;
                detail = "embedding mismatch at instance " + std::to_string(checked);
            }
            ++checked;
        }

        TemplateGraph templates[] = {TemplateGraph::clique(3), TemplateGraph::clique(4),
                                     TemplateGraph::path(4), TemplateGraph::cycle(5)};
        for (int rep = 0; rep < 500 && ok; ++rep) {
            int n = 5 + static_cast<int>(rng.next_u64() % 8);
            Graph g = oracles::random_graph(n, rng.next_uniform(), rng);
            const TemplateGraph& h = templates[rep % 4];
            ClosureResult a = closure(g, h, ClosureStrategy::baseline);
            ClosureResult b = closure(g, h, ClosureStrategy::worklist);
            if (!(a.final_graph == b.final_graph && a.rounds == b.rounds)) {
                ok = false;
                detail = "strategy divergence at instance " + std::to_string(rep);
            }
        }

        for (int rep = 0; rep < 500 && ok; ++rep) {
            int n = 4 + static_cast<int>(rng.next_u64() % 7);
            Graph g = oracles::random_graph(n, rng.next_uniform(), rng);
            const TemplateGraph& h = templates[rep % 4];
            Graph cur = g;
            for (;;) {
                std::vector<Edge> addable;
                for (int x = 0; x < n; ++x)
                    for (int y = x + 1; y < n; ++y)
                        if (!cur.has_edge(x, y) && edge_completes_copy(cur, h, x, y))
                            addable.emplace_back(x, y);
                if (addable.empty()) break;
                auto [x, y] = addable[rng.next_u64() % addable.size()];
                cur.add_edge(x, y);
            }
            if (!(cur == closure(g, h).final_graph)) {
                ok = false;
                detail = "sequential/parallel divergence at instance " + std::to_string(rep);
            }
        }
    });
    report(2, "closure correctness", ok, detail, secs);
}

// 3. K_3 percolation is connectivity.
void criterion3() {
    bool ok = true;
    std::string detail = "1000 graphs, zero mismatches";
    double secs = timed([&] {
        TemplateGraph k3 = TemplateGraph::clique(3);
        SplitMix64 rng(Seed{112358, 0});
        for (int rep = 0; rep < 1000; ++rep) {
            int n = 3 + static_cast<int>(rng.next_u64() % 18);
            Graph g = oracles::random_graph(n, 2.5 * rng.next_uniform() / n, rng);
            if (percolates(g, k3) != oracles::connected(g)) {
                ok = false;
                detail = "mismatch at instance " + std::to_string(rep);
                break;
            }
        }
    });
    report(3, "triangle percolation = connectivity", ok, detail, secs);
}

// 4. Desk-scale clique exponents.
void criterion4() {
    bool ok = true;
    std::string detail;
    double secs = timed([&] {
        const std::vector<int> ns = {64, 128, 256, 512};
        EllEstimate e4 = estimate_ell(TemplateGraph::clique(4), ns, 400, 15, Seed{40404, 0});
        EllEstimate e3 = estimate_ell(TemplateGraph::clique(3), ns, 400, 15, Seed{30303, 0});
        // Ranges pinned from pilot runs at this n range. Both exponents sit
        // well above their n->infinity limits (1/2 and 1): the polylog factor
        // in p_c contributes roughly +1/ln n to the local log-log slope, and
        // K_4 additionally carries a strong finite-size constant at n=64.
        bool ok4 = e4.ell_hat >= 0.65 && e4.ell_hat <= 0.95;
        bool ok3 = e3.ell_hat >= 0.7 && e3.ell_hat <= 1.1;
        ok = ok3 && ok4;
        char buf[128];
        std::snprintf(buf, sizeof buf, "ell(K4)=%.3f in [0.65,0.95]; ell(K3)=%.3f in [0.7,1.1]",
                      e4.ell_hat, e3.ell_hat);
        detail = buf;
    });
    report(4, "clique exponents at desk scale", ok && secs < 1800.0, detail, secs);
}

// 5. Random-template proposition at desk scale.
void criterion5() {
    bool ok = true;
    std::string detail;
    double secs = timed([&] {
        const int samples = 1000;
        std::vector<int> ks = {8, 10, 12, 14};
        std::vector<double> fracs;
        std::ostringstream msg;
        for (std::size_t i = 0; i < ks.size(); ++i) {
            BalanceStats s = sample_balance_stats(ks[i], 0.5, samples,
                                                  Seed{50500 + static_cast<std::uint64_t>(i), 0});
            fracs.push_back(s.frac_strictly_balanced);
        }
        msg << "frac_strict(k=8,10,12,14)=";
        for (double f : fracs) msg << f << " ";
        for (std::size_t i = 0; i + 1 < fracs.size(); ++i) {
            double se = std::sqrt(fracs[i] * (1 - fracs[i]) / samples) +
                        std::sqrt(fracs[i + 1] * (1 - fracs[i + 1]) / samples);
            if (fracs[i + 1] < fracs[i] - 2 * se) {
                ok = false;
                msg << "(monotonicity violated beyond 2 s.e.) ";
            }
        }
        for (int k : ks) {
            BalanceStats s = sample_balance_stats(k, 1.0, 50, Seed{51000, 0});
            if (s.frac_strictly_balanced != 1.0) {
                ok = false;
                msg << "(alpha=1 not all strict at k=" << k << ") ";
            }
        }
        for (int k : {10, 12}) {
            auto hist = witness_location_report(k, 0.5, samples,
                                                Seed{52000 + static_cast<std::uint64_t>(k), 0});
            int mode = -1;
            long long best = -1;
            for (auto [v_f, c] : hist)
                if (c > best) {
                    best = c;
                    mode = v_f;
                }
            msg << "mode(k=" << k << ")=" << mode << " ";
            if (mode != k - 1) {
                ok = false;
                msg << "(expected " << k - 1 << ") ";
            }
        }
        detail = msg.str();
    });
    report(5, "random templates strictly balanced", ok, detail, secs);
}

// 6. Exact arithmetic spot values.
void criterion6() {
    bool ok = true;
    std::string detail = "binomial tail and exact fractions";
    double secs = timed([&] {
        double tail = binomial_lower_tail(10, 0.5, 2.0);
        if (std::abs(tail - 0.0546875) > 1e-15 * 0.0546875) {
            ok = false;
            detail = "binomial tail " + std::to_string(tail) + " != 0.0546875";
        }
        Graph pend(5);
        for (int u = 0; u < 4; ++u)
            for (int v = u + 1; v < 4; ++v) pend.add_edge(u, v);
        pend.add_edge(0, 4);
        TemplateGraph hp = TemplateGraph::from_graph(std::move(pend));
        if (!(lambda(TemplateGraph::clique(4)) == Fraction(2, 1))) ok = false;
        if (!(lambda(hp) == Fraction(5, 3))) ok = false;
        if (!(lambda_star(hp).first == Fraction(0, 1))) ok = false;
    });
    report(6, "exact arithmetic", ok, detail, secs);
}

// 7. CLI reproducibility: byte-identical data files across reruns and threads.
void criterion7() {
    bool ok = true;
    std::string detail = "pc/ell/sweep reruns byte-identical";
    double secs = timed([&] {
        auto slurp = [](const fs::path& p) {
            std::ifstream in(p, std::ios::binary);
            std::ostringstream ss;
            ss << in.rdbuf();
            return ss.str();
        };
        fs::path base = fs::temp_directory_path() / "hperc_acceptance_cli";
        fs::remove_all(base);
        fs::create_directories(base);
        auto run = [&](const std::string& args) {
            std::string cmd = std::string(HPERC_BIN) + " " + args + " >/dev/null 2>&1";
            return WEXITSTATUS(std::system(cmd.c_str()));
        };
        struct Job {
            std::string cmd;
            std::vector<std::string> files;
        };
        std::vector<Job> jobs = {
            {"pc --n 32 --template clique3 --trials 60 --levels 10 --seed 17", {"pc.csv"}},
            {"ell --template clique4 --n 16,24,32 --trials 40 --levels 8 --seed 23",
             {"ell_points.csv", "ell.json"}},
            {"sweep --k 12 --alphas 0.5,1.0 --samples 200 --seed 31", {"sweep.csv"}},
        };
        for (std::size_t j = 0; j < jobs.size() && ok; ++j) {
            fs::path d1 = base / ("a" + std::to_string(j));
            fs::path d2 = base / ("b" + std::to_string(j));
            if (run(jobs[j].cmd + " --threads 1 --out " + d1.string()) != 0 ||
                run(jobs[j].cmd + " --threads 4 --out " + d2.string()) != 0) {
                ok = false;
                detail = "command failed: " + jobs[j].cmd;
                break;
            }
            for (const auto& f : jobs[j].files) {
                std::string x = slurp(d1 / f), y = slurp(d2 / f);
                if (x.empty() || x != y) {
                    ok = false;
                    detail = "output differs or empty: " + f;
                }
            }
        }
        fs::remove_all(base);
    });
    report(7, "CLI reproducibility", ok, detail, secs);
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion6();
    criterion5();
    criterion7();
    criterion4();
    if (failures == 0)
        std::printf("ALL ACCEPTANCE CRITERIA PASSED\n");
    else
        std::printf("%d ACCEPTANCE CRITERIA FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
