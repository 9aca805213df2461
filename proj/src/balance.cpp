#include "hperc/balance.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace hperc {

namespace {

std::vector<int> mask_to_vertices(std::uint32_t mask) {
    std::vector<int> out;
    while (mask) {
        out.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return out;
}

// Lexicographic order on the sorted vertex lists, for equal-size masks.
bool lex_less(std::uint32_t a, std::uint32_t b) {
    while (a && b) {
        int la = std::countr_zero(a), lb = std::countr_zero(b);
        if (la != lb) return la < lb;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::uint32_t> adj(n, 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    return adj;
}

// Full bit-subset enumeration with incremental edge counts:
// e[S] = e[S \ {low}] + |N(low) ∩ (S \ {low})|.
std::vector<SizeProfile> profile_by_enumeration(const Graph& g) {
    const int n = g.vertex_count();
    const auto adj = adjacency_masks(g);
    std::vector<SizeProfile> best(n + 1);
    for (int s = 0; s <= n; ++s) {
        best[s].size = s;
        best[s].max_edges = -1;
    }
    best[0] = {0, 0, {}};

    std::vector<std::uint16_t> edges(std::size_t(1) << n, 0);
    std::vector<std::uint32_t> best_mask(n + 1, 0);
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        int lv = std::countr_zero(mask);
        std::uint32_t rest = mask & (mask - 1u);
        int e = edges[rest] + std::popcount(adj[lv] & rest);
        edges[mask] = static_cast<std::uint16_t>(e);
        int s = std::popcount(mask);
        if (e > best[s].max_edges) {
            best[s].max_edges = e;
            best_mask[s] = mask;
        } else if (e == best[s].max_edges && lex_less(mask, best_mask[s])) {
            best_mask[s] = mask;
        }
    }
    for (int s = 1; s <= n; ++s) best[s].witness = mask_to_vertices(best_mask[s]);
    return best;
}

// Branch and bound over subsets of one fixed size. Vertices are tried in
// ascending order with "include" explored first, so the first subset reaching
// the final maximum is the lexicographically smallest one; pruning on
// bound <= best therefore never discards a better witness.
struct BnB {
    const std::vector<std::uint32_t>& adj;
    int n, target;
    int best_edges = -1;
    std::uint32_t best_mask = 0;

    void run() { recurse(0, 0u, 0); }

    void recurse(int next, std::uint32_t chosen, int e_chosen) {
        int size = std::popcount(chosen);
        if (size == target) {
            if (e_chosen > best_edges) {
                best_edges = e_chosen;
                best_mask = chosen;
            }
            return;
        }
        int need = target - size;
        if (n - next < need) return;
        if (best_edges >= 0 && bound(next, chosen, e_chosen, need) <= best_edges) return;

        recurse(next + 1, chosen | (1u << next), e_chosen + std::popcount(adj[next] & chosen));
        recurse(next + 1, chosen, e_chosen);
    }

    // Degree-sum upper bound over the still-selectable vertices, clamped by
    // the complete-graph count on the remaining slots.
    int bound(int next, std::uint32_t chosen, int e_chosen, int need) {
        std::uint32_t rest = (next >= 32) ? 0u : (~0u << next);
        if (n < 32) rest &= (1u << n) - 1u;
        std::uint32_t avail = chosen | rest;
        std::vector<int> ds;
        ds.reserve(n - next);
        for (int r = next; r < n; ++r) ds.push_back(std::popcount(adj[r] & avail));
        std::partial_sort(ds.begin(), ds.begin() + need, ds.end(), std::greater<>());
        int sum = 0;
        for (int i = 0; i < need; ++i) sum += ds[i];
        int clamp = need * (need - 1) / 2 + need * std::popcount(chosen);
        return e_chosen + std::min(sum, clamp);
    }
};

std::vector<SizeProfile> profile_by_branch_and_bound(const Graph& g) {
    const int n = g.vertex_count();
    const auto adj = adjacency_masks(g);
    std::vector<SizeProfile> best(n + 1);
    for (int s = 0; s <= n; ++s) {
        BnB solver{adj, n, s};
        solver.run();
        best[s] = {s, solver.best_edges, mask_to_vertices(solver.best_mask)};
    }
    return best;
}

using Witness = std::optional<std::pair<std::vector<int>, int>>;

// `strict` selects the strictly-balanced check (violation at ratio >= lambda
// instead of ratio > lambda). Witness: lexicographically smallest subset
// among those of maximal violating ratio.
std::pair<bool, Witness> balance_from_profile(const TemplateGraph& h,
                                              const std::vector<SizeProfile>& prof,
                                              bool strict) {
    const int k = h.vertex_count();
    const Fraction lam = lambda(h);
    bool found = false;
    Fraction best_ratio(0, 1);
    int best_s = -1;
    for (int s = 3; s < k; ++s) {
        Fraction r(prof[s].max_edges - 1, s - 2);
        bool violates = strict ? (r >= lam) : (r > lam);
        if (!violates) continue;
        if (!found || r > best_ratio ||
            (r == best_ratio && prof[s].witness < prof[best_s].witness)) {
            best_ratio = r;
            best_s = s;
        }
        found = true;
    }
    if (!found) return {true, std::nullopt};
    return {false, std::make_pair(prof[best_s].witness, prof[best_s].max_edges)};
}

std::pair<Fraction, std::vector<std::pair<int, int>>> lambda_star_from_profile(
    const TemplateGraph& h, const std::vector<SizeProfile>& prof) {
    const int k = h.vertex_count();
    const long long e_h = h.edge_count();
    // For fixed v_F the objective decreases in e_F, so only the max induced
    // edge count per size matters.
    Fraction best(0, 1);
    bool have = false;
    for (int s = 2; s < k; ++s) {
        Fraction val(e_h - prof[s].max_edges - 1, k - s);
        if (!have || val < best) {
            best = val;
            have = true;
        }
    }
    std::vector<std::pair<int, int>> minimizers;
    for (int s = 2; s < k; ++s) {
        Fraction val(e_h - prof[s].max_edges - 1, k - s);
        if (val == best) minimizers.emplace_back(s, prof[s].max_edges);
    }
    return {best, std::move(minimizers)};
}

}  // namespace

std::vector<SizeProfile> induced_edge_profile(const Graph& h, bool force_large,
                                              bool force_branch_and_bound) {
    const int n = h.vertex_count();
    if (n > kAnalyzerGuardVertices && !force_large)
        throw std::domain_error("template exceeds the analyzer guard of " +
                                std::to_string(kAnalyzerGuardVertices) + " vertices");
    if (n <= kSubsetDpMaxVertices && !force_branch_and_bound)
        return profile_by_enumeration(h);
    if (n > 32) throw std::domain_error("induced-subgraph search limited to 32 vertices");
    return profile_by_branch_and_bound(h);
}

int max_induced_edges(const TemplateGraph& h, int s) {
    if (s < 0 || s > h.vertex_count()) throw std::domain_error("subset size out of range");
    return induced_edge_profile(h.graph)[s].max_edges;
}

Fraction lambda(const TemplateGraph& h) {
    if (h.vertex_count() < 3) throw std::domain_error("lambda requires at least 3 vertices");
    return Fraction(h.edge_count() - 2, h.vertex_count() - 2);
}

std::pair<bool, Witness> is_balanced(const TemplateGraph& h) {
    if (h.vertex_count() < 3) throw std::domain_error("balance requires at least 3 vertices");
    return balance_from_profile(h, induced_edge_profile(h.graph), false);
}

std::pair<bool, Witness> is_strictly_balanced(const TemplateGraph& h) {
    if (h.vertex_count() < 3) throw std::domain_error("balance requires at least 3 vertices");
    return balance_from_profile(h, induced_edge_profile(h.graph), true);
}

std::pair<Fraction, std::vector<std::pair<int, int>>> lambda_star(const TemplateGraph& h) {
    if (h.vertex_count() < 3)
        throw std::domain_error("lambda_star requires at least 3 vertices");
    return lambda_star_from_profile(h, induced_edge_profile(h.graph));
}

BalanceReport analyze_balance(const TemplateGraph& h, bool force_large) {
    const int k = h.vertex_count();
    if (k < 3) throw std::domain_error("analysis requires at least 3 vertices");
    const auto prof = induced_edge_profile(h.graph, force_large);

    BalanceReport rep;
    rep.lambda = lambda(h);
    auto [bal, bal_witness] = balance_from_profile(h, prof, false);
    auto [strict, strict_witness] = balance_from_profile(h, prof, true);
    rep.balanced = bal;
    rep.strictly_balanced = strict;
    rep.violating_witness = std::move(strict_witness);
    auto [lstar, minimizers] = lambda_star_from_profile(h, prof);
    rep.lambda_star = lstar;
    rep.lambda_star_minimizers = std::move(minimizers);

    const Fraction zero(0, 1);
    if (rep.balanced && rep.lambda > zero) rep.ell_lower = rep.lambda.reciprocal();
    if (k >= 4 && h.min_degree() >= 2 && rep.lambda_star > zero)
        rep.ell_upper = rep.lambda_star.reciprocal();
    if (rep.ell_lower && rep.ell_upper && *rep.ell_lower == *rep.ell_upper)
        rep.ell_exact = rep.ell_lower;
    return rep;
}

}  // namespace hperc
