#ifndef HPERC_BALANCE_HPP
#define HPERC_BALANCE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "hperc/fraction.hpp"
#include "hperc/template_graph.hpp"

namespace hperc {

// Subset sizes up to kSubsetDpMaxVertices use full bit-subset enumeration;
// above that, branch and bound up to the hard guard.
inline constexpr int kSubsetDpMaxVertices = 20;
inline constexpr int kAnalyzerGuardVertices = 28;

// For one subset size s: the maximum induced edge count and the
// lexicographically smallest vertex subset attaining it.
struct SizeProfile {
    int size = 0;
    int max_edges = 0;
    std::vector<int> witness;  // sorted ascending
};

struct BalanceReport {
    Fraction lambda;
    Fraction lambda_star;
    bool balanced = false;
    bool strictly_balanced = false;
    // Present iff strict balance fails via some F with 3 <= v_F < v_H:
    // the lexicographically smallest subset among those of maximal ratio.
    std::optional<std::pair<std::vector<int>, int>> violating_witness;  // (subset, e_F)
    std::vector<std::pair<int, int>> lambda_star_minimizers;            // (v_F, e_F)
    std::optional<Fraction> ell_lower;
    std::optional<Fraction> ell_upper;
    std::optional<Fraction> ell_exact;
};

// max_s profiles for s = 0..v_H. Throws std::domain_error beyond the guard
// unless force_large is set. force_branch_and_bound exists for tests.
std::vector<SizeProfile> induced_edge_profile(const Graph& h, bool force_large = false,
                                              bool force_branch_and_bound = false);

// Max edge count over all induced subgraphs on s vertices; exact.
int max_induced_edges(const TemplateGraph& h, int s);

// lambda(H) = (e_H - 2)/(v_H - 2); requires v_H >= 3.
Fraction lambda(const TemplateGraph& h);

// Balance per the adjusted-density condition; witness is a maximal-ratio
// violating subset with its induced edge count. v_H = 3 is vacuously balanced.
std::pair<bool, std::optional<std::pair<std::vector<int>, int>>> is_balanced(
    const TemplateGraph& h);
std::pair<bool, std::optional<std::pair<std::vector<int>, int>>> is_strictly_balanced(
    const TemplateGraph& h);

// lambda_*(H) with all (v_F, e_F) pairs attaining the minimum.
std::pair<Fraction, std::vector<std::pair<int, int>>> lambda_star(const TemplateGraph& h);

// Full report including the applicable ell bounds.
BalanceReport analyze_balance(const TemplateGraph& h, bool force_large = false);

}  // namespace hperc

#endif
