#ifndef HPERC_PERCOLATION_HPP
#define HPERC_PERCOLATION_HPP

#include <vector>

#include "hperc/graph.hpp"
#include "hperc/template_graph.hpp"

namespace hperc {

enum class ClosureStrategy {
    baseline,  // full rescan of all non-edges every round; reference semantics
    worklist,  // re-examine only non-edges near newly added edges
};

struct ClosureResult {
    Graph final_graph;
    std::vector<std::vector<Edge>> rounds;  // per-round added edges, canonical order
    bool percolated = false;
};

// True iff G + {u,v} contains a copy of H using the new edge. {u,v} must not
// already be an edge of G (throws std::domain_error otherwise).
bool edge_completes_copy(const Graph& g, const TemplateGraph& h, int u, int v);

// One parallel-update round against a frozen G: all addable non-edges at once.
std::pair<Graph, std::vector<Edge>> evolve_round(const Graph& g, const TemplateGraph& h);

// Iterate rounds to the fixed point <G>_H. Both strategies produce identical
// results; worklist is the fast path.
ClosureResult closure(const Graph& g, const TemplateGraph& h,
                      ClosureStrategy strategy = ClosureStrategy::worklist);

// closure(...).final == K_n, with early exit once completeness is reached.
bool percolates(const Graph& g, const TemplateGraph& h);

}  // namespace hperc

#endif
