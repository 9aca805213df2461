#ifndef HPERC_TEMPLATE_GRAPH_HPP
#define HPERC_TEMPLATE_GRAPH_HPP

#include <string>
#include <vector>

#include "hperc/graph.hpp"

namespace hperc {

// The percolation template H with precomputed data the engine needs.
// diameter_bound is the longest shortest-path distance within H, or
// kInfiniteDiameter when H is disconnected (the closure worklist then
// falls back to full rescans).
struct TemplateGraph {
    static constexpr int kInfiniteDiameter = -1;

    Graph graph;
    std::vector<Edge> edges;    // canonical order
    std::vector<int> degrees;
    int diameter_bound = 0;
    std::string id;             // e.g. "clique4"; free-form for files

    int vertex_count() const { return graph.vertex_count(); }
    long long edge_count() const { return graph.edge_count(); }
    int min_degree() const;

    // Throws std::domain_error if g has fewer than 2 vertices.
    static TemplateGraph from_graph(Graph g, std::string id = "");
    static TemplateGraph clique(int k);
    static TemplateGraph cycle(int k);
    static TemplateGraph path(int k);
};

}  // namespace hperc

#endif
