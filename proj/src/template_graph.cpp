#include "hperc/template_graph.hpp"

#include <algorithm>
#include <queue>

namespace hperc {

namespace {
// Longest finite BFS eccentricity; kInfiniteDiameter if some pair is unreachable.
int diameter_of(const Graph& g) {
    int n = g.vertex_count();
    if (n <= 1) return 0;
    int diam = 0;
    std::vector<int> dist(n);
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::queue<int> q;
        dist[s] = 0;
        q.push(s);
        int reached = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v = 0; v < n; ++v) {
                if (v != u && g.has_edge(u, v) && dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    diam = std::max(diam, dist[v]);
                    q.push(v);
                    ++reached;
                }
            }
        }
        if (reached < n) return TemplateGraph::kInfiniteDiameter;
    }
    return diam;
}
}  // namespace

int TemplateGraph::min_degree() const {
    return degrees.empty() ? 0 : *std::min_element(degrees.begin(), degrees.end());
}

TemplateGraph TemplateGraph::from_graph(Graph g, std::string id) {
    if (g.vertex_count() < 2)
        throw std::domain_error("template must have at least 2 vertices");
    TemplateGraph t;
    t.edges = g.edges();
    t.degrees.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) t.degrees[v] = g.degree(v);
    t.diameter_bound = diameter_of(g);
    t.graph = std::move(g);
    t.id = std::move(id);
    return t;
}

TemplateGraph TemplateGraph::clique(int k) {
    return from_graph(complete_graph(k), "clique" + std::to_string(k));
}

TemplateGraph TemplateGraph::cycle(int k) {
    if (k < 3) throw std::domain_error("cycle needs at least 3 vertices");
    Graph g(k);
    for (int i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k);
    return from_graph(std::move(g), "cycle" + std::to_string(k));
}

TemplateGraph TemplateGraph::path(int k) {
    if (k < 2) throw std::domain_error("path needs at least 2 vertices");
    Graph g(k);
    for (int i = 0; i + 1 < k; ++i) g.add_edge(i, i + 1);
    return from_graph(std::move(g), "path" + std::to_string(k));
}

}  // namespace hperc
