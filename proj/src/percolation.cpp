#include "hperc/percolation.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <queue>

namespace hperc {

namespace {

// Anchored backtracking search for one embedding of H into a graph that
// already contains the candidate edge. Reused across calls within a closure;
// stamp-based "used" marks avoid clearing arrays between candidates.
class EmbedSearcher {
public:
    explicit EmbedSearcher(const TemplateGraph& h)
        : h_(h), k_(h.vertex_count()), h_adj_(k_, 0), map_(k_, -1) {
        for (auto [a, b] : h_.edges) {
            h_adj_[a] |= 1u << b;
            h_adj_[b] |= 1u << a;
        }
    }

    // g must contain the edge {u,v}.
    bool finds_copy_through(const Graph& g, int u, int v) {
        g_ = &g;
        const int n = g.vertex_count();
        if (k_ > n) return false;
        if (static_cast<std::size_t>(n) > used_stamp_.size())
            used_stamp_.assign(n, 0);
        buf_.resize(g.row_words());

        for (auto [a, b] : h_.edges) {
            if (try_anchor(a, b, u, v)) return true;
            if (try_anchor(a, b, v, u)) return true;
        }
        return false;
    }

private:
    bool try_anchor(int a, int b, int gu, int gv) {
        if (g_->degree(gu) < h_.degrees[a] || g_->degree(gv) < h_.degrees[b]) return false;
        ++gen_;
        std::fill(map_.begin(), map_.end(), -1);
        mapped_mask_ = 0;
        assign(a, gu);
        assign(b, gv);
        bool ok = extend(2);
        if (!ok) {
            unassign(a, gu);
            unassign(b, gv);
        }
        return ok;
    }

    void assign(int hv, int gv) {
        map_[hv] = gv;
        mapped_mask_ |= 1u << hv;
        used_stamp_[gv] = gen_;
    }
    void unassign(int hv, int gv) {
        map_[hv] = -1;
        mapped_mask_ &= ~(1u << hv);
        used_stamp_[gv] = 0;
    }

    bool extend(int depth) {
        if (depth == k_) return true;

        // Next H-vertex: most already-mapped neighbors, smallest index on ties.
        int best = -1, best_cnt = -1;
        for (int x = 0; x < k_; ++x) {
            if (mapped_mask_ & (1u << x)) continue;
            int cnt = std::popcount(h_adj_[x] & mapped_mask_);
            if (cnt > best_cnt) {
                best_cnt = cnt;
                best = x;
            }
        }
        const int x = best;
        const int need_deg = h_.degrees[x];
        const int n = g_->vertex_count();

        if (best_cnt == 0) {
            for (int c = 0; c < n; ++c) {
                if (used_stamp_[c] == gen_ || g_->degree(c) < need_deg) continue;
                assign(x, c);
                if (extend(depth + 1)) return true;
                unassign(x, c);
            }
            return false;
        }

        // Candidates = intersection of the rows of the mapped neighbors' images.
        const std::size_t words = g_->row_words();
        std::uint32_t nb = h_adj_[x] & mapped_mask_;
        bool first = true;
        while (nb) {
            int hv = std::countr_zero(nb);
            nb &= nb - 1;
            auto r = g_->row(map_[hv]);
            if (first) {
                std::memcpy(buf_.data(), r.data(), words * sizeof(std::uint64_t));
                first = false;
            } else {
                for (std::size_t w = 0; w < words; ++w) buf_[w] &= r[w];
            }
        }
        for (std::size_t w = 0; w < words; ++w) {
            std::uint64_t word = buf_[w];
            while (word) {
                int c = static_cast<int>(w * 64 + std::countr_zero(word));
                word &= word - 1;
                if (used_stamp_[c] == gen_ || g_->degree(c) < need_deg) continue;
                assign(x, c);
                if (extend(depth + 1)) return true;
                unassign(x, c);
            }
        }
        return false;
    }

    const TemplateGraph& h_;
    const Graph* g_ = nullptr;
    int k_;
    std::vector<std::uint32_t> h_adj_;
    std::vector<int> map_;
    std::uint32_t mapped_mask_ = 0;
    std::vector<std::uint32_t> used_stamp_;
    std::uint32_t gen_ = 0;
    std::vector<std::uint64_t> buf_;
};

// Vertices within the given BFS distance of any source, in `g`.
std::vector<char> distance_ball(const Graph& g, const std::vector<int>& sources, int radius) {
    const int n = g.vertex_count();
    std::vector<int> dist(n, -1);
    std::vector<char> in_ball(n, 0);
    std::queue<int> q;
    for (int s : sources) {
        if (dist[s] < 0) {
            dist[s] = 0;
            in_ball[s] = 1;
            q.push(s);
        }
    }
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        if (dist[u] == radius) continue;
        auto r = g.row(u);
        for (std::size_t w = 0; w < g.row_words(); ++w) {
            std::uint64_t word = r[w];
            while (word) {
                int v = static_cast<int>(w * 64 + std::countr_zero(word));
                word &= word - 1;
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    in_ball[v] = 1;
                    q.push(v);
                }
            }
        }
    }
    return in_ball;
}

ClosureResult closure_impl(const Graph& g, const TemplateGraph& h, ClosureStrategy strategy,
                           bool record_rounds, bool stop_when_complete) {
    ClosureResult res;
    res.final_graph = g;
    Graph& cur = res.final_graph;
    const int n = cur.vertex_count();

    EmbedSearcher searcher(h);
    bool full_scan = true;
    const bool can_localize =
        strategy == ClosureStrategy::worklist && h.diameter_bound != TemplateGraph::kInfiniteDiameter;
    std::vector<int> touched;
    std::vector<Edge> added;

    for (;;) {
        if (stop_when_complete && cur.is_complete()) break;

        std::vector<char> in_ball;
        if (!full_scan) in_ball = distance_ball(cur, touched, h.diameter_bound);

        added.clear();
        // Scan against the frozen round graph: the candidate edge is toggled
        // in and out of `cur`, so `cur` is unchanged between candidates.
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (cur.has_edge(u, v)) continue;
                if (!full_scan && !in_ball[u] && !in_ball[v]) continue;
                cur.add_edge(u, v);
                bool hit = searcher.finds_copy_through(cur, u, v);
                cur.remove_edge(u, v);
                if (hit) added.emplace_back(u, v);
            }
        }
        if (added.empty()) break;

        touched.clear();
        for (auto [u, v] : added) {
            cur.add_edge(u, v);
            touched.push_back(u);
            touched.push_back(v);
        }
        if (record_rounds) res.rounds.push_back(added);
        full_scan = !can_localize;
    }

    res.percolated = cur.is_complete();
    return res;
}

}  // namespace

bool edge_completes_copy(const Graph& g, const TemplateGraph& h, int u, int v) {
    if (g.has_edge(u, v)) throw std::domain_error("edge already present");
    Graph ge = g;
    ge.add_edge(u, v);
    EmbedSearcher searcher(h);
    return searcher.finds_copy_through(ge, u, v);
}

std::pair<Graph, std::vector<Edge>> evolve_round(const Graph& g, const TemplateGraph& h) {
    Graph cur = g;
    const int n = cur.vertex_count();
    EmbedSearcher searcher(h);
    std::vector<Edge> added;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (cur.has_edge(u, v)) continue;
            cur.add_edge(u, v);
            bool hit = searcher.finds_copy_through(cur, u, v);
            cur.remove_edge(u, v);
            if (hit) added.emplace_back(u, v);
        }
    }
    for (auto [u, v] : added) cur.add_edge(u, v);
    return {std::move(cur), std::move(added)};
}

ClosureResult closure(const Graph& g, const TemplateGraph& h, ClosureStrategy strategy) {
    return closure_impl(g, h, strategy, /*record_rounds=*/true, /*stop_when_complete=*/false);
}

bool percolates(const Graph& g, const TemplateGraph& h) {
    return closure_impl(g, h, ClosureStrategy::worklist, /*record_rounds=*/false,
                        /*stop_when_complete=*/true)
        .percolated;
}

}  // namespace hperc
