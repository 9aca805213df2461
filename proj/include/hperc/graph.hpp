#ifndef HPERC_GRAPH_HPP
#define HPERC_GRAPH_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hperc/rng.hpp"

namespace hperc {

using Edge = std::pair<int, int>;  // always stored as (min, max)

// Raised by the edge-list parser; line is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Simple undirected graph on vertices 0..n-1 with dense bit-matrix adjacency.
// One row of n bits per vertex; common-neighbor queries are word-parallel
// AND over rows. Immutable by convention once handed to other modules.
class Graph {
public:
    Graph() : Graph(0) {}
    explicit Graph(int n);

    int vertex_count() const { return n_; }
    long long edge_count() const { return m_; }
    int degree(int v) const { return degrees_[v]; }

    bool has_edge(int u, int v) const {
        check_pair(u, v);
        return bit(u, v);
    }

    // Idempotent; throws std::domain_error on self-loops or range errors.
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    std::span<const std::uint64_t> row(int v) const {
        return {bits_.data() + static_cast<std::size_t>(v) * words_, words_};
    }
    std::size_t row_words() const { return words_; }

    bool is_complete() const {
        return m_ == static_cast<long long>(n_) * (n_ - 1) / 2;
    }
    // Edgewise containment; both graphs must have the same vertex count.
    bool subgraph_of(const Graph& other) const;

    // Canonical order: sorted by (min endpoint, max endpoint).
    std::vector<Edge> edges() const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && bits_ == other.bits_;
    }

private:
    void check_pair(int u, int v) const {
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw std::domain_error("vertex out of range");
        if (u == v) throw std::domain_error("self-loops are not allowed");
    }
    bool bit(int u, int v) const {
        return (bits_[static_cast<std::size_t>(u) * words_ + v / 64] >> (v % 64)) & 1u;
    }

    int n_;
    std::size_t words_;
    long long m_;
    std::vector<std::uint64_t> bits_;
    std::vector<int> degrees_;
};

Graph complete_graph(int n);

// Uniforms for the n(n-1)/2 unordered pairs in row-major order
// (0,1),(0,2),...,(0,n-1),(1,2),...; one draw per pair. Fixing this order is
// what makes sampling deterministic and monotone-couplable across p.
std::vector<double> pair_uniforms(int n, const Seed& seed);

// Include pair i iff uniforms[i] < p.
Graph graph_from_uniforms(int n, std::span<const double> uniforms, double p);

// G(n,p): identical (seed, n, p) gives an identical graph.
Graph sample_gnp(int n, double p, const Seed& seed);

// Text format: "p <n> <m>" header, then m lines "<u> <v>" with u < v,
// canonically sorted. LF endings. Bit-exact for golden tests.
std::string serialize_edge_list(const Graph& g);
Graph parse_edge_list(const std::string& text);

}  // namespace hperc

#endif
