#include "hperc/graph.hpp"

#include <charconv>
#include <sstream>

namespace hperc {

Graph::Graph(int n) : n_(n), words_((n + 63) / 64), m_(0) {
    if (n < 0) throw std::domain_error("vertex count must be nonnegative");
    bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
    degrees_.assign(n_, 0);
}

void Graph::add_edge(int u, int v) {
    check_pair(u, v);
    if (bit(u, v)) return;
    bits_[static_cast<std::size_t>(u) * words_ + v / 64] |= 1ULL << (v % 64);
    bits_[static_cast<std::size_t>(v) * words_ + u / 64] |= 1ULL << (u % 64);
    ++degrees_[u];
    ++degrees_[v];
    ++m_;
}

void Graph::remove_edge(int u, int v) {
    check_pair(u, v);
    if (!bit(u, v)) return;
    bits_[static_cast<std::size_t>(u) * words_ + v / 64] &= ~(1ULL << (v % 64));
    bits_[static_cast<std::size_t>(v) * words_ + u / 64] &= ~(1ULL << (u % 64));
    --degrees_[u];
    --degrees_[v];
    --m_;
}

bool Graph::subgraph_of(const Graph& other) const {
    if (n_ != other.n_) return false;
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i] & ~other.bits_[i]) return false;
    return true;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u) {
        auto r = row(u);
        for (std::size_t w = (u + 1) / 64; w < words_; ++w) {
            std::uint64_t word = r[w];
            if (w == static_cast<std::size_t>(u + 1) / 64)
                word &= ~0ULL << ((u + 1) % 64);
            while (word) {
                int v = static_cast<int>(w * 64 + std::countr_zero(word));
                out.emplace_back(u, v);
                word &= word - 1;
            }
        }
    }
    return out;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

std::vector<double> pair_uniforms(int n, const Seed& seed) {
    SplitMix64 rng(seed);
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) out.push_back(rng.next_uniform());
    return out;
}

Graph graph_from_uniforms(int n, std::span<const double> uniforms, double p) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::domain_error("edge probability must lie in [0,1]");
    Graph g(n);
    std::size_t i = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (uniforms[i++] < p) g.add_edge(u, v);
    return g;
}

Graph sample_gnp(int n, double p, const Seed& seed) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::domain_error("edge probability must lie in [0,1]");
    SplitMix64 rng(seed);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next_uniform() < p) g.add_edge(u, v);
    return g;
}

std::string serialize_edge_list(const Graph& g) {
    std::string out = "p " + std::to_string(g.vertex_count()) + " " +
                      std::to_string(g.edge_count()) + "\n";
    for (auto [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

namespace {
bool parse_int(const std::string& tok, long long& out) {
    if (tok.empty()) return false;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    return ec == std::errc() && ptr == tok.data() + tok.size();
}
}  // namespace

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;

    if (!std::getline(in, line)) throw ParseError(1, "missing header");
    ++lineno;
    std::istringstream hdr(line);
    std::string tag, ntok, mtok, extra;
    hdr >> tag >> ntok >> mtok;
    long long n = 0, m = 0;
    if (tag != "p" || !parse_int(ntok, n) || !parse_int(mtok, m) || (hdr >> extra) ||
        n < 0 || m < 0)
        throw ParseError(lineno, "malformed header, expected \"p <n> <m>\"");

    Graph g(static_cast<int>(n));
    long long seen = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() && in.eof()) break;
        std::istringstream ls(line);
        std::string utok, vtok;
        ls >> utok >> vtok;
        long long u = 0, v = 0;
        if (!parse_int(utok, u) || !parse_int(vtok, v) || (ls >> extra))
            throw ParseError(lineno, "malformed edge line");
        if (u == v) throw ParseError(lineno, "self-loop");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError(lineno, "vertex out of range");
        if (u > v) throw ParseError(lineno, "edge endpoints must satisfy u < v");
        if (g.has_edge(static_cast<int>(u), static_cast<int>(v)))
            throw ParseError(lineno, "duplicate edge");
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
        ++seen;
    }
    if (seen != m)
        throw ParseError(lineno, "edge count mismatch: header says " + std::to_string(m) +
                                     ", found " + std::to_string(seen));
    return g;
}

}  // namespace hperc
