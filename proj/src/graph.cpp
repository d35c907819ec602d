#include "dmp/graph.hpp"

#include <algorithm>
#include <numeric>

namespace dmp {

int Graph::edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
    return twice / 2;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count());
    for (int u = 0; u < n_; ++u) {
        std::uint64_t higher = adj_[u] >> (u + 1) << (u + 1);
        while (higher) {
            int v = std::countr_zero(higher);
            higher &= higher - 1;
            out.emplace_back(u, v);
        }
    }
    return out;
}

Graph Graph::complement() const {
    Graph c;
    c.n_ = n_;
    std::uint64_t all = vertex_mask();
    for (int v = 0; v < n_; ++v) c.adj_[v] = all & ~adj_[v] & ~(1ull << v);
    return c;
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    std::uint64_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint64_t next = 0;
        for (std::uint64_t f = frontier; f;) {
            int v = std::countr_zero(f);
            f &= f - 1;
            next |= adj_[v];
        }
        frontier = next & ~seen;
        seen |= frontier;
    }
    return seen == vertex_mask();
}

GraphBuilder::GraphBuilder(int n) {
    if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
    if (n > kMaxVertices)
        throw capacity_error("graph on " + std::to_string(n) +
                             " vertices exceeds the " +
                             std::to_string(kMaxVertices) + "-vertex limit");
    g_.n_ = n;
}

GraphBuilder& GraphBuilder::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= g_.n_ || v >= g_.n_)
        throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("loops are not allowed");
    g_.adj_[u] |= 1ull << v;
    g_.adj_[v] |= 1ull << u;
    return *this;
}

DegreeProfile degree_profile(const Graph& g) {
    DegreeProfile p;
    p.degrees.reserve(g.order());
    for (int v = 0; v < g.order(); ++v) p.degrees.push_back(g.degree(v));
    p.sorted_multiset = p.degrees;
    std::sort(p.sorted_multiset.begin(), p.sorted_multiset.end());
    return p;
}

namespace {

int g6_byte(std::string_view s, std::size_t i) {
    if (i >= s.size()) throw parse_error("graph6: truncated", i);
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126)
        throw parse_error("graph6: character out of range 63..126", i);
    return c - 63;
}

}  // namespace

Graph graph6_decode(std::string_view text) {
    if (text.empty()) throw parse_error("graph6: empty input", 0);
    std::size_t pos = 0;
    std::uint64_t n = 0;
    if (text[0] == '~') {
        if (text.size() >= 2 && text[1] == '~') {
            pos = 2;
            for (int i = 0; i < 6; ++i) n = n << 6 | std::uint64_t(g6_byte(text, pos++));
        } else {
            pos = 1;
            for (int i = 0; i < 3; ++i) n = n << 6 | std::uint64_t(g6_byte(text, pos++));
        }
    } else {
        n = std::uint64_t(g6_byte(text, pos++));
    }
    if (n < 1) throw parse_error("graph6: need at least one vertex", 0);
    if (n > std::uint64_t(kMaxVertices))
        throw capacity_error("graph6: " + std::to_string(n) +
                             " vertices exceeds the " +
                             std::to_string(kMaxVertices) + "-vertex limit");
    GraphBuilder b(static_cast<int>(n));
    int bits = 0, cur = 0;
    for (int col = 1; col < static_cast<int>(n); ++col) {
        for (int row = 0; row < col; ++row) {
            if (bits == 0) {
                cur = g6_byte(text, pos++);
                bits = 6;
            }
            --bits;
            if (cur >> bits & 1) b.add_edge(row, col);
        }
    }
    if (pos != text.size()) throw parse_error("graph6: trailing characters", pos);
    return b.build();
}

std::string graph6_encode(const Graph& g) {
    int n = g.order();
    if (n < 1) throw std::invalid_argument("graph6: need at least one vertex");
    std::string out;
    if (n <= 62) {
        out.push_back(char(n + 63));
    } else {
        out.push_back('~');
        out.push_back(char((n >> 12 & 63) + 63));
        out.push_back(char((n >> 6 & 63) + 63));
        out.push_back(char((n & 63) + 63));
    }
    int bits = 5, cur = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            if (g.adjacent(row, col)) cur |= 1 << bits;
            if (--bits < 0) {
                out.push_back(char(cur + 63));
                cur = 0;
                bits = 5;
            }
        }
    }
    if (bits != 5) out.push_back(char(cur + 63));
    return out;
}

Graph induced_subgraph(const Graph& g, std::uint64_t mask) {
    mask &= g.vertex_mask();
    int m = std::popcount(mask);
    if (m < 1) throw std::invalid_argument("induced subgraph needs a vertex");
    std::array<int, kMaxVertices> pos{};
    int idx = 0;
    for (std::uint64_t s = mask; s;) {
        int v = std::countr_zero(s);
        s &= s - 1;
        pos[v] = idx++;
    }
    GraphBuilder b(m);
    for (std::uint64_t s = mask; s;) {
        int v = std::countr_zero(s);
        s &= s - 1;
        std::uint64_t rest = g.neighbors(v) & mask;
        while (rest) {
            int u = std::countr_zero(rest);
            rest &= rest - 1;
            if (u > v) b.add_edge(pos[v], pos[u]);
        }
    }
    return b.build();
}

int edge_slot_count(int n) { return n * (n - 1) / 2; }

Graph graph_from_edge_mask(int n, std::uint64_t mask) {
    GraphBuilder b(n);
    int slot = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row, ++slot)
            if (mask >> slot & 1) b.add_edge(row, col);
    return b.build();
}

Graph make_empty(int n) { return GraphBuilder(n).build(); }

Graph make_path(int n) {
    GraphBuilder b(n);
    for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
    return b.build();
}

Graph make_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
    return b.build();
}

Graph make_complete(int n) {
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
    return b.build();
}

Graph make_complete_bipartite(int a, int b) {
    GraphBuilder g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g.build();
}

Graph make_complete_multipartite(const std::vector<int>& parts) {
    int n = 0;
    for (int p : parts) {
        if (p < 1) throw std::invalid_argument("part sizes must be positive");
        n += p;
    }
    GraphBuilder b(n);
    int ustart = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        int vstart = ustart + parts[i];
        for (std::size_t j = i + 1; j < parts.size(); ++j) {
            for (int u = 0; u < parts[i]; ++u)
                for (int v = 0; v < parts[j]; ++v)
                    b.add_edge(ustart + u, vstart + v);
            vstart += parts[j];
        }
        ustart += parts[i];
    }
    return b.build();
}

}  // namespace dmp
