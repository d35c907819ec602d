#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dmp/errors.hpp"

namespace dmp {

inline constexpr int kMaxVertices = 64;

class GraphBuilder;

// Simple undirected graph on vertex ids 0..n-1, one 64-bit adjacency mask per
// vertex. Immutable once built; assemble with GraphBuilder. The 64-vertex cap
// keeps every solver on single-word bit operations; parsers refuse anything
// larger instead of degrading.
class Graph {
public:
    Graph() = default;

    int order() const { return n_; }
    int edge_count() const;
    bool adjacent(int u, int v) const { return adj_[u] >> v & 1u; }
    std::uint64_t neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return std::popcount(adj_[v]); }
    int max_degree() const;
    std::uint64_t vertex_mask() const {
        return n_ == 64 ? ~0ull : (1ull << n_) - 1;
    }
    std::vector<std::pair<int, int>> edges() const;

    Graph complement() const;
    bool is_connected() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        if (a.n_ != b.n_) return false;
        for (int v = 0; v < a.n_; ++v)
            if (a.adj_[v] != b.adj_[v]) return false;
        return true;
    }

private:
    friend class GraphBuilder;
    int n_ = 0;
    std::array<std::uint64_t, kMaxVertices> adj_{};
};

class GraphBuilder {
public:
    explicit GraphBuilder(int n);
    GraphBuilder& add_edge(int u, int v);
    bool has_edge(int u, int v) const { return g_.adjacent(u, v); }
    int order() const { return g_.order(); }
    Graph build() const { return g_; }

private:
    Graph g_;
};

struct DegreeProfile {
    std::vector<int> degrees;          // indexed by vertex
    std::vector<int> sorted_multiset;  // the same values, non-decreasing
};

DegreeProfile degree_profile(const Graph& g);

// graph6 text form, one graph per line in stream files. Column-order upper
// triangle bits, six per byte, each byte offset by 63; the vertex count comes
// first in 1, 4 or 8 bytes. Graphs on more than 64 vertices raise
// capacity_error, malformed text raises parse_error with a byte offset.
Graph graph6_decode(std::string_view text);
std::string graph6_encode(const Graph& g);

// Induced subgraph on the set bits of mask; vertex i of the result is the
// i-th lowest set bit of mask.
Graph induced_subgraph(const Graph& g, std::uint64_t mask);

// Labeled-graph enumeration. Edge slot j*(j-1)/2 + i holds edge {i,j} for
// i < j, the same colex order graph6 serializes.
int edge_slot_count(int n);
Graph graph_from_edge_mask(int n, std::uint64_t mask);

Graph make_empty(int n);
Graph make_path(int n);
Graph make_cycle(int n);
Graph make_complete(int n);
Graph make_complete_bipartite(int a, int b);
Graph make_complete_multipartite(const std::vector<int>& parts);

}  // namespace dmp
