#include "dmp/solver.hpp"

#include <algorithm>
#include <numeric>

namespace dmp {

namespace {

// Precomputed per-graph search state. succ[v] is the set of vertices allowed
// to follow v on the path; monotonicity makes succ[w] a subset of succ[v]
// whenever w may follow v, so the candidate pool after a step is just
// succ[last] minus the visited set.
struct MonotoneContext {
    const Graph* g = nullptr;
    int n = 0;
    std::array<int, kMaxVertices> deg{};
    std::array<std::uint64_t, kMaxVertices> succ{};
    std::array<int, kMaxVertices> by_degree{};  // vertex ids, (degree, id) ascending
};

MonotoneContext make_context(const Graph& g, bool descending, bool strict) {
    MonotoneContext c;
    c.g = &g;
    c.n = g.order();
    std::array<std::uint64_t, kMaxVertices + 1> by_deg{};
    for (int v = 0; v < c.n; ++v) {
        c.deg[v] = g.degree(v);
        by_deg[c.deg[v]] |= 1ull << v;
    }
    // threshold[d]: vertices usable after one of degree d
    std::array<std::uint64_t, kMaxVertices + 1> threshold{};
    if (!descending) {
        std::uint64_t acc = 0;
        for (int d = c.n; d >= 0; --d) {
            if (!strict) acc |= by_deg[d];
            threshold[d] = acc;
            if (strict) acc |= by_deg[d];
        }
    } else {
        std::uint64_t acc = 0;
        for (int d = 0; d <= c.n; ++d) {
            if (!strict) acc |= by_deg[d];
            threshold[d] = acc;
            if (strict) acc |= by_deg[d];
        }
    }
    for (int v = 0; v < c.n; ++v) c.succ[v] = threshold[c.deg[v]];
    std::iota(c.by_degree.begin(), c.by_degree.begin() + c.n, 0);
    std::sort(c.by_degree.begin(), c.by_degree.begin() + c.n,
              [&](int a, int b) {
                  return c.deg[a] != c.deg[b] ? c.deg[a] < c.deg[b] : a < b;
              });
    return c;
}

// Phase 1: maximum length only. Low-degree neighbors first tends to reach
// deep non-decreasing paths early, which tightens the incumbent for the
// optimistic-count prune.
void dfs_max(const MonotoneContext& c, int u, std::uint64_t visited, int len,
             int& best) {
    if (len > best) best = len;
    std::uint64_t cand = c.succ[u] & ~visited;
    if (len + std::popcount(cand) <= best) return;
    std::uint64_t nbrs = c.g->neighbors(u) & cand;
    if (!nbrs) return;
    for (int i = 0; i < c.n; ++i) {
        int v = c.by_degree[i];
        if (nbrs >> v & 1u)
            dfs_max(c, v, visited | (1ull << v), len + 1, best);
    }
}

int longest_length(const MonotoneContext& c) {
    int best = c.n >= 1 ? 1 : 0;
    for (int i = 0; i < c.n; ++i) {
        int s = c.by_degree[i];
        std::uint64_t cand = c.succ[s] & ~(1ull << s);
        if (1 + std::popcount(cand) <= best) continue;
        dfs_max(c, s, 1ull << s, 1, best);
    }
    return best;
}

// Phase 2: lexicographically least path of exactly target vertices. Start
// vertices and extensions are tried in increasing id order and the search
// only prunes branches that cannot reach target, so the first hit is the
// least witness.
bool dfs_lex(const MonotoneContext& c, int u, std::uint64_t visited,
             std::vector<int>& path, int target) {
    if (static_cast<int>(path.size()) == target) return true;
    std::uint64_t cand = c.succ[u] & ~visited;
    if (static_cast<int>(path.size()) + std::popcount(cand) < target) return false;
    std::uint64_t nbrs = c.g->neighbors(u) & cand;
    while (nbrs) {
        int v = std::countr_zero(nbrs);
        nbrs &= nbrs - 1;
        path.push_back(v);
        if (dfs_lex(c, v, visited | (1ull << v), path, target)) return true;
        path.pop_back();
    }
    return false;
}

std::vector<int> lex_witness(const MonotoneContext& c, int target) {
    std::vector<int> path;
    path.reserve(target);
    for (int s = 0; s < c.n; ++s) {
        if (1 + std::popcount(c.succ[s] & ~(1ull << s)) < target) continue;
        path.assign(1, s);
        if (dfs_lex(c, s, 1ull << s, path, target)) return path;
    }
    throw validation_error("witness search failed to reproduce the optimum");
}

PathRecord record_for(const Graph& g, const std::vector<int>& vertices) {
    PathRecord p;
    p.vertices = vertices;
    p.degree_seq.reserve(vertices.size());
    for (int v : vertices) p.degree_seq.push_back(g.degree(v));
    p.direction = classify_direction(p.degree_seq);
    return p;
}

}  // namespace

int mp_value(const Graph& g, bool strict) {
    if (g.order() < 1)
        throw std::invalid_argument("mp needs at least one vertex");
    MonotoneContext c = make_context(g, /*descending=*/false, strict);
    return longest_length(c);
}

MpResult mp_exact(const Graph& g, const MpOptions& opt) {
    MpResult r;
    r.value = mp_value(g, opt.strict);
    MonotoneContext c = make_context(g, /*descending=*/false, opt.strict);
    r.witness = record_for(g, lex_witness(c, r.value));
    if (opt.with_bounds) r.chain = lower_bound_chain(g);
    return r;
}

bool has_dmp_of_length(const Graph& g, int k, bool strict) {
    if (g.order() < 1)
        throw std::invalid_argument("mp needs at least one vertex");
    if (k <= 1) return k >= 0;
    if (k > g.order()) return false;
    MonotoneContext c = make_context(g, /*descending=*/false, strict);
    std::vector<int> path;
    path.reserve(k);
    for (int s = 0; s < c.n; ++s) {
        if (1 + std::popcount(c.succ[s] & ~(1ull << s)) < k) continue;
        path.assign(1, s);
        if (dfs_lex(c, s, 1ull << s, path, k)) return true;
    }
    return false;
}

std::pair<PathRecord, PathRecord> mp_both_directions_witness(const Graph& g) {
    int value = mp_value(g, false);
    MonotoneContext up = make_context(g, /*descending=*/false, false);
    MonotoneContext down = make_context(g, /*descending=*/true, false);
    PathRecord a = record_for(g, lex_witness(up, value));
    PathRecord b = record_for(g, lex_witness(down, value));
    return {a, b};
}

}  // namespace dmp
