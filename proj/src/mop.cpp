#include "dmp/constructions.hpp"

#include <algorithm>
#include <random>

namespace dmp {

namespace {

// Enumerates hamiltonian cycles as vertex orders starting at 0 with
// path[1] < path[n-1] (kills the reversed duplicate). Returns true as soon
// as the callback accepts one.
struct HamSearch {
    const Graph& g;
    int n;
    std::vector<int> path;
    std::uint64_t visited = 1;
    bool found_any = false;

    template <typename Cb>
    bool dfs(const Cb& cb) {
        if (static_cast<int>(path.size()) == n) {
            if (!g.adjacent(path.back(), path[0])) return false;
            if (path[1] > path[n - 1]) return false;
            found_any = true;
            return cb(path);
        }
        std::uint64_t nbrs = g.neighbors(path.back()) & ~visited;
        while (nbrs) {
            int v = std::countr_zero(nbrs);
            nbrs &= nbrs - 1;
            path.push_back(v);
            visited |= 1ull << v;
            if (dfs(cb)) return true;
            visited &= ~(1ull << v);
            path.pop_back();
        }
        return false;
    }
};

bool chords_cross(int pa, int pb, int pc, int pd) {
    if (pa == pc || pa == pd || pb == pc || pb == pd) return false;
    if (pa > pb) std::swap(pa, pb);
    bool c_in = pa < pc && pc < pb;
    bool d_in = pa < pd && pd < pb;
    return c_in != d_in;
}

}  // namespace

MopCheck validate_mop(const Graph& g) {
    int n = g.order();
    if (n < 3)
        throw std::invalid_argument("maximal outerplanar check needs n >= 3");
    MopCheck out;
    if (g.edge_count() != 2 * n - 3) {
        out.failure = "edge count " + std::to_string(g.edge_count()) +
                      " differs from 2n-3 = " + std::to_string(2 * n - 3);
        return out;
    }
    if (!g.is_connected()) {
        out.failure = "graph is disconnected";
        return out;
    }
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) < 2) {
            out.failure = "vertex " + std::to_string(v) + " has degree below 2";
            return out;
        }
    }

    std::vector<int> pos(n);
    MopCertificate cert;
    HamSearch search{g, n, {0}};
    bool ok = search.dfs([&](const std::vector<int>& cycle) {
        for (int i = 0; i < n; ++i) pos[cycle[i]] = i;
        std::vector<std::pair<int, int>> chords;
        for (auto [u, v] : g.edges()) {
            int d = std::abs(pos[u] - pos[v]);
            if (d != 1 && d != n - 1) chords.emplace_back(u, v);
        }
        for (std::size_t i = 0; i < chords.size(); ++i)
            for (std::size_t j = i + 1; j < chords.size(); ++j)
                if (chords_cross(pos[chords[i].first], pos[chords[i].second],
                                 pos[chords[j].first], pos[chords[j].second]))
                    return false;
        cert.hamiltonian_cycle = cycle;
        cert.chords = std::move(chords);
        return true;
    });
    if (!ok) {
        out.failure = search.found_any
                          ? "every hamiltonian cycle leaves crossing chords"
                          : "no hamiltonian cycle";
        return out;
    }

    // Common-neighbor counts are forced once the cycle and chords check out;
    // a failure here means the checks above are inconsistent, so be loud.
    for (auto [u, v] : g.edges()) {
        int common = std::popcount(g.neighbors(u) & g.neighbors(v));
        int d = std::abs(pos[u] - pos[v]);
        int expect = (d == 1 || d == n - 1) ? 1 : 2;
        if (common != expect) {
            out.failure = "edge " + std::to_string(u) + "-" + std::to_string(v) +
                          " has " + std::to_string(common) +
                          " common neighbors, expected " + std::to_string(expect);
            return out;
        }
    }
    out.cert = std::move(cert);
    return out;
}

bool check_light_edge(const Graph& g) {
    for (auto [u, v] : g.edges()) {
        int du = g.degree(u), dv = g.degree(v);
        if ((du == 2 && dv <= 3) || (dv == 2 && du <= 3)) return true;
    }
    for (int w = 0; w < g.order(); ++w) {
        if (g.degree(w) != 4) continue;
        int deg2 = 0;
        std::uint64_t nb = g.neighbors(w);
        while (nb) {
            int v = std::countr_zero(nb);
            nb &= nb - 1;
            if (g.degree(v) == 2) ++deg2;
        }
        if (deg2 >= 2) return true;
    }
    return false;
}

Graph random_mop(int n, std::uint64_t seed) {
    if (n < 3) throw std::invalid_argument("triangulation needs n >= 3");
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
    std::mt19937_64 rng(seed);
    // 64-bit modulo keeps the draw identical across standard libraries
    std::function<void(int, int)> split = [&](int lo, int hi) {
        if (hi - lo < 2) return;
        int c = lo + 1 + static_cast<int>(rng() % std::uint64_t(hi - lo - 1));
        if (c - lo >= 2) b.add_edge(lo, c);
        if (hi - c >= 2) b.add_edge(c, hi);
        split(lo, c);
        split(c, hi);
    };
    split(0, n - 1);
    return b.build();
}

namespace {

using ChordSet = std::vector<std::pair<int, int>>;

std::vector<ChordSet> triangulation_chords(int lo, int hi) {
    if (hi - lo < 2) return {{}};
    std::vector<ChordSet> out;
    for (int c = lo + 1; c < hi; ++c) {
        std::vector<ChordSet> left = triangulation_chords(lo, c);
        std::vector<ChordSet> right = triangulation_chords(c, hi);
        for (const ChordSet& l : left) {
            for (const ChordSet& r : right) {
                ChordSet s;
                if (c - lo >= 2) s.emplace_back(lo, c);
                if (hi - c >= 2) s.emplace_back(c, hi);
                s.insert(s.end(), l.begin(), l.end());
                s.insert(s.end(), r.begin(), r.end());
                out.push_back(std::move(s));
            }
        }
    }
    return out;
}

}  // namespace

void enumerate_polygon_triangulations(
    int n, const std::function<void(const Graph&)>& visit) {
    if (n < 3) throw std::invalid_argument("triangulation needs n >= 3");
    for (const ChordSet& chords : triangulation_chords(0, n - 1)) {
        GraphBuilder b(n);
        for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
        for (auto [u, v] : chords) b.add_edge(u, v);
        visit(b.build());
    }
}

long long catalan(int m) {
    if (m < 0) throw std::invalid_argument("catalan needs m >= 0");
    long long c = 1;
    for (int i = 0; i < m; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
    return c;
}

}  // namespace dmp
