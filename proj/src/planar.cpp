#include "dmp/constructions.hpp"

#include <array>

namespace dmp {

// Traces face orbits of the rotation system: from dart (u -> v) the next dart
// leaves v toward the successor of u in v's cyclic order. A maximal planar
// embedding shows 3n-6 edges, every orbit a triangle and Euler count 2.
bool validate_maxplanar(const Graph& g, const RotationSystem& rot) {
    int n = g.order();
    if (static_cast<int>(rot.order.size()) != n)
        throw std::invalid_argument("rotation system has wrong vertex count");
    std::array<std::array<std::int16_t, kMaxVertices>, kMaxVertices> pos;
    for (int v = 0; v < n; ++v) {
        std::uint64_t seen = 0;
        for (std::size_t i = 0; i < rot.order[v].size(); ++i) {
            int u = rot.order[v][i];
            if (u < 0 || u >= n || !g.adjacent(u, v))
                throw std::invalid_argument("rotation lists a non-neighbor");
            if (seen >> u & 1u)
                throw std::invalid_argument("rotation repeats a neighbor");
            seen |= 1ull << u;
            pos[v][u] = static_cast<std::int16_t>(i);
        }
        if (seen != g.neighbors(v))
            throw std::invalid_argument("rotation misses a neighbor");
    }

    long long e = g.edge_count();
    if (n < 4 || e != 3LL * n - 6) return false;

    std::array<std::array<bool, kMaxVertices>, kMaxVertices> used{};
    long long faces = 0;
    for (int u = 0; u < n; ++u) {
        std::uint64_t nb = g.neighbors(u);
        while (nb) {
            int v0 = std::countr_zero(nb);
            nb &= nb - 1;
            if (used[u][v0]) continue;
            int a = u, b = v0, len = 0;
            do {
                used[a][b] = true;
                ++len;
                int deg = static_cast<int>(rot.order[b].size());
                int next = rot.order[b][(pos[b][a] + 1) % deg];
                a = b;
                b = next;
            } while (!(a == u && b == v0));
            if (len != 3) return false;
            ++faces;
        }
    }
    return n - e + faces == 2;
}

}  // namespace dmp
