#include "dmp/solver.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace dmp {

namespace {

// Branch and bound maximum clique with a greedy coloring bound: candidates
// are colored into independent classes, then expanded in reverse color order
// so size + color(v) <= best cuts the whole tail at once.
struct CliqueSearch {
    const Graph& g;
    int best = 0;
    std::uint64_t best_mask = 0;
    std::uint64_t current = 0;

    void expand(std::uint64_t p, int size) {
        if (!p) {
            if (size > best) {
                best = size;
                best_mask = current;
            }
            return;
        }
        int ordered[kMaxVertices];
        int colors[kMaxVertices];
        int cnt = 0;
        std::uint64_t left = p;
        int col = 0;
        while (left) {
            ++col;
            std::uint64_t q = left;
            while (q) {
                int v = std::countr_zero(q);
                ordered[cnt] = v;
                colors[cnt] = col;
                ++cnt;
                left &= ~(1ull << v);
                q &= ~(1ull << v) & ~g.neighbors(v);
            }
        }
        for (int i = cnt - 1; i >= 0; --i) {
            if (size + colors[i] <= best) return;
            int v = ordered[i];
            current |= 1ull << v;
            expand(p & g.neighbors(v), size + 1);
            current &= ~(1ull << v);
            p &= ~(1ull << v);
        }
    }
};

struct ColorSearch {
    const Graph& g;
    const std::vector<int>& order;
    int k;
    std::array<std::uint64_t, kMaxVertices> cls{};

    bool rec(std::size_t pos, int used) {
        if (pos == order.size()) return true;
        int v = order[pos];
        int lim = std::min(k - 1, used);  // color `used` opens a fresh class
        for (int c = 0; c <= lim; ++c) {
            if (cls[c] & g.neighbors(v)) continue;
            cls[c] |= 1ull << v;
            if (rec(pos + 1, std::max(used, c + 1))) return true;
            cls[c] &= ~(1ull << v);
        }
        return false;
    }
};

std::vector<int> degree_descending_order(const Graph& g, std::uint64_t skip) {
    std::vector<int> order;
    order.reserve(g.order());
    for (int v = 0; v < g.order(); ++v)
        if (!(skip >> v & 1u)) order.push_back(v);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        int da = g.degree(a), db = g.degree(b);
        return da != db ? da > db : a < b;
    });
    return order;
}

int greedy_color_count(const Graph& g, const std::vector<int>& order) {
    std::array<std::uint64_t, kMaxVertices> cls{};
    int used = 0;
    for (int v : order) {
        int c = 0;
        while (cls[c] & g.neighbors(v)) ++c;
        cls[c] |= 1ull << v;
        used = std::max(used, c + 1);
    }
    return used;
}

}  // namespace

std::uint64_t max_clique_mask(const Graph& g) {
    if (g.order() < 1)
        throw std::invalid_argument("clique search needs a vertex");
    CliqueSearch s{g};
    s.expand(g.vertex_mask(), 0);
    return s.best_mask;
}

int clique_number(const Graph& g) {
    return std::popcount(max_clique_mask(g));
}

int independence_number(const Graph& g) {
    return clique_number(g.complement());
}

int chromatic_number(const Graph& g, int cap) {
    int n = g.order();
    if (n < 1) throw std::invalid_argument("coloring needs a vertex");
    if (n > cap)
        throw capacity_error("chromatic solver capped at " + std::to_string(cap) +
                             " vertices, got " + std::to_string(n));
    if (g.edge_count() == 0) return 1;

    std::uint64_t clique = max_clique_mask(g);
    int omega = std::popcount(clique);
    int ub = greedy_color_count(g, degree_descending_order(g, 0));
    if (omega == ub) return omega;

    // clique vertices first with fixed distinct colors, rest degree-descending
    std::vector<int> order;
    order.reserve(n);
    for (std::uint64_t q = clique; q;) {
        int v = std::countr_zero(q);
        q &= q - 1;
        order.push_back(v);
    }
    std::vector<int> rest = degree_descending_order(g, clique);
    order.insert(order.end(), rest.begin(), rest.end());

    for (int k = omega; k < ub; ++k) {
        ColorSearch s{g, order, k};
        for (int i = 0; i < omega; ++i) s.cls[i] |= 1ull << order[i];
        if (s.rec(omega, omega)) return k;
    }
    return ub;
}

int mp_lower_bound_chromatic(const Graph& g, int cap) {
    return chromatic_number(g, cap);
}

LowerBoundChain lower_bound_chain(const Graph& g, int cap) {
    LowerBoundChain c;
    c.chi = chromatic_number(g, cap);
    c.omega = clique_number(g);
    int alpha = independence_number(g);
    c.ceil_n_over_alpha = (g.order() + alpha - 1) / alpha;
    return c;
}

}  // namespace dmp
