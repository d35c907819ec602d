#include "dmp/solver.hpp"

namespace dmp {

namespace {

// Does g contain K_{1,r}, i.e. a vertex with r pairwise non-adjacent
// neighbors?
bool contains_star(const Graph& g, int r) {
    for (int v = 0; v < g.order(); ++v) {
        std::uint64_t nb = g.neighbors(v);
        if (std::popcount(nb) < r) continue;
        if (independence_number(induced_subgraph(g, nb)) >= r) return true;
    }
    return false;
}

}  // namespace

CorollaryReport check_corollary_bounds(const Graph& g, std::optional<int> r) {
    if (g.order() < 1)
        throw std::invalid_argument("corollary audit needs a vertex");
    if (r && *r < 3)
        throw std::invalid_argument("star-free bound needs r >= 3");
    CorollaryReport rep;
    rep.n = g.order();
    rep.mp = mp_value(g);
    rep.omega = clique_number(g);
    rep.alpha = independence_number(g);
    rep.max_degree = g.max_degree();
    rep.mp_ge_omega = rep.mp >= rep.omega;
    rep.mp_ge_ceil_n_over_alpha =
        rep.mp >= (rep.n + rep.alpha - 1) / rep.alpha;
    long long m = std::max(rep.mp, rep.alpha);
    rep.max_mp_alpha_ge_sqrt_n = m * m >= rep.n;
    if (r) {
        rep.r = *r;
        bool free = !contains_star(g, *r);
        rep.k1r_free = free;
        if (free) {
            int bound = (rep.max_degree + *r - 2) / (*r - 1) + 1;
            rep.star_bound = bound;
            rep.star_bound_holds = rep.mp >= bound;
        }
    }
    return rep;
}

BipartiteDominancePartition characterize_mp2(const Graph& g) {
    if (g.order() < 3)
        throw std::invalid_argument("mp=2 characterization needs n >= 3");
    if (!g.is_connected())
        throw std::invalid_argument("mp=2 characterization needs a connected graph");
    BipartiteDominancePartition p;
    bool covered = true;
    for (int v = 0; v < g.order(); ++v) {
        int dv = g.degree(v);
        bool above = true, below = true;
        std::uint64_t nb = g.neighbors(v);
        while (nb) {
            int u = std::countr_zero(nb);
            nb &= nb - 1;
            int du = g.degree(u);
            if (du >= dv) above = false;
            if (du <= dv) below = false;
        }
        if (above)
            p.part_a |= 1ull << v;
        else if (below)
            p.part_b |= 1ull << v;
        else
            covered = false;
    }
    p.valid = covered;
    return p;
}

}  // namespace dmp
