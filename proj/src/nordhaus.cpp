#include "dmp/nordhaus.hpp"

#include <algorithm>
#include <random>

#include "dmp/parallel.hpp"
#include "dmp/solver.hpp"

namespace dmp {

int ng_lower_bound(int n) {
    int s = 0;
    while (static_cast<long long>(s) * s < 4LL * n) ++s;
    return s;
}

NgRecord ng_sum(const Graph& g) {
    if (g.order() < 1) throw std::invalid_argument("sum needs a vertex");
    NgRecord rec;
    rec.n = g.order();
    rec.mp_g = mp_value(g);
    rec.mp_gbar = mp_value(g.complement());
    rec.sum = rec.mp_g + rec.mp_gbar;
    rec.lower_bound = ng_lower_bound(rec.n);
    rec.upper_bound = 2 * rec.n;
    rec.within_bounds = rec.sum >= rec.lower_bound && rec.sum <= rec.upper_bound;
    return rec;
}

std::pair<Graph, Graph> gen_ng_upper(int n) {
    if (n < 5) throw std::invalid_argument("cycle pair needs n >= 5");
    Graph cyc = make_cycle(n);
    Graph rest = cyc.complement();
    if (mp_value(cyc) != n)
        throw validation_error("cycle side missed mp = n");
    if (mp_value(rest) != n)
        throw validation_error("complement side missed mp = n");
    return {cyc, rest};
}

ConstructionCert gen_ng_upper_cert(int n) {
    auto [cyc, rest] = gen_ng_upper(n);
    (void)cyc;
    ConstructionCert cert;
    cert.graph = rest;
    cert.family = Family::ng_kn_minus_cycle;
    cert.params["n"] = n;
    cert.claims.mp = n;
    return cert;
}

std::vector<int> ng_clique_sizes(int n) {
    if (n < 1) throw std::invalid_argument("clique layout needs n >= 1");
    int s = 0;
    while (s * s < n) ++s;
    if (s * s != n)
        throw std::invalid_argument("clique layout needs a perfect square");
    std::vector<int> sizes;
    if (s % 2 == 0) {
        for (int a = s / 2; a <= 3 * s / 2; ++a)
            if (a != s) sizes.push_back(a);
    } else {
        for (int a = (s + 1) / 2; a <= (3 * s - 1) / 2; ++a) sizes.push_back(a);
    }
    long long total = 0;
    for (int a : sizes) total += a;
    if (total != n)
        throw validation_error("clique size window does not sum to n");
    return sizes;
}

Graph gen_ng_cliques(int n) {
    std::vector<int> sizes = ng_clique_sizes(n);
    GraphBuilder b(n);
    int at = 0;
    for (int a : sizes) {
        for (int u = 0; u < a; ++u)
            for (int v = u + 1; v < a; ++v) b.add_edge(at + u, at + v);
        at += a;
    }
    Graph g = b.build();
    int s = 0;
    while (s * s < n) ++s;
    int expect_g = sizes.back();       // longest path inside the biggest clique
    int expect_c = static_cast<int>(sizes.size());  // one vertex per part
    if (mp_value(g) != expect_g)
        throw validation_error("clique union missed its mp");
    if (mp_value(g.complement()) != expect_c)
        throw validation_error("clique complement missed its mp");
    if (expect_g + expect_c != 5 * s / 2)
        throw validation_error("clique pair missed floor(5 sqrt(n) / 2)");
    return g;
}

ConstructionCert gen_ng_cliques_cert(int n) {
    Graph g = gen_ng_cliques(n);
    std::vector<int> sizes = ng_clique_sizes(n);
    ConstructionCert cert;
    cert.graph = g;
    cert.family = Family::ng_cliques;
    cert.params["n"] = n;
    cert.claims.mp = sizes.back();
    return cert;
}

namespace {

struct AuditShard {
    bool any = false;
    int min_sum = 0, max_sum = 0;
    std::uint64_t min_key = 0, max_key = 0;  // enumeration rank of the witness
    std::string min_g6, max_g6;
    bool chain_ok = true;
    std::map<int, long long> histogram;
};

void fold_graph(AuditShard& shard, const Graph& g, std::uint64_t key,
                bool with_chi) {
    Graph gc = g.complement();
    int sum = mp_value(g) + mp_value(gc);
    if (!shard.any || sum < shard.min_sum ||
        (sum == shard.min_sum && key < shard.min_key)) {
        shard.min_sum = sum;
        shard.min_key = key;
        shard.min_g6 = graph6_encode(g);
    }
    if (!shard.any || sum > shard.max_sum ||
        (sum == shard.max_sum && key < shard.max_key)) {
        shard.max_sum = sum;
        shard.max_key = key;
        shard.max_g6 = graph6_encode(g);
    }
    shard.any = true;
    ++shard.histogram[sum];
    if (with_chi && sum < chromatic_number(g) + chromatic_number(gc))
        shard.chain_ok = false;
}

NgAuditResult merge_shards(int n, long long graphs, bool with_chi,
                           std::vector<AuditShard>& shards) {
    NgAuditResult res;
    res.n = n;
    res.graphs = graphs;
    res.lower_bound = ng_lower_bound(n);
    res.upper_bound = 2 * n;
    res.chi_checked = with_chi;
    bool any = false;
    std::uint64_t min_key = 0, max_key = 0;
    for (const AuditShard& s : shards) {
        if (!s.any) continue;
        if (!any || s.min_sum < res.min_sum ||
            (s.min_sum == res.min_sum && s.min_key < min_key)) {
            res.min_sum = s.min_sum;
            min_key = s.min_key;
            res.min_witness = s.min_g6;
        }
        if (!any || s.max_sum > res.max_sum ||
            (s.max_sum == res.max_sum && s.max_key < max_key)) {
            res.max_sum = s.max_sum;
            max_key = s.max_key;
            res.max_witness = s.max_g6;
        }
        any = true;
        res.chi_chain_holds = res.chi_chain_holds && s.chain_ok;
        for (auto [sum, count] : s.histogram) res.histogram[sum] += count;
    }
    res.bounds_hold =
        any && res.min_sum >= res.lower_bound && res.max_sum <= res.upper_bound;
    return res;
}

}  // namespace

NgAuditResult ng_exhaustive_audit(int n, int workers) {
    if (n < 1) throw std::invalid_argument("audit needs n >= 1");
    if (n > 7)
        throw capacity_error("exhaustive sum audit capped at 7 vertices; "
                             "use the sampled audit beyond");
    if (workers < 1) workers = 1;
    std::uint64_t total = 1ull << edge_slot_count(n);
    std::vector<AuditShard> shards(workers);
    parallel_chunks(0, total, workers,
                    [&](int w, std::uint64_t lo, std::uint64_t hi) {
                        for (std::uint64_t mask = lo; mask < hi; ++mask)
                            fold_graph(shards[w], graph_from_edge_mask(n, mask),
                                       mask, true);
                    });
    return merge_shards(n, static_cast<long long>(total), true, shards);
}

NgAuditResult ng_sampled_audit(int n, long long samples, std::uint64_t seed,
                               int workers) {
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("sampled audit needs 1 <= n <= 64");
    if (samples < 1) throw std::invalid_argument("need at least one sample");
    if (workers < 1) workers = 1;
    bool with_chi = n <= kDefaultChromaticCap;
    // Draw every sample up front from one stream so the set does not depend
    // on the worker count.
    std::mt19937_64 rng(seed);
    std::vector<Graph> sample_graphs;
    sample_graphs.reserve(samples);
    for (long long i = 0; i < samples; ++i) {
        GraphBuilder b(n);
        std::uint64_t bits = 0;
        int left = 0;
        for (int col = 1; col < n; ++col) {
            for (int row = 0; row < col; ++row) {
                if (left == 0) {
                    bits = rng();
                    left = 64;
                }
                if (bits & 1) b.add_edge(row, col);
                bits >>= 1;
                --left;
            }
        }
        sample_graphs.push_back(b.build());
    }
    std::vector<AuditShard> shards(workers);
    parallel_chunks(0, static_cast<std::uint64_t>(samples), workers,
                    [&](int w, std::uint64_t lo, std::uint64_t hi) {
                        for (std::uint64_t i = lo; i < hi; ++i)
                            fold_graph(shards[w], sample_graphs[i], i, with_chi);
                    });
    return merge_shards(n, samples, with_chi, shards);
}

}  // namespace dmp
