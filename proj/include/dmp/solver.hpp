#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "dmp/graph.hpp"
#include "dmp/path.hpp"

namespace dmp {

struct LowerBoundChain {
    int chi = 0;
    int omega = 0;
    int ceil_n_over_alpha = 0;
};

struct MpResult {
    int value = 0;
    PathRecord witness;
    std::optional<LowerBoundChain> chain;
};

struct MpOptions {
    bool strict = false;       // strictly monotone degrees only
    bool with_bounds = false;  // also compute (chi, omega, ceil(n/alpha))
};

// Exact mp(G): maximum number of vertices on a path whose degree sequence is
// non-decreasing or non-increasing. Reversal swaps the two directions, so the
// search only ever extends non-decreasingly; branch and bound prunes against
// the incumbent with the count of still-eligible vertices. The witness is the
// lexicographically least maximum non-decreasing path, which pins the output
// for byte-identical reruns.
MpResult mp_exact(const Graph& g, const MpOptions& opt = {});

// Value-only fast path used by the exhaustive audits.
int mp_value(const Graph& g, bool strict = false);

// Does some monotone path reach k vertices? Cheaper than mp_value when only
// a threshold matters (extremal scans).
bool has_dmp_of_length(const Graph& g, int k, bool strict = false);

// Longest witnesses in both directions; first non-decreasing, second
// non-increasing, both lexicographically least at maximum length.
std::pair<PathRecord, PathRecord> mp_both_directions_witness(const Graph& g);

int clique_number(const Graph& g);
std::uint64_t max_clique_mask(const Graph& g);
int independence_number(const Graph& g);

inline constexpr int kDefaultChromaticCap = 32;

// Exact chromatic number: iterative deepening on the color count between the
// clique lower bound and a greedy upper bound, clique-seeded backtracking in
// degree-descending vertex order. Refuses graphs above cap vertices.
int chromatic_number(const Graph& g, int cap = kDefaultChromaticCap);

// chi(G) as an mp lower bound (mp >= chi >= omega).
int mp_lower_bound_chromatic(const Graph& g, int cap = kDefaultChromaticCap);

LowerBoundChain lower_bound_chain(const Graph& g, int cap = kDefaultChromaticCap);

struct CorollaryReport {
    int n = 0;
    int mp = 0;
    int omega = 0;
    int alpha = 0;
    int max_degree = 0;
    bool mp_ge_omega = false;
    bool mp_ge_ceil_n_over_alpha = false;
    bool max_mp_alpha_ge_sqrt_n = false;  // max(mp, alpha)^2 >= n, all integer
    std::optional<int> r;
    std::optional<bool> k1r_free;        // present when r was supplied
    std::optional<int> star_bound;       // ceil(max_degree/(r-1)) + 1
    std::optional<bool> star_bound_holds;

    bool all_hold() const {
        return mp_ge_omega && mp_ge_ceil_n_over_alpha && max_mp_alpha_ge_sqrt_n &&
               (!star_bound_holds || *star_bound_holds);
    }
};

// Audits the clique, independence and star-free lower bounds on mp for one
// graph. When r >= 3 is supplied the K_{1,r}-free bound is evaluated too;
// freeness is decided by scanning every neighborhood for an independent set
// of size r.
CorollaryReport check_corollary_bounds(const Graph& g, std::optional<int> r = {});

struct BipartiteDominancePartition {
    std::uint64_t part_a = 0;  // vertices whose degree beats every neighbor's
    std::uint64_t part_b = 0;  // vertices beaten by every neighbor
    bool valid = false;
};

// mp(G) = 2 characterization for connected graphs on n >= 3 vertices: valid
// iff every vertex strictly dominates or is strictly dominated by all of its
// neighbors, which forces the (A, B) bipartition returned here.
BipartiteDominancePartition characterize_mp2(const Graph& g);

}  // namespace dmp
