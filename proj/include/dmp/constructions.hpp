#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dmp/graph.hpp"
#include "dmp/solver.hpp"

namespace dmp {

enum class Family {
    fan,
    mop_a,
    mop_b_irregular,
    maxplanar_1,
    maxplanar_2,
    multipartite_distinct,
    turan,
    ng_cliques,
    ng_kn_minus_cycle,
};

const char* family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);

struct Claims {
    std::optional<int> mp;
    std::optional<int> chi;
    bool is_mop = false;
    bool is_max_planar = false;
    bool no_regular_edge = false;  // no edge joins two vertices of equal degree
};

// Cyclic neighbor order at every vertex; fixes the embedding that
// validate_maxplanar traces.
struct RotationSystem {
    std::vector<std::vector<int>> order;
};

// Every generator re-verifies its own claims with the exact solvers before
// returning, and refuses (validation_error) when a parameter does not deliver
// them. (family, params) reproduces the graph byte for byte.
struct ConstructionCert {
    Graph graph;
    Family family = Family::fan;
    std::map<std::string, long long> params;
    Claims claims;
    std::optional<RotationSystem> embedding;
    std::optional<int> mp_strict;  // extra report for mop_b_irregular
};

// part sizes a_1 < a_2 < ... < a_m, all positive
using PartSizeSequence = std::vector<int>;
void require_distinct_parts(const PartSizeSequence& parts);

// Fan: cycle 0,1,...,n-1 with vertex 0 joined to everything. mp = n - 1.
ConstructionCert gen_fan(int n);  // n >= 4

// Fan F_r plus floor(r/3) degree-2 vertices, each glued onto an outer edge
// chosen by r mod 3; holds mp at 4. r >= 5.
ConstructionCert gen_mop_a(int r);

// Fan F_r plus degree-2 vertices in pairs chosen by r mod 4; holds mp at 4
// with no edge joining two vertices of equal degree. r >= 7.
ConstructionCert gen_mop_b_irregular(int r);

// Triangulation on (4r+2)/3 vertices built over F_r with an apex above the
// outer path plus degree-3 fill vertices; mp = 4, chi = 4. r >= 7 and
// r = 1 (mod 3).
ConstructionCert gen_maxplanar_1(int r);

// Triangulation chaining k chorded 4-cycles between three hub vertices;
// mp = 4, chi = 4 on 3k + 4 vertices. k >= 3.
ConstructionCert gen_maxplanar_2(int k);

// Complete multipartite graph with strictly increasing part sizes;
// mp = number of parts.
ConstructionCert gen_multipartite_distinct(const PartSizeSequence& parts);

// Balanced complete (k-1)-partite graph on n vertices.
ConstructionCert gen_turan(int n, int k);

struct MopCertificate {
    std::vector<int> hamiltonian_cycle;
    std::vector<std::pair<int, int>> chords;
};

struct MopCheck {
    std::optional<MopCertificate> cert;
    std::string failure;  // names the violated condition when empty cert
    explicit operator bool() const { return cert.has_value(); }
};

// Maximal outerplanar recognition without a generic planarity test: the edge
// count must be 2n-3 and some hamiltonian cycle must carry pairwise
// non-crossing chords. On success the common-neighbor counts (1 per cycle
// edge, 2 per chord) are re-checked as well. n >= 3.
MopCheck validate_mop(const Graph& g);

// Rotation-system check for maximal planarity: 3n-6 edges and face tracing
// that closes into all-triangle faces with Euler count 2.
bool validate_maxplanar(const Graph& g, const RotationSystem& rot);

// Edge (v,w) with deg v = 2, deg w <= 3, or a path v-w-x with degrees 2,4,2.
bool check_light_edge(const Graph& g);

// Random triangulation of the labeled n-gon; deterministic per seed. n >= 3.
Graph random_mop(int n, std::uint64_t seed);

// All triangulations of the labeled n-gon (Catalan(n-2) of them), cycle
// 0..n-1 plus non-crossing chords.
void enumerate_polygon_triangulations(
    int n, const std::function<void(const Graph&)>& visit);

long long catalan(int m);

}  // namespace dmp
