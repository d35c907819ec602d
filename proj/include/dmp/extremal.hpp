#pragma once

#include <boost/rational.hpp>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dmp/graph.hpp"

namespace dmp {

using Rational = boost::rational<long long>;

// Everything here is exact integer or rational arithmetic; no floating point
// touches a bound check.

// t(n, k): edges of the balanced complete (k-1)-partite graph on n vertices.
long long turan_number(int n, int k);
std::vector<int> turan_part_sizes(int n, int k);

// n^2 (k-2) / (2 (k-1)); turan_number asserts it stays below this.
Rational turan_edge_bound(int n, int k);

struct ExtremalRecord {
    int n = 0;
    int k = 0;
    char quantity = '?';  // 'f', 'g' or 't'
    long long value = 0;
    std::vector<std::string> witnesses;  // graph6, sorted
    long long witness_total = 0;
    std::vector<int> parts;  // optimal part sizes, quantity 'g' only
    std::string provenance;
};

ExtremalRecord t_record(int n, int k);

// g(n, k): most edges of a complete multipartite graph with k-1 strictly
// increasing part sizes summing to n. Needs n >= (k-1)k/2. The record carries
// the optimal sizes and, when n fits the 64-vertex cap, the realizing graph.
ExtremalRecord g_number(int n, int k);

inline constexpr int kDefaultExhaustiveCap = 7;

// f(n, k): most edges of any n-vertex graph with mp < k, by exhaustive scan
// over all labeled graphs. Edge counts are scanned downward and the first
// level with a witness wins, so dense levels near C(n,2) go fast. Witnesses
// are every graph found at the winning level (lexicographically sorted,
// stored up to a cap).
ExtremalRecord f_number(int n, int k, int workers = 1,
                        int cap = kDefaultExhaustiveCap);

// Same quantity over a caller-supplied graph6 stream (one graph per line,
// blank lines skipped) asserted to cover all n-vertex graphs up to
// isomorphism.
ExtremalRecord f_number_stream(int n, int k, std::istream& in,
                               const std::string& stream_id);

struct FBoundsReport {
    int n = 0;
    int k = 0;
    long long f = 0;
    long long t = 0;
    std::optional<long long> g;           // absent when n < (k-1)k/2
    bool f_le_t = false;
    std::optional<bool> f_le_t_minus_1;   // present when k >= 4 and n >= k+1
    std::optional<bool> g_le_f;

    bool all_hold() const {
        return f_le_t && (!f_le_t_minus_1 || *f_le_t_minus_1) &&
               (!g_le_f || *g_le_f);
    }
};

FBoundsReport audit_f_bounds(int n, int k, int workers = 1,
                             int cap = kDefaultExhaustiveCap);

// c(k) = (k^3 + 5k + 3) / 24, the ceiling on t(n,k) - g(n,k) once
// n >= (k-1)(k+2)/2.
Rational gap_bound(int k);
int gap_min_n(int k);

struct GapSweepRow {
    int k = 0;
    int n = 0;
    long long t = 0;
    long long g = 0;
    long long gap = 0;
    Rational bound;
    bool holds = false;
};

std::vector<GapSweepRow> gap_sweep(int k, int n_max);

// f = g comparison table; a reported inequality is a finding, not an error.
struct ConjectureRow {
    int n = 0;
    int k = 0;
    long long f = 0;
    long long g = 0;
    bool equal = false;
};

std::vector<ConjectureRow> conjecture_scan(int k_max, int n_max,
                                           int workers = 1,
                                           int cap = kDefaultExhaustiveCap);

std::string rational_str(const Rational& r);

}  // namespace dmp
