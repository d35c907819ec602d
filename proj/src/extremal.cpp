#include "dmp/extremal.hpp"

#include <algorithm>
#include <istream>

#include "dmp/constructions.hpp"
#include "dmp/parallel.hpp"
#include "dmp/solver.hpp"

namespace dmp {

namespace {

constexpr long long kWitnessStoreCap = 5000;

long long choose2(long long x) { return x * (x - 1) / 2; }

// next mask with the same popcount (Gosper); caller handles popcount 0
std::uint64_t next_same_popcount(std::uint64_t x) {
    std::uint64_t c = x & ~(x - 1);
    std::uint64_t r = x + c;
    return r | (((x ^ r) >> 2) / c);
}

}  // namespace

std::vector<int> turan_part_sizes(int n, int k) {
    if (k < 2) throw std::invalid_argument("turan numbers need k >= 2");
    if (n < 0) throw std::invalid_argument("turan numbers need n >= 0");
    int parts = k - 1;
    std::vector<int> sizes(parts, n / parts);
    for (int i = 0; i < n % parts; ++i) ++sizes[i];
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

Rational turan_edge_bound(int n, int k) {
    return Rational(static_cast<long long>(n) * n * (k - 2), 2LL * (k - 1));
}

long long turan_number(int n, int k) {
    std::vector<int> sizes = turan_part_sizes(n, k);
    long long t = choose2(n);
    for (int s : sizes) t -= choose2(s);
    if (Rational(t) > turan_edge_bound(n, k))
        throw validation_error("turan count escaped its closed-form bound");
    return t;
}

ExtremalRecord t_record(int n, int k) {
    ExtremalRecord rec;
    rec.n = n;
    rec.k = k;
    rec.quantity = 't';
    rec.value = turan_number(n, k);
    rec.parts = turan_part_sizes(n, k);
    rec.provenance = "closed_form";
    if (n >= 1 && n <= kMaxVertices) {
        rec.witnesses.push_back(graph6_encode(gen_turan(n, k).graph));
        rec.witness_total = 1;
    }
    return rec;
}

namespace {

// Enumerate strictly increasing positive sequences of fixed length summing to
// n, tracking the minimum possible sum of the remaining entries.
void g_search(int remaining_parts, int prev, long long remaining_sum,
              std::vector<int>& acc, long long& best_sq,
              std::vector<int>& best) {
    if (remaining_parts == 0) {
        if (remaining_sum != 0) return;
        long long sq = 0;
        for (int a : acc) sq += static_cast<long long>(a) * a;
        if (best.empty() || sq < best_sq ||
            (sq == best_sq && acc < best)) {
            best_sq = sq;
            best = acc;
        }
        return;
    }
    long long m = remaining_parts;
    for (int a = prev + 1;; ++a) {
        // smallest reachable total from here: a, a+1, ..., a+m-1
        long long low = m * a + m * (m - 1) / 2;
        if (low > remaining_sum) break;
        acc.push_back(a);
        g_search(remaining_parts - 1, a, remaining_sum - a, acc, best_sq, best);
        acc.pop_back();
    }
}

}  // namespace

ExtremalRecord g_number(int n, int k) {
    if (k < 3) throw std::invalid_argument("g numbers need k >= 3");
    long long min_sum = static_cast<long long>(k - 1) * k / 2;
    if (n < min_sum)
        throw std::invalid_argument(
            "g numbers need n >= (k-1)k/2 = " + std::to_string(min_sum));
    std::vector<int> acc, best;
    long long best_sq = 0;
    g_search(k - 1, 0, n, acc, best_sq, best);
    ExtremalRecord rec;
    rec.n = n;
    rec.k = k;
    rec.quantity = 'g';
    rec.value = (static_cast<long long>(n) * n - best_sq) / 2;
    rec.parts = best;
    rec.provenance = "sequence_enumeration";
    if (n <= kMaxVertices) {
        rec.witnesses.push_back(
            graph6_encode(gen_multipartite_distinct(best).graph));
        rec.witness_total = 1;
    }
    return rec;
}

namespace {

struct LevelScan {
    bool found = false;
    std::vector<std::uint64_t> hits;
};

// Scan one edge-count level; workers each take every W-th mask of the shared
// Gosper sequence, which keeps the union independent of W.
LevelScan scan_level(int n, int k, int slots, int m, int workers) {
    LevelScan out;
    if (workers < 1) workers = 1;
    std::vector<LevelScan> parts(workers);
    auto run = [&](int w) {
        LevelScan& mine = parts[w];
        if (m == 0) {
            if (w == 0 && !has_dmp_of_length(make_empty(n), k)) {
                mine.found = true;
                mine.hits.push_back(0);
            }
            return;
        }
        std::uint64_t limit = 1ull << slots;
        std::uint64_t mask = (1ull << m) - 1;
        for (std::uint64_t idx = 0; mask < limit;
             mask = next_same_popcount(mask), ++idx) {
            if (idx % static_cast<std::uint64_t>(workers) !=
                static_cast<std::uint64_t>(w))
                continue;
            Graph g = graph_from_edge_mask(n, mask);
            if (!has_dmp_of_length(g, k)) {
                mine.found = true;
                mine.hits.push_back(mask);
            }
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(workers);
        for (int w = 0; w < workers; ++w) threads.emplace_back(run, w);
        for (auto& t : threads) t.join();
    }
    for (LevelScan& p : parts) {
        out.found = out.found || p.found;
        out.hits.insert(out.hits.end(), p.hits.begin(), p.hits.end());
    }
    std::sort(out.hits.begin(), out.hits.end());
    return out;
}

}  // namespace

ExtremalRecord f_number(int n, int k, int workers, int cap) {
    if (k < 2) throw std::invalid_argument("f numbers need k >= 2");
    if (n < 1) throw std::invalid_argument("f numbers need n >= 1");
    if (n > cap)
        throw capacity_error("exhaustive f capped at " + std::to_string(cap) +
                             " vertices, got " + std::to_string(n) +
                             "; use a graph6 stream instead");
    int slots = edge_slot_count(n);
    for (int m = slots; m >= 0; --m) {
        LevelScan level = scan_level(n, k, slots, m, workers);
        if (!level.found) continue;
        ExtremalRecord rec;
        rec.n = n;
        rec.k = k;
        rec.quantity = 'f';
        rec.value = m;
        rec.witness_total = static_cast<long long>(level.hits.size());
        rec.provenance = "exhaustive_labeled";
        long long keep =
            std::min<long long>(rec.witness_total, kWitnessStoreCap);
        rec.witnesses.reserve(keep);
        for (long long i = 0; i < keep; ++i)
            rec.witnesses.push_back(
                graph6_encode(graph_from_edge_mask(n, level.hits[i])));
        std::sort(rec.witnesses.begin(), rec.witnesses.end());
        return rec;
    }
    throw validation_error("f scan fell through every edge count");
}

ExtremalRecord f_number_stream(int n, int k, std::istream& in,
                               const std::string& stream_id) {
    if (k < 2) throw std::invalid_argument("f numbers need k >= 2");
    ExtremalRecord rec;
    rec.n = n;
    rec.k = k;
    rec.quantity = 'f';
    rec.value = -1;
    long long lines = 0;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n'))
            line.pop_back();
        if (line.rfind(">>graph6<<", 0) == 0) line.erase(0, 10);
        if (line.empty()) continue;
        ++lines;
        Graph g = graph6_decode(line);
        if (g.order() != n)
            throw std::invalid_argument("stream graph on line " +
                                        std::to_string(lines) + " has " +
                                        std::to_string(g.order()) +
                                        " vertices, expected " +
                                        std::to_string(n));
        if (has_dmp_of_length(g, k)) continue;
        long long m = g.edge_count();
        if (m > rec.value) {
            rec.value = m;
            rec.witnesses.clear();
        }
        if (m == rec.value) rec.witnesses.push_back(graph6_encode(g));
    }
    if (rec.value < 0)
        throw std::invalid_argument("stream held no graph with mp below k");
    std::sort(rec.witnesses.begin(), rec.witnesses.end());
    rec.witnesses.erase(
        std::unique(rec.witnesses.begin(), rec.witnesses.end()),
        rec.witnesses.end());
    rec.witness_total = static_cast<long long>(rec.witnesses.size());
    rec.provenance =
        "graph6_stream:" + stream_id + ":" + std::to_string(lines);
    return rec;
}

FBoundsReport audit_f_bounds(int n, int k, int workers, int cap) {
    FBoundsReport rep;
    rep.n = n;
    rep.k = k;
    rep.f = f_number(n, k, workers, cap).value;
    rep.t = turan_number(n, k);
    rep.f_le_t = rep.f <= rep.t;
    if (k >= 4 && n >= k + 1) rep.f_le_t_minus_1 = rep.f <= rep.t - 1;
    if (k >= 3 && n >= static_cast<long long>(k - 1) * k / 2) {
        rep.g = g_number(n, k).value;
        rep.g_le_f = *rep.g <= rep.f;
    }
    return rep;
}

Rational gap_bound(int k) {
    if (k < 3) throw std::invalid_argument("gap bound needs k >= 3");
    return Rational(static_cast<long long>(k) * k * k + 5LL * k + 3, 24);
}

int gap_min_n(int k) { return (k - 1) * (k + 2) / 2; }

std::vector<GapSweepRow> gap_sweep(int k, int n_max) {
    if (k < 3) throw std::invalid_argument("gap sweep needs k >= 3");
    std::vector<GapSweepRow> rows;
    Rational bound = gap_bound(k);
    for (int n = gap_min_n(k); n <= n_max; ++n) {
        GapSweepRow row;
        row.k = k;
        row.n = n;
        row.t = turan_number(n, k);
        row.g = g_number(n, k).value;
        row.gap = row.t - row.g;
        row.bound = bound;
        row.holds = Rational(row.gap) <= bound;
        rows.push_back(row);
    }
    return rows;
}

std::vector<ConjectureRow> conjecture_scan(int k_max, int n_max, int workers,
                                           int cap) {
    if (k_max < 3) throw std::invalid_argument("conjecture scan needs k >= 3");
    std::vector<ConjectureRow> rows;
    for (int k = 3; k <= k_max; ++k) {
        long long min_n = static_cast<long long>(k - 1) * k / 2;
        for (int n = static_cast<int>(std::max<long long>(min_n, 3));
             n <= std::min(n_max, cap); ++n) {
            ConjectureRow row;
            row.n = n;
            row.k = k;
            row.f = f_number(n, k, workers, cap).value;
            row.g = g_number(n, k).value;
            row.equal = row.f == row.g;
            rows.push_back(row);
        }
    }
    return rows;
}

std::string rational_str(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace dmp
