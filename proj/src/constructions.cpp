#include "dmp/constructions.hpp"

#include <algorithm>
#include <numeric>

namespace dmp {

const char* family_name(Family f) {
    switch (f) {
        case Family::fan: return "fan";
        case Family::mop_a: return "mop_a";
        case Family::mop_b_irregular: return "mop_b_irregular";
        case Family::maxplanar_1: return "maxplanar_1";
        case Family::maxplanar_2: return "maxplanar_2";
        case Family::multipartite_distinct: return "multipartite_distinct";
        case Family::turan: return "turan";
        case Family::ng_cliques: return "ng_cliques";
        case Family::ng_kn_minus_cycle: return "ng_kn_minus_cycle";
    }
    return "?";
}

std::optional<Family> family_from_name(std::string_view name) {
    for (Family f :
         {Family::fan, Family::mop_a, Family::mop_b_irregular,
          Family::maxplanar_1, Family::maxplanar_2,
          Family::multipartite_distinct, Family::turan, Family::ng_cliques,
          Family::ng_kn_minus_cycle}) {
        if (name == family_name(f)) return f;
    }
    return std::nullopt;
}

void require_distinct_parts(const PartSizeSequence& parts) {
    if (parts.empty()) throw std::invalid_argument("need at least one part");
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1)
            throw std::invalid_argument("part sizes must be positive");
        if (i > 0 && parts[i] <= parts[i - 1])
            throw std::invalid_argument("part sizes must be strictly increasing");
    }
}

namespace {

// Fan skeleton shared by several generators: vertex 0 is the hub joined to
// every other vertex, 1..n-1 form the outer path, and 0-1, 0-(n-1) close the
// cycle.
Graph fan_graph(int n) {
    GraphBuilder b(n);
    for (int v = 1; v < n; ++v) b.add_edge(0, v);
    for (int v = 1; v + 1 < n; ++v) b.add_edge(v, v + 1);
    return b.build();
}

bool has_regular_edge(const Graph& g) {
    for (auto [u, v] : g.edges())
        if (g.degree(u) == g.degree(v)) return true;
    return false;
}

void verify_mp(const Graph& g, int expect, const char* what) {
    int got = mp_value(g);
    if (got != expect)
        throw validation_error(std::string(what) + ": expected mp " +
                               std::to_string(expect) + ", solver found " +
                               std::to_string(got));
}

void verify_mop(const Graph& g, const char* what) {
    MopCheck chk = validate_mop(g);
    if (!chk)
        throw validation_error(std::string(what) +
                               ": not maximal outerplanar (" + chk.failure + ")");
}

}  // namespace

ConstructionCert gen_fan(int n) {
    if (n < 4) throw std::invalid_argument("fan needs n >= 4");
    ConstructionCert cert;
    cert.graph = fan_graph(n);
    cert.family = Family::fan;
    cert.params["n"] = n;
    cert.claims.mp = n - 1;
    cert.claims.is_mop = true;
    verify_mp(cert.graph, n - 1, "fan");
    verify_mop(cert.graph, "fan");
    return cert;
}

ConstructionCert gen_mop_a(int r) {
    if (r < 5) throw std::invalid_argument("mop_a needs r >= 5");
    int extra = r / 3;
    GraphBuilder b(r + extra);
    {
        Graph fan = fan_graph(r);
        for (auto [u, v] : fan.edges()) b.add_edge(u, v);
    }
    // The i-th added vertex leans on one outer edge of the fan; which edge
    // depends on r mod 3 so that the last one still lands inside 1..r-1.
    for (int i = 1; i <= extra; ++i) {
        int lo = (r % 3 == 2) ? 3 * i - 1 : 3 * i - 2;
        int v = r + i - 1;
        if (lo + 1 > r - 1)
            throw validation_error("mop_a: attachment edge out of range");
        b.add_edge(v, lo);
        b.add_edge(v, lo + 1);
    }
    ConstructionCert cert;
    cert.graph = b.build();
    cert.family = Family::mop_a;
    cert.params["r"] = r;
    cert.claims.mp = 4;
    cert.claims.is_mop = true;
    verify_mp(cert.graph, 4, "mop_a");
    verify_mop(cert.graph, "mop_a");
    return cert;
}

ConstructionCert gen_mop_b_irregular(int r) {
    if (r < 7) throw std::invalid_argument("mop_b_irregular needs r >= 7");
    // Degree-2 vertices arrive in pairs astride one outer vertex of the fan;
    // the residue of r mod 4 picks the pattern, and r = 3 (mod 4) takes one
    // closing vertex on the edge (r-2, r-1) on top of the pairs.
    std::vector<std::pair<int, int>> attach;
    int pairs = r / 4;
    switch (r % 4) {
        case 0:
        case 1:
            for (int i = 1; i <= pairs; ++i) {
                attach.emplace_back(4 * i - 3, 4 * i - 2);
                attach.emplace_back(4 * i - 2, 4 * i - 1);
            }
            break;
        case 2:
            for (int i = 1; i <= pairs; ++i) {
                attach.emplace_back(4 * i - 2, 4 * i - 1);
                attach.emplace_back(4 * i - 1, 4 * i);
            }
            break;
        case 3:
            for (int i = 1; i <= pairs; ++i) {
                attach.emplace_back(4 * i - 3, 4 * i - 2);
                attach.emplace_back(4 * i - 2, 4 * i - 1);
            }
            attach.emplace_back(r - 2, r - 1);
            break;
    }
    int n = r + static_cast<int>(attach.size());
    GraphBuilder b(n);
    {
        Graph fan = fan_graph(r);
        for (auto [u, v] : fan.edges()) b.add_edge(u, v);
    }
    for (std::size_t i = 0; i < attach.size(); ++i) {
        auto [lo, hi] = attach[i];
        if (hi > r - 1)
            throw validation_error("mop_b_irregular: attachment edge out of range");
        int v = r + static_cast<int>(i);
        b.add_edge(v, lo);
        b.add_edge(v, hi);
    }
    ConstructionCert cert;
    cert.graph = b.build();
    cert.family = Family::mop_b_irregular;
    cert.params["r"] = r;
    cert.claims.mp = 4;
    cert.claims.is_mop = true;
    cert.claims.no_regular_edge = true;
    verify_mp(cert.graph, 4, "mop_b_irregular");
    verify_mop(cert.graph, "mop_b_irregular");
    if (has_regular_edge(cert.graph))
        throw validation_error("mop_b_irregular: found an edge between equal degrees");
    cert.mp_strict = mp_value(cert.graph, /*strict=*/true);
    return cert;
}

ConstructionCert gen_maxplanar_1(int r) {
    if (r < 7 || r % 3 != 1)
        throw std::invalid_argument("maxplanar_1 needs r >= 7 with r = 1 (mod 3)");
    int fill = (r - 1) / 3;
    int y = r;                    // apex over the outer path
    int n = r + 1 + fill;         // = (4r+2)/3
    GraphBuilder b(n);
    {
        Graph fan = fan_graph(r);
        for (auto [u, v] : fan.edges()) b.add_edge(u, v);
    }
    for (int j = 1; j <= r - 1; ++j) b.add_edge(y, j);
    for (int i = 1; i <= fill; ++i) {
        int a = y + i;
        b.add_edge(a, y);
        b.add_edge(a, 3 * i - 2);
        b.add_edge(a, 3 * i - 1);
    }
    b.add_edge(1, r - 1);

    // Embedding: outer path 1..r-1 left to right, hub 0 below it, y above,
    // fill vertex i inside the face (y, 3i-2, 3i-1), and the edge 1-(r-1)
    // closing around the hub side.
    RotationSystem rot;
    rot.order.assign(n, {});
    auto fill_on = [&](int lo) -> int {  // fill vertex over edge (lo, lo+1), if any
        if (lo >= 1 && lo % 3 == 1 && lo + 1 <= r - 2) return y + (lo + 2) / 3;
        return -1;
    };
    for (int j = r - 1; j >= 1; --j) rot.order[0].push_back(j);
    for (int j = 1; j <= r - 1; ++j) {
        rot.order[y].push_back(j);
        if (int a = fill_on(j); a != -1) rot.order[y].push_back(a);
    }
    {
        auto& v1 = rot.order[1];
        v1 = {2};
        if (int a = fill_on(1); a != -1) v1.push_back(a);
        v1.push_back(y);
        v1.push_back(r - 1);
        v1.push_back(0);
    }
    for (int j = 2; j <= r - 2; ++j) {
        auto& vj = rot.order[j];
        vj.push_back(j + 1);
        if (int a = fill_on(j); a != -1) vj.push_back(a);
        vj.push_back(y);
        if (int a = fill_on(j - 1); a != -1) vj.push_back(a);
        vj.push_back(j - 1);
        vj.push_back(0);
    }
    rot.order[r - 1] = {y, r - 2, 0, 1};
    for (int i = 1; i <= fill; ++i)
        rot.order[y + i] = {3 * i - 1, y, 3 * i - 2};

    ConstructionCert cert;
    cert.graph = b.build();
    cert.family = Family::maxplanar_1;
    cert.params["r"] = r;
    cert.claims.mp = 4;
    cert.claims.chi = 4;
    cert.claims.is_max_planar = true;
    cert.embedding = std::move(rot);
    if (!validate_maxplanar(cert.graph, *cert.embedding))
        throw validation_error("maxplanar_1: embedding failed face tracing");
    verify_mp(cert.graph, 4, "maxplanar_1");
    if (chromatic_number(cert.graph) != 4)
        throw validation_error("maxplanar_1: chromatic number is not 4");
    return cert;
}

ConstructionCert gen_maxplanar_2(int k) {
    if (k < 3) throw std::invalid_argument("maxplanar_2 needs k >= 3");
    // Spine s_0..s_k carries k chorded 4-cycles (s_{i-1}, z_i, s_i, w_i) with
    // the chord z_i-w_i; consecutive blocks share spine vertices. Hub v2 sits
    // above everything, v3 below, v1 guards the left end, and v1-s_k closes
    // the outer face. Both spine ends have degree 5, so no monotone path can
    // chain through more than one degree-4 block.
    int n = 3 * k + 4;
    auto spine = [](int j) { return j; };
    auto z = [&](int i) { return k + i; };          // i in 1..k
    auto w = [&](int i) { return 2 * k + i; };      // i in 1..k
    int v1 = 3 * k + 1, v2 = 3 * k + 2, v3 = 3 * k + 3;

    GraphBuilder b(n);
    for (int i = 1; i <= k; ++i) {
        b.add_edge(spine(i - 1), z(i));
        b.add_edge(spine(i - 1), w(i));
        b.add_edge(spine(i), z(i));
        b.add_edge(spine(i), w(i));
        b.add_edge(z(i), w(i));
    }
    b.add_edge(v1, spine(0));
    b.add_edge(v1, v2);
    b.add_edge(v1, v3);
    for (int j = 0; j <= k; ++j) {
        b.add_edge(v2, spine(j));
        b.add_edge(v3, spine(j));
    }
    for (int i = 1; i <= k; ++i) {
        b.add_edge(v2, z(i));
        b.add_edge(v3, w(i));
    }
    b.add_edge(v1, spine(k));

    RotationSystem rot;
    rot.order.assign(n, {});
    rot.order[spine(0)] = {v1, v2, z(1), w(1), v3};
    for (int j = 1; j <= k - 1; ++j)
        rot.order[spine(j)] = {w(j), z(j), v2, z(j + 1), w(j + 1), v3};
    rot.order[spine(k)] = {w(k), z(k), v2, v1, v3};
    for (int i = 1; i <= k; ++i) {
        rot.order[z(i)] = {w(i), spine(i - 1), v2, spine(i)};
        rot.order[w(i)] = {spine(i - 1), z(i), spine(i), v3};
    }
    rot.order[v1] = {v2, spine(0), v3, spine(k)};
    {
        auto& o2 = rot.order[v2];
        o2 = {v1, spine(k)};
        for (int i = k; i >= 1; --i) {
            o2.push_back(z(i));
            o2.push_back(spine(i - 1));
        }
        auto& o3 = rot.order[v3];
        o3 = {v1, spine(0)};
        for (int i = 1; i <= k; ++i) {
            o3.push_back(w(i));
            o3.push_back(spine(i));
        }
    }

    ConstructionCert cert;
    cert.graph = b.build();
    cert.family = Family::maxplanar_2;
    cert.params["k"] = k;
    cert.claims.mp = 4;
    cert.claims.chi = 4;
    cert.claims.is_max_planar = true;
    cert.embedding = std::move(rot);
    if (!validate_maxplanar(cert.graph, *cert.embedding))
        throw validation_error("maxplanar_2: embedding failed face tracing");
    verify_mp(cert.graph, 4, "maxplanar_2");
    if (chromatic_number(cert.graph) != 4)
        throw validation_error("maxplanar_2: chromatic number is not 4");
    return cert;
}

ConstructionCert gen_multipartite_distinct(const PartSizeSequence& parts) {
    require_distinct_parts(parts);
    ConstructionCert cert;
    cert.graph = make_complete_multipartite(parts);
    cert.family = Family::multipartite_distinct;
    for (std::size_t i = 0; i < parts.size(); ++i)
        cert.params["a" + std::to_string(i + 1)] = parts[i];
    int m = static_cast<int>(parts.size());
    cert.claims.mp = m;
    verify_mp(cert.graph, m, "multipartite_distinct");
    long long expect = 0;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j)
            expect += static_cast<long long>(parts[i]) * parts[j];
    if (cert.graph.edge_count() != expect)
        throw validation_error("multipartite_distinct: edge count mismatch");
    return cert;
}

ConstructionCert gen_turan(int n, int k) {
    if (k < 2) throw std::invalid_argument("turan graph needs k >= 2");
    if (n < 1) throw std::invalid_argument("turan graph needs n >= 1");
    int parts = k - 1;
    std::vector<int> sizes(parts, n / parts);
    for (int i = 0; i < n % parts; ++i) ++sizes[i];
    std::sort(sizes.begin(), sizes.end());
    std::vector<int> positive;
    for (int s : sizes)
        if (s > 0) positive.push_back(s);
    ConstructionCert cert;
    cert.graph = make_complete_multipartite(positive);
    cert.family = Family::turan;
    cert.params["n"] = n;
    cert.params["k"] = k;
    long long expect = static_cast<long long>(n) * (n - 1) / 2;
    for (int s : sizes) expect -= static_cast<long long>(s) * (s - 1) / 2;
    if (cert.graph.edge_count() != expect)
        throw validation_error("turan: edge count mismatch");
    return cert;
}

}  // namespace dmp
