#include "dmp/serialize.hpp"

namespace dmp {

std::vector<int> mask_vertices(std::uint64_t mask) {
    std::vector<int> out;
    for (int v = 0; v < kMaxVertices; ++v)
        if (mask >> v & 1) out.push_back(v);
    return out;
}

Json graph_json(const Graph& g) {
    Json j;
    j["graph6"] = graph6_encode(g);
    j["n"] = g.order();
    j["edges"] = g.edge_count();
    return j;
}

Json path_json(const PathRecord& p) {
    Json j;
    j["vertices"] = p.vertices;
    j["degrees"] = p.degree_seq;
    j["direction"] = to_string(p.direction);
    j["length"] = p.length();
    return j;
}

Json mp_json(const Graph& g, const MpResult& r) {
    Json j;
    j["graph"] = graph_json(g);
    j["mp"] = r.value;
    j["witness"] = path_json(r.witness);
    if (r.chain) {
        j["chi"] = r.chain->chi;
        j["omega"] = r.chain->omega;
        j["ceil_n_over_alpha"] = r.chain->ceil_n_over_alpha;
    }
    return j;
}

Json corollary_json(const CorollaryReport& r) {
    Json j;
    j["n"] = r.n;
    j["mp"] = r.mp;
    j["omega"] = r.omega;
    j["alpha"] = r.alpha;
    j["max_degree"] = r.max_degree;
    j["mp_ge_omega"] = r.mp_ge_omega;
    j["mp_ge_ceil_n_over_alpha"] = r.mp_ge_ceil_n_over_alpha;
    j["max_mp_alpha_ge_sqrt_n"] = r.max_mp_alpha_ge_sqrt_n;
    if (r.r) {
        j["r"] = *r.r;
        j["star_free"] = *r.k1r_free;
        if (r.star_bound) j["star_bound"] = *r.star_bound;
        if (r.star_bound_holds) j["star_bound_holds"] = *r.star_bound_holds;
    }
    j["all_hold"] = r.all_hold();
    return j;
}

Json mp2_json(const Graph& g, const BipartiteDominancePartition& p) {
    Json j;
    j["graph"] = graph_json(g);
    j["mp_is_2"] = p.valid;
    if (p.valid) {
        j["dominating"] = mask_vertices(p.part_a);
        j["dominated"] = mask_vertices(p.part_b);
    }
    return j;
}

Json cert_json(const ConstructionCert& c) {
    Json j;
    j["family"] = family_name(c.family);
    Json params = Json::object();
    for (const auto& [key, val] : c.params) params[key] = val;
    j["params"] = params;
    j["graph"] = graph_json(c.graph);
    Json claims = Json::object();
    if (c.claims.mp) claims["mp"] = *c.claims.mp;
    if (c.claims.chi) claims["chi"] = *c.claims.chi;
    claims["is_mop"] = c.claims.is_mop;
    claims["is_max_planar"] = c.claims.is_max_planar;
    claims["no_regular_edge"] = c.claims.no_regular_edge;
    j["claims"] = claims;
    if (c.mp_strict) j["mp_strict"] = *c.mp_strict;
    if (c.embedding) j["rotation"] = c.embedding->order;
    return j;
}

ConstructionCert cert_from_json(const Json& j) {
    ConstructionCert c;
    std::string fam = j.at("family").get<std::string>();
    auto f = family_from_name(fam);
    if (!f) throw std::invalid_argument("unknown family " + fam);
    c.family = *f;
    if (j.contains("params"))
        for (const auto& [key, val] : j.at("params").items())
            c.params[key] = val.get<long long>();
    c.graph = graph6_decode(j.at("graph").at("graph6").get<std::string>());
    if (j.contains("claims")) {
        const Json& cl = j.at("claims");
        if (cl.contains("mp")) c.claims.mp = cl.at("mp").get<int>();
        if (cl.contains("chi")) c.claims.chi = cl.at("chi").get<int>();
        c.claims.is_mop = cl.value("is_mop", false);
        c.claims.is_max_planar = cl.value("is_max_planar", false);
        c.claims.no_regular_edge = cl.value("no_regular_edge", false);
    }
    if (j.contains("mp_strict")) c.mp_strict = j.at("mp_strict").get<int>();
    if (j.contains("rotation")) {
        RotationSystem rot;
        rot.order = j.at("rotation").get<std::vector<std::vector<int>>>();
        c.embedding = std::move(rot);
    }
    return c;
}

Json mop_check_json(const Graph& g, const MopCheck& c) {
    Json j;
    j["graph"] = graph_json(g);
    j["is_mop"] = static_cast<bool>(c);
    if (c.cert) {
        j["hamiltonian_cycle"] = c.cert->hamiltonian_cycle;
        Json chords = Json::array();
        for (auto [a, b] : c.cert->chords) chords.push_back(Json::array({a, b}));
        j["chords"] = chords;
    } else {
        j["failure"] = c.failure;
    }
    return j;
}

Json extremal_json(const ExtremalRecord& r) {
    Json j;
    j["quantity"] = std::string(1, r.quantity);
    j["n"] = r.n;
    j["k"] = r.k;
    j["value"] = r.value;
    if (!r.parts.empty()) j["parts"] = r.parts;
    if (r.witness_total > 0) {
        j["witness_total"] = r.witness_total;
        j["witnesses"] = r.witnesses;
    }
    j["provenance"] = r.provenance;
    return j;
}

Json f_bounds_json(const FBoundsReport& r) {
    Json j;
    j["n"] = r.n;
    j["k"] = r.k;
    j["f"] = r.f;
    j["t"] = r.t;
    if (r.g) j["g"] = *r.g;
    j["f_le_t"] = r.f_le_t;
    if (r.f_le_t_minus_1) j["f_le_t_minus_1"] = *r.f_le_t_minus_1;
    if (r.g_le_f) j["g_le_f"] = *r.g_le_f;
    j["all_hold"] = r.all_hold();
    return j;
}

Json gap_row_json(const GapSweepRow& row) {
    Json j;
    j["k"] = row.k;
    j["n"] = row.n;
    j["t"] = row.t;
    j["g"] = row.g;
    j["gap"] = row.gap;
    j["bound"] = rational_str(row.bound);
    j["holds"] = row.holds;
    return j;
}

Json conjecture_row_json(const ConjectureRow& row) {
    Json j;
    j["k"] = row.k;
    j["n"] = row.n;
    j["f"] = row.f;
    j["g"] = row.g;
    j["equal"] = row.equal;
    return j;
}

Json ng_record_json(const NgRecord& r) {
    Json j;
    j["n"] = r.n;
    j["mp_g"] = r.mp_g;
    j["mp_complement"] = r.mp_gbar;
    j["sum"] = r.sum;
    j["lower_bound"] = r.lower_bound;
    j["upper_bound"] = r.upper_bound;
    j["within_bounds"] = r.within_bounds;
    return j;
}

Json ng_audit_json(const NgAuditResult& r) {
    Json j;
    j["n"] = r.n;
    j["graphs"] = r.graphs;
    j["min_sum"] = r.min_sum;
    j["max_sum"] = r.max_sum;
    j["lower_bound"] = r.lower_bound;
    j["upper_bound"] = r.upper_bound;
    j["bounds_hold"] = r.bounds_hold;
    j["chi_checked"] = r.chi_checked;
    if (r.chi_checked) j["chi_chain_holds"] = r.chi_chain_holds;
    Json hist = Json::object();
    for (auto [sum, count] : r.histogram) hist[std::to_string(sum)] = count;
    j["histogram"] = hist;
    j["min_witness"] = r.min_witness;
    j["max_witness"] = r.max_witness;
    return j;
}

}  // namespace dmp
