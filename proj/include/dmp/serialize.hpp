#pragma once

#include <json.hpp>

#include "dmp/constructions.hpp"
#include "dmp/extremal.hpp"
#include "dmp/graph.hpp"
#include "dmp/nordhaus.hpp"
#include "dmp/solver.hpp"

namespace dmp {

// ordered_json keeps insertion order, so identical inputs serialize to
// identical bytes.
using Json = nlohmann::ordered_json;

std::vector<int> mask_vertices(std::uint64_t mask);

Json graph_json(const Graph& g);
Json path_json(const PathRecord& p);
Json mp_json(const Graph& g, const MpResult& r);
Json corollary_json(const CorollaryReport& r);
Json mp2_json(const Graph& g, const BipartiteDominancePartition& p);
Json cert_json(const ConstructionCert& c);
ConstructionCert cert_from_json(const Json& j);
Json mop_check_json(const Graph& g, const MopCheck& c);
Json extremal_json(const ExtremalRecord& r);
Json f_bounds_json(const FBoundsReport& r);
Json gap_row_json(const GapSweepRow& row);
Json conjecture_row_json(const ConjectureRow& row);
Json ng_record_json(const NgRecord& r);
Json ng_audit_json(const NgAuditResult& r);

}  // namespace dmp
