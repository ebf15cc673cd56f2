#ifndef DUALGRAPH_JSON_IO_HPP
#define DUALGRAPH_JSON_IO_HPP

#include <string>

#include "json.hpp"

#include "dualgraph/discrepancy.hpp"
#include "dualgraph/dual_graph.hpp"
#include "dualgraph/enumerate.hpp"
#include "dualgraph/families.hpp"
#include "dualgraph/weierstrass.hpp"

namespace dualgraph {

// All emitted objects carry a top-level "schema": 1 so that persisted
// artifacts (audit allowlists, saved reports) stay comparable across
// versions.
inline constexpr int json_schema_version = 1;

nlohmann::json graph_to_json(const DualGraph& g);
DualGraph graph_from_json(const nlohmann::json& j);

// Reads either format: JSON when the first non-space byte is '{',
// the line-oriented text format otherwise.
DualGraph read_graph_file(const std::string& path);

nlohmann::json discrepancy_to_json(const DiscrepancyResult& res);
nlohmann::json match_to_json(const FamilyMatch& m);
nlohmann::json cross_check_to_json(const ConsistencyVerdict& v);
nlohmann::json curve_report_to_json(const WeierstrassCubic& w, const CurveReport& rep);
nlohmann::json scan_to_json(const std::vector<ScanPoint>& points);
nlohmann::json audit_to_json(const AuditReport& rep);

} // namespace dualgraph

#endif
