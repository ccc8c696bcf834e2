#pragma once

#include <string>

#include <json.hpp>

#include "satgame/analysis.hpp"
#include "satgame/graph.hpp"
#include "satgame/simulate.hpp"
#include "satgame/solver.hpp"

namespace satgame {

using nlohmann::json;

/// {"host": {"type":"complete","n":6} | {"type":"bipartite","m":4,"n":3},
///  "edges": [[0,1], ...]}  -- edges sorted lexicographically on output
json graph_to_json(const GameGraph& g);
GameGraph graph_from_json(const json& j);

/// Reads either a full graph document or a bare {"edges": [...]} against the
/// given host. A host present in the document must match.
GameGraph graph_from_json(const json& j, const HostGraph& host);

json transcript_to_json(const Transcript& t);
Transcript transcript_from_json(const json& j);

json solve_result_to_json(const SolveResult& r, const std::string& family,
                          const std::string& host, PlayerRole first);

json match_report_to_json(const MatchReport& r);
json essential_report_to_json(const EssentialPathReport& r);
json c4_bound_to_json(const C4BoundParams& p, const C4Bound& b, long long n);
json closed_form_to_json(const ClosedFormQuery& q, const ClosedFormValue& v);

json load_json_file(const std::string& path);

}  // namespace satgame
