#include "satgame/json_io.hpp"

#include <fstream>

namespace satgame {

namespace {

json host_to_json(const HostGraph& h) {
  if (h.is_bipartite()) return {{"type", "bipartite"}, {"m", h.part_x()}, {"n", h.part_y()}};
  return {{"type", "complete"}, {"n", h.order()}};
}

HostGraph host_from_json(const json& j) {
  std::string type = j.at("type").get<std::string>();
  if (type == "complete") return HostGraph::complete(j.at("n").get<int>());
  if (type == "bipartite")
    return HostGraph::bipartite(j.at("m").get<int>(), j.at("n").get<int>());
  throw ParseError("bad host type: " + type);
}

}  // namespace

json graph_to_json(const GameGraph& g) {
  json edges = json::array();
  for (Edge e : g.edges()) edges.push_back({e.u, e.v});
  return {{"host", host_to_json(g.host())}, {"edges", edges}};
}

GameGraph graph_from_json(const json& j) {
  return graph_from_json(j, host_from_json(j.at("host")));
}

GameGraph graph_from_json(const json& j, const HostGraph& host) {
  if (j.contains("host") && !(host_from_json(j.at("host")) == host))
    throw ParseError("graph host does not match the requested host");
  GameGraph g(host);
  for (const auto& e : j.at("edges")) {
    g = add_edge(std::move(g), Edge(e.at(0).get<int>(), e.at(1).get<int>()));
  }
  return g;
}

json transcript_to_json(const Transcript& t) {
  json moves = json::array();
  for (const auto& mv : t.moves) {
    moves.push_back(
        {{"index", mv.index}, {"mover", to_string(mv.mover)}, {"edge", {mv.edge.u, mv.edge.v}}});
  }
  return {{"config",
           {{"family", t.family},
            {"host", t.host},
            {"first", to_string(t.first)},
            {"max_policy", t.max_policy},
            {"min_policy", t.min_policy},
            {"seed", t.seed}}},
          {"moves", moves},
          {"final_size", t.final_size},
          {"saturated", t.saturated}};
}

Transcript transcript_from_json(const json& j) {
  Transcript t;
  const json& c = j.at("config");
  t.family = c.at("family").get<std::string>();
  t.host = c.at("host").get<std::string>();
  t.first = parse_role(c.at("first").get<std::string>());
  t.max_policy = c.at("max_policy").get<std::string>();
  t.min_policy = c.at("min_policy").get<std::string>();
  t.seed = c.at("seed").get<std::uint64_t>();
  for (const auto& mv : j.at("moves")) {
    TranscriptMove m;
    m.index = mv.at("index").get<int>();
    m.mover = parse_role(mv.at("mover").get<std::string>());
    m.edge = Edge(mv.at("edge").at(0).get<int>(), mv.at("edge").at(1).get<int>());
    t.moves.push_back(m);
  }
  t.final_size = j.at("final_size").get<int>();
  t.saturated = j.at("saturated").get<bool>();
  return t;
}

json solve_result_to_json(const SolveResult& r, const std::string& family,
                          const std::string& host, PlayerRole first) {
  json j = {{"family", family}, {"host", host},           {"first", to_string(first)},
            {"value", r.value}, {"nodes", r.nodes},       {"exact", r.exact},
            {"memo_entries", r.memo_entries}, {"seconds", r.seconds}};
  if (r.optimal_move)
    j["optimal_move"] = {r.optimal_move->u, r.optimal_move->v};
  else
    j["optimal_move"] = nullptr;
  return j;
}

json match_report_to_json(const MatchReport& r) {
  return {{"alpha_prime", r.alpha_prime},
          {"bound", r.bound},
          {"edges", r.edges},
          {"equality", r.equality},
          {"full", r.full}};
}

json essential_report_to_json(const EssentialPathReport& r) {
  return {{"s_x", r.s_x},
          {"s_y", r.s_y},
          {"nonadjacent_cross_pairs", r.nonadjacent_cross_pairs},
          {"p4_joined_pairs", r.p4_joined_pairs},
          {"max_s_neighbors", r.max_s_neighbors},
          {"max_central_essential", r.max_central_essential},
          {"high_degree_count", r.high_degree_count}};
}

json c4_bound_to_json(const C4BoundParams& p, const C4Bound& b, long long n) {
  json j = {{"c", p.c.to_string()},
            {"d", p.d.to_string()},
            {"a", b.a},
            {"b", b.b},
            {"branch", b.min_is_second_branch ? "c^2/2d" : "(1/2)(c^2/2d^2)^(2/3)"},
            {"n", n},
            {"bound", b.bound}};
  j["a_exact"] = b.a_exact ? json(b.a_exact->to_string()) : json(nullptr);
  return j;
}

json closed_form_to_json(const ClosedFormQuery& q, const ClosedFormValue& v) {
  json j = {{"theorem", to_string(q.id)}, {"conjectured", v.conjectured}};
  json params = json::object();
  switch (q.id) {
    case TheoremId::OddCycles:
    case TheoremId::ExOdd: params["k"] = q.k; break;
    case TheoremId::Trees:
    case TheoremId::ExTrees: params["n"] = q.n; break;
    case TheoremId::Claw: params["n"] = q.n; break;
    case TheoremId::P4Kn: params["n"] = q.n; break;
    case TheoremId::P4Kmn:
    case TheoremId::SatP4Kmn:
      params["m"] = q.m;
      params["n"] = q.n;
      break;
    case TheoremId::ExStar:
    case TheoremId::StarConjecture:
      params["r"] = q.r;
      params["n"] = q.n;
      break;
  }
  j["params"] = params;
  if (q.id == TheoremId::Trees || q.id == TheoremId::Claw || q.id == TheoremId::P4Kn ||
      q.id == TheoremId::P4Kmn)
    j["first"] = to_string(q.first);
  // the P_4-on-K_n theorem proves bounds only: always an interval, even when
  // the window happens to collapse
  if (v.exact() && q.id != TheoremId::P4Kn)
    j["value"] = v.lo;
  else
    j["interval"] = {v.lo, v.hi};
  return j;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  json j;
  in >> j;
  return j;
}

}  // namespace satgame
