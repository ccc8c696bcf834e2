#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "satgame/json_io.hpp"
#include "satgame/verify.hpp"

using namespace satgame;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream os(out_path);
    if (!os) throw Error("cannot write " + out_path);
    os << j.dump(2) << "\n";
  }
}

std::vector<int> parse_size_list(const std::string& text) {
  std::vector<int> out;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    out.push_back(std::stoi(text.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return out;
}

std::vector<Vertex> parse_vertex_list(const std::string& text) {
  std::vector<Vertex> out;
  if (text.empty()) return out;
  for (int v : parse_size_list(text)) out.push_back(v);
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"satgame: exact solving, strategy certification, simulation and analysis "
               "for F-saturation games on K_n and K_{m,n}"};
  app.require_subcommand(1);

  // ---- solve
  auto* solve = app.add_subcommand("solve", "exact game saturation number");
  std::string s_family, s_host, s_first = "max", s_out;
  std::uint64_t s_budget = 0, s_shuffle = 0;
  std::size_t s_memo = std::size_t{1} << 24;
  bool s_no_orbit = false, s_shuffled = false;
  solve->add_option("--family", s_family, "family spec")->required();
  solve->add_option("--host", s_host, "host spec (K:n or B:m,n)")->required();
  solve->add_option("--first", s_first, "starting player (max|min)");
  solve->add_option("--budget", s_budget, "node budget");
  solve->add_option("--memo-capacity", s_memo, "memo entry cap");
  solve->add_flag("--no-orbit", s_no_orbit, "disable orbit reduction");
  solve->add_option("--shuffle", s_shuffle, "debug: shuffle move enumeration with this seed")
      ->each([&](const std::string&) { s_shuffled = true; });
  solve->add_option("--out", s_out, "write JSON here instead of stdout");

  // ---- play
  auto* play_cmd = app.add_subcommand("play", "policy-vs-policy game");
  std::string p_max, p_min, p_family, p_host, p_first = "max", p_out;
  std::uint64_t p_seed = 0;
  bool p_seed_set = false;
  play_cmd->add_option("--max", p_max, "Max policy")->required();
  play_cmd->add_option("--min", p_min, "Min policy")->required();
  play_cmd->add_option("--family", p_family)->required();
  play_cmd->add_option("--host", p_host)->required();
  play_cmd->add_option("--first", p_first);
  play_cmd->add_option("--seed", p_seed)->each([&](const std::string&) { p_seed_set = true; });
  play_cmd->add_option("--out", p_out);

  // ---- process
  auto* proc = app.add_subcommand("process", "random F-free process");
  std::string r_family, r_host, r_out;
  std::uint64_t r_seed = 0;
  bool r_seed_set = false;
  proc->add_option("--family", r_family)->required();
  proc->add_option("--host", r_host)->required();
  proc->add_option("--seed", r_seed)->each([&](const std::string&) { r_seed_set = true; });
  proc->add_option("--out", r_out);

  // ---- experiment
  auto* exp = app.add_subcommand("experiment", "scaling experiment, CSV output");
  std::string e_family, e_hosts, e_max, e_min, e_out;
  int e_trials = 1;
  std::uint64_t e_seed = 0;
  bool e_seed_set = false;
  exp->add_option("--family", e_family)->required();
  exp->add_option("--hosts", e_hosts, "template@sizes, e.g. B:n,n@50,100,200")->required();
  exp->add_option("--max", e_max)->required();
  exp->add_option("--min", e_min)->required();
  exp->add_option("--trials", e_trials);
  exp->add_option("--seed", e_seed)->each([&](const std::string&) { e_seed_set = true; });
  exp->add_option("--out", e_out, "CSV path (stdout when omitted)");

  // ---- analyze
  auto* analyze = app.add_subcommand("analyze", "reports and closed forms");
  analyze->require_subcommand(1);
  auto* a_match = analyze->add_subcommand("match", "matching bound report");
  std::string am_host, am_edges;
  a_match->add_option("--host", am_host)->required();
  a_match->add_option("--edges", am_edges, "graph JSON file")->required();
  auto* a_ess = analyze->add_subcommand("essential", "essential path report");
  std::string ae_host, ae_edges, ae_s;
  a_ess->add_option("--host", ae_host)->required();
  a_ess->add_option("--edges", ae_edges)->required();
  a_ess->add_option("--s", ae_s, "comma-separated vertex ids of S (default: all)");
  auto* a_c4 = analyze->add_subcommand("c4const", "bound constant a and floor(a n^{13/12})");
  std::string ac_c = "1/3", ac_d = "sqrt(1/3)";
  long long ac_n = 1000;
  a_c4->add_option("--c", ac_c, "rational, e.g. 1/3");
  a_c4->add_option("--d", ac_d, "rational or r*sqrt(s), e.g. 1/4 or sqrt(1/3)");
  a_c4->add_option("--n", ac_n);
  auto* a_formula = analyze->add_subcommand("formula", "closed-form theorem values");
  std::string af_theorem, af_first = "max", af_sweep, af_out;
  int af_n = 0, af_m = 0, af_k = 0, af_r = 0;
  a_formula->add_option("--theorem", af_theorem)->required();
  a_formula->add_option("--n", af_n);
  a_formula->add_option("--m", af_m);
  a_formula->add_option("--k", af_k);
  a_formula->add_option("--r", af_r);
  a_formula->add_option("--first", af_first);
  a_formula->add_option("--sweep", af_sweep,
                        "LO:HI sweep of the leading parameter (k for the odd-cycle forms, "
                        "n otherwise), emitted as CSV");
  a_formula->add_option("--out", af_out, "CSV path for --sweep (stdout when omitted)");

  // ---- verify
  auto* verify = app.add_subcommand("verify", "paper verification suite");
  std::string v_suite = "paper", v_filter;
  verify->add_option("--suite", v_suite)->check(CLI::IsMember({"paper"}));
  verify->add_option("--filter", v_filter, "run only criteria whose key contains this");

  // ---- inspect
  auto* inspect = app.add_subcommand("inspect", "position report");
  std::string i_host, i_edges;
  inspect->add_option("--host", i_host)->required();
  inspect->add_option("--edges", i_edges, "graph JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*solve) {
      HostGraph h = HostGraph::parse(s_host);
      SolveConfig cfg{ForbiddenFamily::parse(s_family, h), h, parse_role(s_first)};
      cfg.memo_capacity = s_memo;
      if (s_budget > 0) cfg.node_budget = s_budget;
      cfg.orbit_reduction = !s_no_orbit;
      if (s_shuffled) cfg.shuffle_seed = s_shuffle;
      try {
        SolveResult r = game_value(cfg);
        emit(solve_result_to_json(r, cfg.family.to_string(), h.to_string(), cfg.first), s_out);
      } catch (const NodeBudgetExceeded& e) {
        json j = {{"family", s_family}, {"host", s_host},  {"first", s_first},
                  {"exact", false},     {"error", e.what()}};
        emit(j, s_out);
        return kExitBudget;
      }
    } else if (*play_cmd) {
      if (!p_seed_set) throw ParseError("play requires --seed");
      HostGraph h = HostGraph::parse(p_host);
      ForbiddenFamily f = ForbiddenFamily::parse(p_family, h);
      Transcript t = play(Policy::parse(p_max), Policy::parse(p_min), f, h, parse_role(p_first),
                          p_seed);
      emit(transcript_to_json(t), p_out);
    } else if (*proc) {
      if (!r_seed_set) throw ParseError("process requires --seed");
      HostGraph h = HostGraph::parse(r_host);
      ForbiddenFamily f = ForbiddenFamily::parse(r_family, h);
      emit(transcript_to_json(random_process(f, h, r_seed)), r_out);
    } else if (*exp) {
      if (!e_seed_set) throw ParseError("experiment requires --seed");
      auto at = e_hosts.find('@');
      if (at == std::string::npos) throw ParseError("--hosts needs template@sizes");
      auto rows = scaling_experiment(e_family, e_hosts.substr(0, at),
                                     parse_size_list(e_hosts.substr(at + 1)),
                                     Policy::parse(e_max), Policy::parse(e_min), e_trials, e_seed);
      std::string csv = experiment_csv(rows);
      if (e_out.empty()) {
        std::cout << csv;
      } else {
        std::ofstream os(e_out);
        if (!os) throw Error("cannot write " + e_out);
        os << csv;
      }
      std::cerr << "# per-trial seed: splitmix64(seed ^ (0x9e3779b97f4a7c15 * (trial_index + 1)))\n";
    } else if (*a_match) {
      HostGraph h = HostGraph::parse(am_host);
      GameGraph g = graph_from_json(load_json_file(am_edges), h);
      emit(match_report_to_json(match_bound_report(g)), "");
    } else if (*a_ess) {
      HostGraph h = HostGraph::parse(ae_host);
      GameGraph g = graph_from_json(load_json_file(ae_edges), h);
      std::vector<Vertex> s;
      if (ae_s.empty()) {
        for (Vertex v = 0; v < g.order(); ++v) s.push_back(v);
      } else {
        s = parse_vertex_list(ae_s);
      }
      emit(essential_report_to_json(essential_path_report(g, s)), "");
    } else if (*a_c4) {
      C4BoundParams p{Rational::parse(ac_c), RootScalar::parse(ac_d)};
      emit(c4_bound_to_json(p, c4_bound_constant(p, ac_n), ac_n), "");
    } else if (*a_formula) {
      ClosedFormQuery q{parse_theorem(af_theorem), af_n, af_m, af_k, af_r, parse_role(af_first)};
      if (af_sweep.empty()) {
        emit(closed_form_to_json(q, closed_form(q)), "");
      } else {
        int lo = 0, hi = 0;
        if (std::sscanf(af_sweep.c_str(), "%d:%d", &lo, &hi) != 2 || lo > hi)
          throw ParseError("--sweep needs LO:HI with LO <= HI");
        bool sweep_k = q.id == TheoremId::OddCycles || q.id == TheoremId::ExOdd;
        std::vector<ClosedFormQuery> queries;
        for (int v = lo; v <= hi; ++v) {
          ClosedFormQuery qq = q;
          (sweep_k ? qq.k : qq.n) = v;
          queries.push_back(qq);
        }
        std::string csv = closed_form_csv(queries);
        if (af_out.empty()) {
          std::cout << csv;
        } else {
          std::ofstream os(af_out);
          if (!os) throw Error("cannot write " + af_out);
          os << csv;
        }
      }
    } else if (*verify) {
      auto rows = run_paper_suite(v_filter);
      if (rows.empty()) throw ParseError("filter matched no criterion: " + v_filter);
      bool all_pass = true;
      for (const auto& row : rows) {
        all_pass = all_pass && row.pass;
        std::cout << (row.pass ? "PASS" : "FAIL") << "  [" << row.criterion << "] " << row.name
                  << " — " << row.detail << "\n";
      }
      std::cout << (all_pass ? "all criteria passed" : "some criteria FAILED") << "\n";
      return all_pass ? kExitOk : kExitVerifyFail;
    } else if (*inspect) {
      HostGraph h = HostGraph::parse(i_host);
      GameGraph g = graph_from_json(load_json_file(i_edges), h);
      json comps = json::array();
      for (const auto& c : components(g)) {
        json jc = {{"class", to_string(c.cls)}, {"vertices", c.vertices}, {"edges", c.edge_cnt}};
        if (h.is_bipartite()) {
          jc["x_count"] = c.x_count;
          jc["y_count"] = c.y_count;
        }
        comps.push_back(jc);
      }
      json sat = json::object();
      std::vector<ForbiddenFamily> families = {ForbiddenFamily::odd_cycles(),
                                               ForbiddenFamily::spanning_trees(h.order()),
                                               ForbiddenFamily::star(4), ForbiddenFamily::path(4)};
      if (h.is_bipartite()) families.push_back(ForbiddenFamily::cycle4());
      for (const auto& f : families) {
        std::string status = !is_free(f, g)      ? "not-free"
                             : is_saturated(f, g) ? "saturated"
                                                  : "free";
        sat[f.to_string()] = status;
      }
      json j = {{"host", h.to_string()},
                {"components", comps},
                {"certificate", certificate(g).hex()},
                {"saturation", sat}};
      emit(j, "");
    }
  } catch (const NodeBudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
