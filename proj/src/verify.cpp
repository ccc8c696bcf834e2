#include "satgame/verify.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include "satgame/analysis.hpp"
#include "satgame/simulate.hpp"
#include "satgame/solver.hpp"

namespace satgame {

namespace {

constexpr const char* kCriteria[] = {
    "1-odd-cycle-values",  "2-tree-values",      "3-claw-values",
    "4-star-computer-check", "5-p4-kn-window",   "6-p4-kmn-values",
    "7-strategy-certificates", "8-c4-builder-structure", "9-matching-lemma",
    "10-c4-bound-constant", "11-property-suites",
};

struct Rows {
  std::string criterion;
  std::vector<CheckRow> rows;

  void add(const std::string& name, bool pass, const std::string& detail) {
    rows.push_back({criterion, name, pass, detail});
  }
  template <class T, class U>
  void expect_eq(const std::string& name, const T& got, const U& want) {
    std::ostringstream os;
    os << "got " << got << ", expected " << want;
    add(name, got == static_cast<T>(want), os.str());
  }
  void expect(const std::string& name, bool cond, const std::string& detail) {
    add(name, cond, detail);
  }
};

int solve_value(const ForbiddenFamily& f, const HostGraph& h, PlayerRole first) {
  SolveConfig cfg{f, h, first};
  return game_value(cfg).value;
}

std::string role_tag(PlayerRole r) { return to_string(r); }

// ------------------------------------------------------- 1: odd-cycle game

Rows odd_cycle_values() {
  Rows out{"1-odd-cycle-values", {}};
  for (int k : {2, 3}) {
    for (PlayerRole first : {PlayerRole::Max, PlayerRole::Min}) {
      int v = solve_value(ForbiddenFamily::odd_cycles(), HostGraph::complete(2 * k), first);
      out.expect_eq("K_" + std::to_string(2 * k) + " " + role_tag(first), v, k * k);
    }
  }
  return out;
}

// ------------------------------------------------------------ 2: tree game

Rows tree_values() {
  Rows out{"2-tree-values", {}};
  for (int n = 4; n <= 7; ++n) {
    for (PlayerRole first : {PlayerRole::Max, PlayerRole::Min}) {
      int v = solve_value(ForbiddenFamily::spanning_trees(n), HostGraph::complete(n), first);
      long long want = closed_form({TheoremId::Trees, n, 0, 0, 0, first}).lo;
      out.expect_eq("K_" + std::to_string(n) + " " + role_tag(first), v, want);
    }
  }
  return out;
}

// ------------------------------------------------------------ 3: claw game

Rows claw_values() {
  Rows out{"3-claw-values", {}};
  for (int n = 3; n <= 8; ++n) {
    for (PlayerRole first : {PlayerRole::Max, PlayerRole::Min}) {
      int v = solve_value(ForbiddenFamily::star(3), HostGraph::complete(n), first);
      long long want = closed_form({TheoremId::Claw, n, 0, 0, 0, first}).lo;
      out.expect_eq("K_" + std::to_string(n) + " " + role_tag(first), v, want);
    }
  }
  return out;
}

// ------------------------------------------------- 4: reported computer check

Rows star_computer_check() {
  Rows out{"4-star-computer-check", {}};
  auto run = [&](int r, int n) {
    int v = solve_value(ForbiddenFamily::star(r + 1), HostGraph::complete(n), PlayerRole::Max);
    long long want = (static_cast<long long>(r) * n - 1) / 2;
    std::ostringstream os;
    os << "got " << v << ", reported floor((rn-1)/2) = " << want;
    if (v != want && n == r + 1) {
      os << " (K_{1," << r + 1 << "} needs " << r + 2 << " vertices, so on K_" << n
         << " the game fills all " << n * (n - 1) / 2 << " edges)";
    }
    out.add("r=" + std::to_string(r) + " n=" + std::to_string(n), v == want, os.str());
  };
  for (int n = 4; n <= 8; ++n) run(3, n);
  for (int n = 5; n <= 7; ++n) run(4, n);
  return out;
}

// ------------------------------------------------------- 5: P_4 on K_n

Rows p4_kn_window() {
  Rows out{"5-p4-kn-window", {}};
  for (int n = 4; n <= 9; ++n) {
    for (PlayerRole first : {PlayerRole::Max, PlayerRole::Min}) {
      int v = solve_value(ForbiddenFamily::path(4), HostGraph::complete(n), first);
      auto window = closed_form({TheoremId::P4Kn, n, 0, 0, 0, first});
      std::ostringstream os;
      os << "got " << v << ", window [" << window.lo << "," << window.hi << "]";
      bool ok = window.lo <= v && v <= window.hi;
      if (first == PlayerRole::Max) {
        // |Msat - (4n-1)/5| <= 1, kept in integers: |5v - (4n-1)| <= 5
        bool near = std::abs(5 * v - (4 * n - 1)) <= 5;
        os << ", |5v-(4n-1)|=" << std::abs(5 * v - (4 * n - 1));
        ok = ok && near;
      }
      out.add("K_" + std::to_string(n) + " " + role_tag(first), ok, os.str());
    }
  }
  return out;
}

// --------------------------------------------------- 6: P_4 on K_{m,n}

Rows p4_kmn_values() {
  Rows out{"6-p4-kmn-values", {}};
  for (int m = 1; m <= 5; ++m) {
    for (int n = 1; n <= m; ++n) {
      for (PlayerRole first : {PlayerRole::Max, PlayerRole::Min}) {
        int v = solve_value(ForbiddenFamily::path(4), HostGraph::bipartite(m, n), first);
        long long want = closed_form({TheoremId::P4Kmn, n, m, 0, 0, first}).lo;
        out.expect_eq("K_{" + std::to_string(m) + "," + std::to_string(n) + "} " + role_tag(first),
                      v, want);
      }
    }
  }
  return out;
}

// ------------------------------------------ 7: best-response certification

Rows strategy_certificates() {
  Rows out{"7-strategy-certificates", {}};

  for (int k : {2, 3}) {
    for (PlayerRole first : {PlayerRole::Max, PlayerRole::Min}) {
      SolveConfig cfg{ForbiddenFamily::odd_cycles(), HostGraph::complete(2 * k), first};
      int v = best_response(Policy::odd_balance_max(), PlayerRole::Max, cfg);
      out.expect_eq("odd-balance-max K_" + std::to_string(2 * k) + " " + role_tag(first), v,
                    k * k);
    }
  }

  for (auto [n, bound] : {std::pair{4, 2}, {5, 6}, {6, 7}}) {
    SolveConfig cfg{ForbiddenFamily::spanning_trees(n), HostGraph::complete(n), PlayerRole::Max};
    int v = best_response(Policy::tree_one_max(), PlayerRole::Max, cfg);
    std::ostringstream os;
    os << "forces " << v << ", needs >= " << bound;
    out.add("tree-one-max K_" + std::to_string(n) + " max-start", v >= bound, os.str());
  }

  for (int n = 5; n <= 8; ++n) {
    for (PlayerRole first : {PlayerRole::Max, PlayerRole::Min}) {
      long long want = closed_form({TheoremId::Claw, n, 0, 0, 0, first}).lo;
      SolveConfig cfg{ForbiddenFamily::star(3), HostGraph::complete(n), first};
      PlayerRole winner = want == n ? PlayerRole::Max : PlayerRole::Min;
      int v = best_response(Policy::claw_parity(), winner, cfg);
      std::ostringstream os;
      os << "winner " << role_tag(winner) << " forces " << v << ", closed-form value " << want;
      out.add("claw-parity K_" + std::to_string(n) + " " + role_tag(first), v == want, os.str());
    }
  }

  for (int n = 4; n <= 9; ++n) {
    SolveConfig cfg{ForbiddenFamily::path(4), HostGraph::complete(n), PlayerRole::Max};
    int vmin = best_response(Policy::p4_min(), PlayerRole::Min, cfg);
    int vmax = best_response(Policy::p4_max(), PlayerRole::Max, cfg);
    long long min_bound = (4 * n + 4) / 5;
    long long max_bound = (4 * n - 6 + 4) / 5;
    std::ostringstream os1, os2;
    os1 << "holds to " << vmin << ", needs <= " << min_bound;
    os2 << "forces " << vmax << ", needs >= " << max_bound;
    out.add("p4-min K_" + std::to_string(n) + " max-start", vmin <= min_bound, os1.str());
    out.add("p4-max K_" + std::to_string(n) + " max-start", vmax >= max_bound, os2.str());
  }

  for (int m = 1; m <= 5; ++m) {
    for (int n = 1; n <= m; ++n) {
      for (PlayerRole first : {PlayerRole::Max, PlayerRole::Min}) {
        long long want = closed_form({TheoremId::P4Kmn, n, m, 0, 0, first}).lo;
        SolveConfig cfg{ForbiddenFamily::path(4), HostGraph::bipartite(m, n), first};
        int vmin = best_response(Policy::bip_p4_min(), PlayerRole::Min, cfg);
        int vmax = best_response(Policy::bip_p4_max(), PlayerRole::Max, cfg);
        std::string tag =
            "K_{" + std::to_string(m) + "," + std::to_string(n) + "} " + role_tag(first);
        out.expect_eq("bip-p4-min " + tag, vmin, want);
        out.expect_eq("bip-p4-max " + tag, vmax, want);
      }
    }
  }
  return out;
}

// ----------------------------------------------- 8: C_4 star-builder games

struct StarAudit {
  bool saturated_ok = false;
  bool stars_done = false;
  bool disjoint = false;
  int max_s_neighbors = 0;
  bool connected = false;
  int final_size = 0;
  std::string note;
};

StarAudit audit_c4_game(int n, std::uint64_t seed) {
  StarAudit audit;
  HostGraph h = HostGraph::bipartite(n, n);
  ForbiddenFamily f = ForbiddenFamily::cycle4();
  int k = std::max(0, static_cast<int>(std::floor(std::sqrt(n / 3.0))) - 1);
  Transcript t = play(Policy::c4_star_max(), Policy::random_unseeded(), f, h, PlayerRole::Max,
                      seed);
  GameGraph g = replay(t);  // throws if the transcript is inconsistent
  audit.saturated_ok = t.saturated;
  audit.final_size = t.final_size;

  auto is_center = [&](Vertex v) { return (v >= 0 && v < k) || (v >= n && v < n + k); };

  // designated leaves: fresh vertices claimed by the Max player for a center
  // that was still below degree k
  std::vector<std::set<Vertex>> leaves(static_cast<size_t>(2 * k));
  std::vector<int> deg(static_cast<size_t>(2 * n), 0);
  for (const auto& mv : t.moves) {
    if (mv.mover == PlayerRole::Max) {
      for (auto [c, w] : {std::pair{mv.edge.u, mv.edge.v}, std::pair{mv.edge.v, mv.edge.u}}) {
        if (!is_center(c) || is_center(w)) continue;
        if (deg[static_cast<size_t>(w)] != 0) continue;
        if (deg[static_cast<size_t>(c)] >= k) continue;
        int ci = c < n ? c : k + (c - n);
        leaves[static_cast<size_t>(ci)].insert(w);
      }
    }
    ++deg[static_cast<size_t>(mv.edge.u)];
    ++deg[static_cast<size_t>(mv.edge.v)];
  }

  audit.stars_done = true;
  for (int ci = 0; ci < 2 * k; ++ci) {
    Vertex c = ci < k ? ci : n + (ci - k);
    if (g.degree(c) < k) audit.stars_done = false;
  }
  std::set<Vertex> s_all;
  audit.disjoint = true;
  for (const auto& ls : leaves) {
    for (Vertex v : ls) {
      if (is_center(v) || !s_all.insert(v).second) audit.disjoint = false;
    }
  }

  for (Vertex v = 0; v < g.order(); ++v) {
    int cnt = 0;
    for (Vertex w : g.neighbors(v))
      if (s_all.count(w)) ++cnt;
    audit.max_s_neighbors = std::max(audit.max_s_neighbors, cnt);
  }
  audit.connected = components(g).size() == 1 && g.edge_count() >= 2 * n - 1;
  return audit;
}

Rows c4_star_structure() {
  Rows out{"8-c4-builder-structure", {}};
  for (int n : {100, 400}) {
    int k = std::max(0, static_cast<int>(std::floor(std::sqrt(n / 3.0))) - 1);
    int cap = static_cast<int>(std::ceil(std::sqrt(n / 3.0)));
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      StarAudit a = audit_c4_game(n, seed);
      std::ostringstream os;
      os << "final " << a.final_size << " edges, stars(k=" << k << ") "
         << (a.stars_done ? "done" : "incomplete") << (a.disjoint ? ", disjoint" : ", OVERLAP")
         << ", max |N(v) ∩ S| = " << a.max_s_neighbors << " (cap " << cap << ")"
         << (a.connected ? ", connected" : ", DISCONNECTED");
      bool pass = a.saturated_ok && a.stars_done && a.disjoint && a.max_s_neighbors <= cap &&
                  a.connected;
      out.add("K_{" + std::to_string(n) + "," + std::to_string(n) + "} seed " +
                  std::to_string(seed),
              pass, os.str());
    }
  }
  return out;
}

// ------------------------------------------------------- 9: matching lemma

Rows matching_lemma() {
  Rows out{"9-matching-lemma", {}};
  ForbiddenFamily f = ForbiddenFamily::path(4);
  for (int m = 1; m <= 7; ++m) {
    for (int n = 1; n <= m && m + n <= 8; ++n) {
      HostGraph h = HostGraph::bipartite(m, n);
      auto host_edges = h.all_edges();
      int bits = static_cast<int>(host_edges.size());
      long long checked = 0, violations = 0, equality_violations = 0;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
        GameGraph g(h);
        for (int b = 0; b < bits; ++b)
          if (mask >> b & 1) g = add_edge(std::move(g), host_edges[static_cast<size_t>(b)]);
        if (!is_free(f, g) || !legal_moves(f, g).empty()) continue;
        ++checked;
        MatchReport r = match_bound_report(g);
        if (r.edges > r.bound) ++violations;
        bool isolated_edge = false;
        for (const auto& c : components(g))
          if (c.cls == ComponentClass::SingleEdge) isolated_edge = true;
        if ((r.full || isolated_edge) && !r.equality) ++equality_violations;
      }
      std::ostringstream os;
      os << checked << " saturated subgraphs, " << violations << " bound violations, "
         << equality_violations << " equality violations";
      out.add("K_{" + std::to_string(m) + "," + std::to_string(n) + "}",
              checked > 0 && violations == 0 && equality_violations == 0, os.str());
    }
  }
  return out;
}

// ----------------------------------------------------- 10: bound constants

Rows c4_bound_rows() {
  Rows out{"10-c4-bound-constant", {}};
  {
    C4BoundParams p{Rational(1, 3), RootScalar::parse("sqrt(1/3)")};
    C4Bound b = c4_bound_constant(p, 1000);
    double target = 1.0 / 10.4;
    std::ostringstream os;
    os << "a = " << b.a << " vs 1/10.4 = " << target << " (|diff| = " << std::abs(b.a - target)
       << ")";
    out.add("a(1/3, 1/sqrt(3)) ~ 1/10.4", std::abs(b.a - target) <= 1e-3, os.str());
    double exact = std::sqrt(3.0) / 18.0;
    out.expect("a equals sqrt(3)/18", std::abs(b.a - exact) <= 1e-12,
               "double branch evaluation matches closed form");
  }
  for (auto d : {Rational(1, 4), Rational(1, 5), Rational(3, 100)}) {
    C4BoundParams p{Rational(1), RootScalar{d, Rational(1)}};
    C4Bound b = c4_bound_constant(p, 100);
    Rational want = Rational(1) / (d * Rational(2));
    bool ok = b.a_exact && *b.a_exact == want && b.min_is_second_branch;
    std::ostringstream os;
    os << "a_exact = " << (b.a_exact ? b.a_exact->to_string() : "none") << ", expected "
       << want.to_string();
    out.add("corollary a = 1/(2d) at d = " + d.to_string(), ok, os.str());
  }
  {
    // crossover: both branches equal at c = 1, d = 1/4
    C4BoundParams p{Rational(1), RootScalar{Rational(1, 4), Rational(1)}};
    C4Bound b = c4_bound_constant(p, 100);
    out.expect("crossover branches agree at d = 1/4",
               std::abs(0.5 * b.b - b.a) <= 1e-12 && b.a == 2.0,
               "(1/2)b = " + std::to_string(0.5 * b.b) + ", a = " + std::to_string(b.a));
  }
  return out;
}

// -------------------------------------------------- 11: property suites

std::uint64_t rng_next(std::uint64_t& s) { return s = splitmix64(s); }

Rows property_suites() {
  Rows out{"11-property-suites", {}};

  // certificate invariance under random host automorphisms
  {
    std::uint64_t s = 20240901;
    int failures = 0;
    const int cases = 1000;
    for (int it = 0; it < cases; ++it) {
      bool bip = rng_next(s) % 2 == 0;
      HostGraph h = bip ? HostGraph::bipartite(2 + static_cast<int>(rng_next(s) % 4),
                                               1 + static_cast<int>(rng_next(s) % 4))
                        : HostGraph::complete(2 + static_cast<int>(rng_next(s) % 9));
      auto edges = h.all_edges();
      GameGraph g(h);
      for (Edge e : edges)
        if (rng_next(s) % 3 == 0) g = add_edge(std::move(g), e);

      // random automorphism: permute within parts, swap parts when m == n
      int order = h.order();
      std::vector<Vertex> perm(static_cast<size_t>(order));
      for (int i = 0; i < order; ++i) perm[static_cast<size_t>(i)] = i;
      auto shuffle_range = [&](int lo, int hi) {
        for (int i = hi - lo; i > 1; --i) {
          int j = lo + static_cast<int>(rng_next(s) % static_cast<std::uint64_t>(i));
          std::swap(perm[static_cast<size_t>(lo + i - 1)], perm[static_cast<size_t>(j)]);
        }
      };
      if (!bip) {
        shuffle_range(0, order);
      } else {
        int m = h.part_x(), n = h.part_y();
        shuffle_range(0, m);
        shuffle_range(m, m + n);
        if (m == n && rng_next(s) % 2 == 0) {
          // compose with the part exchange x <-> x + m
          for (auto& v : perm) v = v < m ? v + m : v - m;
        }
      }
      GameGraph gp(h);
      for (Edge e : g.edges())
        gp = add_edge(std::move(gp), Edge(perm[static_cast<size_t>(e.u)], perm[static_cast<size_t>(e.v)]));
      if (!(certificate(g) == certificate(gp))) ++failures;
    }
    out.expect("certificate automorphism invariance",
               failures == 0, std::to_string(cases) + " cases, " + std::to_string(failures) +
                                  " failures");
  }

  // solver order-independence on the criteria 1-6 instances
  {
    struct Instance {
      ForbiddenFamily f;
      HostGraph h;
    };
    std::vector<Instance> instances;
    for (int k : {2, 3})
      instances.push_back({ForbiddenFamily::odd_cycles(), HostGraph::complete(2 * k)});
    for (int n = 4; n <= 7; ++n)
      instances.push_back({ForbiddenFamily::spanning_trees(n), HostGraph::complete(n)});
    for (int n = 3; n <= 8; ++n)
      instances.push_back({ForbiddenFamily::star(3), HostGraph::complete(n)});
    for (int n = 4; n <= 8; ++n)
      instances.push_back({ForbiddenFamily::star(4), HostGraph::complete(n)});
    for (int n = 5; n <= 7; ++n)
      instances.push_back({ForbiddenFamily::star(5), HostGraph::complete(n)});
    for (int n = 4; n <= 9; ++n)
      instances.push_back({ForbiddenFamily::path(4), HostGraph::complete(n)});
    for (int m = 1; m <= 5; ++m)
      for (int n = 1; n <= m; ++n)
        instances.push_back({ForbiddenFamily::path(4), HostGraph::bipartite(m, n)});

    int mismatches = 0, count = 0;
    for (const auto& inst : instances) {
      for (PlayerRole first : {PlayerRole::Max, PlayerRole::Min}) {
        SolveConfig plain{inst.f, inst.h, first};
        SolveConfig shuffled = plain;
        shuffled.shuffle_seed = 0xfeedULL;
        SolveConfig no_orbit = plain;
        no_orbit.orbit_reduction = false;
        int v = game_value(plain).value;
        ++count;
        if (game_value(shuffled).value != v || game_value(no_orbit).value != v) ++mismatches;
      }
    }
    out.expect("solver order/orbit independence", mismatches == 0,
               std::to_string(count) + " instances re-solved shuffled and orbit-off, " +
                   std::to_string(mismatches) + " mismatches");
  }

  // transcript replay identity on freshly emitted transcripts
  {
    int failures = 0, count = 0;
    auto check = [&](const Transcript& t) {
      ++count;
      try {
        replay(t);
      } catch (const Error&) {
        ++failures;
      }
    };
    check(play(Policy::odd_balance_max(), Policy::random_unseeded(), ForbiddenFamily::odd_cycles(),
               HostGraph::complete(6), PlayerRole::Max, 11));
    check(play(Policy::tree_one_max(), Policy::tree_split_min(),
               ForbiddenFamily::spanning_trees(7), HostGraph::complete(7), PlayerRole::Min, 12));
    check(play(Policy::claw_parity(), Policy::random_unseeded(), ForbiddenFamily::star(3),
               HostGraph::complete(8), PlayerRole::Max, 13));
    check(play(Policy::p4_max(), Policy::p4_min(), ForbiddenFamily::path(4),
               HostGraph::complete(9), PlayerRole::Max, 14));
    check(play(Policy::bip_p4_max(), Policy::bip_p4_min(), ForbiddenFamily::path(4),
               HostGraph::bipartite(5, 4), PlayerRole::Min, 15));
    check(play(Policy::c4_star_max(), Policy::random_unseeded(), ForbiddenFamily::cycle4(),
               HostGraph::bipartite(30, 30), PlayerRole::Max, 16));
    for (std::uint64_t seed = 21; seed <= 23; ++seed)
      check(random_process(ForbiddenFamily::cycle4(), HostGraph::bipartite(12, 12), seed));
    check(random_process(ForbiddenFamily::star(4), HostGraph::complete(8), 24));
    out.expect("transcript replay identity", failures == 0,
               std::to_string(count) + " transcripts replayed, " + std::to_string(failures) +
                   " failures");
  }
  return out;
}

}  // namespace

std::vector<std::string> paper_suite_criteria() {
  return {std::begin(kCriteria), std::end(kCriteria)};
}

std::vector<CheckRow> run_paper_criterion(const std::string& criterion) {
  if (criterion == kCriteria[0]) return odd_cycle_values().rows;
  if (criterion == kCriteria[1]) return tree_values().rows;
  if (criterion == kCriteria[2]) return claw_values().rows;
  if (criterion == kCriteria[3]) return star_computer_check().rows;
  if (criterion == kCriteria[4]) return p4_kn_window().rows;
  if (criterion == kCriteria[5]) return p4_kmn_values().rows;
  if (criterion == kCriteria[6]) return strategy_certificates().rows;
  if (criterion == kCriteria[7]) return c4_star_structure().rows;
  if (criterion == kCriteria[8]) return matching_lemma().rows;
  if (criterion == kCriteria[9]) return c4_bound_rows().rows;
  if (criterion == kCriteria[10]) return property_suites().rows;
  throw Error("unknown criterion: " + criterion);
}

std::vector<CheckRow> run_paper_suite(const std::string& filter) {
  std::vector<CheckRow> all;
  for (const auto& c : paper_suite_criteria()) {
    if (!filter.empty() && c.find(filter) == std::string::npos) continue;
    auto rows = run_paper_criterion(c);
    all.insert(all.end(), rows.begin(), rows.end());
  }
  return all;
}

}  // namespace satgame
