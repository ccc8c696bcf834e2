#include "satgame/policy.hpp"

#include <array>
#include <climits>
#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <optional>

namespace satgame {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Policy Policy::parse(const std::string& text) {
  if (text == "odd-balance-max") return odd_balance_max();
  if (text == "tree-one-max") return tree_one_max();
  if (text == "tree-split-min") return tree_split_min();
  if (text == "claw-parity") return claw_parity();
  if (text == "p4-min") return p4_min();
  if (text == "p4-max") return p4_max();
  if (text == "bip-p4-min") return bip_p4_min();
  if (text == "bip-p4-max") return bip_p4_max();
  if (text == "c4-star-max") return c4_star_max();
  if (text == "first") return first_legal();
  if (text == "random") return random_unseeded();
  unsigned long long s = 0;
  if (std::sscanf(text.c_str(), "random:%llu", &s) == 1) return random_legal(s);
  throw ParseError("bad policy spec: " + text);
}

Policy Policy::with_seed(std::uint64_t s) const {
  Policy p = *this;
  p.seed_ = s;
  p.has_seed_ = true;
  return p;
}

Policy Policy::next_draw() const {
  Policy p = *this;
  ++p.counter_;
  return p;
}

std::string Policy::name() const {
  switch (kind_) {
    case PolicyKind::OddCycleBalanceMax: return "odd-balance-max";
    case PolicyKind::TreeOneComponentMax: return "tree-one-max";
    case PolicyKind::TreeSplitMin: return "tree-split-min";
    case PolicyKind::ClawParityW: return "claw-parity";
    case PolicyKind::P4MinKn: return "p4-min";
    case PolicyKind::P4MaxKn: return "p4-max";
    case PolicyKind::BipP4Min: return "bip-p4-min";
    case PolicyKind::BipP4Max: return "bip-p4-max";
    case PolicyKind::C4StarBuilderMax: return "c4-star-max";
    case PolicyKind::FirstLegal: return "first";
    case PolicyKind::RandomLegal:
      return has_seed_ ? "random:" + std::to_string(seed_) : "random";
  }
  return "?";
}

int claw_abstract_value(int isolates, int paths2, int paths3, PlayerRole mover) {
  static std::map<std::array<int, 4>, int> memo;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);

  struct Rec {
    std::map<std::array<int, 4>, int>& memo;
    int run(int i, int n2, int n3, PlayerRole who) {
      std::array<int, 4> key{i, n2, n3, who == PlayerRole::Max ? 1 : 0};
      auto it = memo.find(key);
      if (it != memo.end()) return it->second;
      int best = -1;
      auto visit = [&](int ci, int cn2, int cn3) {
        int v = 1 + run(ci, cn2, cn3, other(who));
        if (best < 0)
          best = v;
        else
          best = who == PlayerRole::Max ? std::max(best, v) : std::min(best, v);
      };
      if (i >= 2) visit(i - 2, n2 + 1, n3);                 // new isolated edge
      if (i >= 1 && n2 >= 1) visit(i - 1, n2 - 1, n3 + 1);  // extend a P_2
      if (i >= 1 && n3 >= 1) visit(i - 1, n2, n3);          // extend a longer path
      if (n3 >= 1) visit(i, n2, n3 - 1);                    // close a cycle
      if (n2 >= 2) visit(i, n2 - 2, n3 + 1);                // merge two P_2s
      if (n2 >= 1 && n3 >= 1) visit(i, n2 - 1, n3);         // merge P_2 + path
      if (n3 >= 2) visit(i, n2, n3 - 1);                    // merge two paths
      if (best < 0) best = 0;                               // saturated
      memo.emplace(key, best);
      return best;
    }
  } rec{memo};
  return rec.run(isolates, paths2, paths3, mover);
}

namespace {

bool legal_ok(const ForbiddenFamily& f, const GameGraph& g, Edge e) {
  return g.host().allows(e) && !g.has_edge(e) && !move_creates(f, g, e);
}

void consider(std::optional<Edge>& best, Edge e) {
  if (!best || e < *best) best = e;
}

struct Digest {
  std::vector<ComponentSummary> comps;
  std::vector<Vertex> isolates;
  std::vector<Vertex> iso_x, iso_y;  // bipartite split

  explicit Digest(const GameGraph& g) : comps(components(g)) {
    for (const auto& c : comps) {
      if (c.cls != ComponentClass::IsolatedVertex) continue;
      Vertex v = c.vertices.front();
      isolates.push_back(v);
      if (g.host().is_bipartite()) (g.host().in_part_y(v) ? iso_y : iso_x).push_back(v);
    }
  }
};

// Star components with >= 2 leaves (K_{1,2} is reported as Path(3)).
struct BigStar {
  Vertex center;
  int leaves;
};

std::optional<BigStar> as_big_star(const GameGraph& g, const ComponentSummary& c) {
  if (c.cls == ComponentClass::Star) return BigStar{c.star_center, c.star_leaves};
  if (c.cls == ComponentClass::Path && c.path_len == 3) {
    for (Vertex v : c.vertices)
      if (g.degree(v) == 2) return BigStar{v, 2};
  }
  return std::nullopt;
}

std::vector<Vertex> path_endpoints(const GameGraph& g, const ComponentSummary& c) {
  std::vector<Vertex> out;
  for (Vertex v : c.vertices)
    if (g.degree(v) <= 1) out.push_back(v);
  return out;
}

// Per-vertex component label and 2-coloring (valid on odd-cycle-free input).
struct VertexColoring {
  std::vector<int> comp;
  std::vector<int> color;
  int count = 0;
};

VertexColoring vertex_coloring(const GameGraph& g) {
  VertexColoring c;
  c.comp.assign(static_cast<size_t>(g.order()), -1);
  c.color.assign(static_cast<size_t>(g.order()), 0);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (c.comp[static_cast<size_t>(s)] >= 0) continue;
    int id = c.count++;
    c.comp[static_cast<size_t>(s)] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (c.comp[static_cast<size_t>(w)] < 0) {
          c.comp[static_cast<size_t>(w)] = id;
          c.color[static_cast<size_t>(w)] = 1 - c.color[static_cast<size_t>(v)];
          stack.push_back(w);
        }
      }
    }
  }
  return c;
}

// ---------------------------------------------------------------- odd cycles

Edge select_odd_balance(const ForbiddenFamily& f, const GameGraph& g, Edge fallback) {
  Digest d(g);
  VertexColoring vc = vertex_coloring(g);

  // rebalance: attach an isolated vertex to the larger color class of an
  // unbalanced nontrivial component
  if (!d.isolates.empty()) {
    std::optional<Edge> best;
    for (const auto& c : d.comps) {
      if (!c.nontrivial()) continue;
      int a = 0, b = 0;
      for (Vertex v : c.vertices) (vc.color[static_cast<size_t>(v)] == 0 ? a : b)++;
      if (a == b) continue;
      int big = a > b ? 0 : 1;
      for (Vertex v : c.vertices) {
        if (vc.color[static_cast<size_t>(v)] != big) continue;
        for (Vertex iso : d.isolates) consider(best, Edge(iso, v));
      }
    }
    if (best && legal_ok(f, g, *best)) return *best;
  }

  // edge inside a nontrivial component, across the two color classes
  {
    std::optional<Edge> best;
    for (const auto& c : d.comps) {
      if (!c.nontrivial()) continue;
      for (size_t i = 0; i < c.vertices.size(); ++i) {
        for (size_t j = i + 1; j < c.vertices.size(); ++j) {
          Vertex u = c.vertices[i], v = c.vertices[j];
          if (g.adjacent(u, v)) continue;
          if (vc.color[static_cast<size_t>(u)] == vc.color[static_cast<size_t>(v)]) continue;
          consider(best, Edge(u, v));
        }
      }
    }
    if (best && legal_ok(f, g, *best)) return *best;
  }

  // connect two nontrivial components
  {
    std::optional<Edge> best;
    for (size_t i = 0; i < d.comps.size(); ++i) {
      if (!d.comps[i].nontrivial()) continue;
      for (size_t j = i + 1; j < d.comps.size(); ++j) {
        if (!d.comps[j].nontrivial()) continue;
        for (Vertex u : d.comps[i].vertices)
          for (Vertex v : d.comps[j].vertices) consider(best, Edge(u, v));
      }
    }
    if (best && legal_ok(f, g, *best)) return *best;
  }

  if (d.isolates.size() >= 2) {
    Edge e(d.isolates[0], d.isolates[1]);
    if (legal_ok(f, g, e)) return e;
  }
  return fallback;
}

// ---------------------------------------------------------------- tree game

Edge select_tree_one_max(const ForbiddenFamily& f, const GameGraph& g, Edge fallback) {
  Digest d(g);
  size_t total = d.comps.size();
  std::vector<const ComponentSummary*> nt;
  for (const auto& c : d.comps)
    if (c.nontrivial()) nt.push_back(&c);

  // rejoin: a merge is legal as long as it does not connect the whole graph
  if (nt.size() >= 2 && total > 2) {
    std::optional<Edge> best;
    for (size_t i = 0; i < nt.size(); ++i)
      for (size_t j = i + 1; j < nt.size(); ++j)
        for (Vertex u : nt[i]->vertices)
          for (Vertex v : nt[j]->vertices) consider(best, Edge(u, v));
    if (best && legal_ok(f, g, *best)) return *best;
  }

  // absorb an isolated vertex; dropping to one isolate first is what makes
  // the K_5 exception reachable
  if (!d.isolates.empty() && total > 2) {
    std::optional<Edge> best;
    for (const auto* c : nt)
      for (Vertex u : c->vertices)
        for (Vertex iso : d.isolates) consider(best, Edge(iso, u));
    if (best && legal_ok(f, g, *best)) return *best;
  }

  // fill inside a component
  {
    std::optional<Edge> best;
    for (const auto* c : nt) {
      for (size_t i = 0; i < c->vertices.size(); ++i)
        for (size_t j = i + 1; j < c->vertices.size(); ++j)
          if (!g.adjacent(c->vertices[i], c->vertices[j]))
            consider(best, Edge(c->vertices[i], c->vertices[j]));
    }
    if (best && legal_ok(f, g, *best)) return *best;
  }
  return fallback;
}

Edge select_tree_split_min(const ForbiddenFamily& f, const GameGraph& g, Edge fallback) {
  Digest d(g);
  std::vector<const ComponentSummary*> nt;
  for (const auto& c : d.comps)
    if (c.nontrivial()) nt.push_back(&c);
  size_t total = d.comps.size();
  size_t iso = d.isolates.size();

  auto iso_pair = [&]() -> std::optional<Edge> {
    if (iso < 2) return std::nullopt;
    Edge e(d.isolates[0], d.isolates[1]);
    if (legal_ok(f, g, e)) return e;
    return std::nullopt;
  };
  auto internal_fill = [&]() -> std::optional<Edge> {
    std::optional<Edge> best;
    for (const auto* c : nt)
      for (size_t i = 0; i < c->vertices.size(); ++i)
        for (size_t j = i + 1; j < c->vertices.size(); ++j)
          if (!g.adjacent(c->vertices[i], c->vertices[j]))
            consider(best, Edge(c->vertices[i], c->vertices[j]));
    if (best && legal_ok(f, g, *best)) return best;
    return std::nullopt;
  };

  if (nt.size() >= 2) {
    if (auto e = iso_pair()) return *e;
    if (iso == 1 && total > 2) {
      std::optional<Edge> best;
      for (const auto* c : nt)
        for (Vertex u : c->vertices) consider(best, Edge(d.isolates[0], u));
      if (best && legal_ok(f, g, *best)) return *best;
    }
    if (auto e = internal_fill()) return *e;
    return fallback;
  }

  if (nt.size() == 1) {
    const ComponentSummary& c = *nt.front();
    if (iso % 2 == 0) {
      if (auto e = iso_pair()) return *e;
    } else {
      if (c.cls == ComponentClass::SingleEdge && iso >= 3) {
        // grow the P_2 into P_3 to fix the isolate parity
        std::optional<Edge> best;
        for (Vertex u : c.vertices)
          for (Vertex i : d.isolates) consider(best, Edge(i, u));
        if (best && legal_ok(f, g, *best)) return *best;
      }
      if (c.cls == ComponentClass::Path && c.path_len == 3) {
        auto ends = path_endpoints(g, c);
        if (ends.size() == 2) {
          Edge e(ends[0], ends[1]);
          if (legal_ok(f, g, e)) return e;
        }
      }
      if (auto e = iso_pair()) return *e;
    }
    if (auto e = internal_fill()) return *e;
    return fallback;
  }

  if (auto e = iso_pair()) return *e;
  return fallback;
}

// ---------------------------------------------------------------- claw game

struct ClawState {
  int i = 0, n2 = 0, n3 = 0;
};

ClawState claw_digest(const std::vector<ComponentSummary>& comps) {
  ClawState s;
  for (const auto& c : comps) {
    switch (c.cls) {
      case ComponentClass::IsolatedVertex: ++s.i; break;
      case ComponentClass::SingleEdge: ++s.n2; break;
      case ComponentClass::Path: ++s.n3; break;
      default: break;  // cycles and triangles are dead
    }
  }
  return s;
}

Edge select_claw_parity(const ForbiddenFamily& f, const GameGraph& g, PlayerRole mover,
                        Edge fallback) {
  Digest d(g);
  ClawState st = claw_digest(d.comps);

  if (st.i <= 6) {
    // solved endgame: optimize the mover's objective on the abstraction
    std::optional<Edge> best_edge;
    int best_val = 0;
    for (Edge e : legal_moves(f, g)) {
      ClawState cs = claw_digest(components(add_edge(g, e)));
      int v = 1 + claw_abstract_value(cs.i, cs.n2, cs.n3, other(mover));
      bool better = !best_edge || (mover == PlayerRole::Max ? v > best_val : v < best_val);
      if (better) {
        best_edge = e;
        best_val = v;
      }
    }
    if (best_edge) return *best_edge;
    return fallback;
  }

  int paths = st.n2 + st.n3;
  if (paths == 0 && st.i >= 2) {
    Edge e(d.isolates[0], d.isolates[1]);
    if (legal_ok(f, g, e)) return e;
  }
  if (paths >= 2) {
    std::optional<Edge> best;
    std::vector<std::vector<Vertex>> ends;
    for (const auto& c : d.comps)
      if (c.cls == ComponentClass::SingleEdge || c.cls == ComponentClass::Path)
        ends.push_back(path_endpoints(g, c));
    for (size_t i = 0; i < ends.size(); ++i)
      for (size_t j = i + 1; j < ends.size(); ++j)
        for (Vertex u : ends[i])
          for (Vertex v : ends[j]) consider(best, Edge(u, v));
    if (best && legal_ok(f, g, *best)) return *best;
  }
  if (paths == 1 && st.i >= 1) {
    std::optional<Edge> best;
    for (const auto& c : d.comps) {
      if (c.cls != ComponentClass::SingleEdge && c.cls != ComponentClass::Path) continue;
      for (Vertex u : path_endpoints(g, c))
        for (Vertex iso : d.isolates) consider(best, Edge(iso, u));
    }
    if (best && legal_ok(f, g, *best)) return *best;
  }
  return fallback;
}

// ------------------------------------------------------------ P_4 on K_n

Edge select_p4_min_kn(const ForbiddenFamily& f, const GameGraph& g, Edge fallback) {
  Digest d(g);
  std::vector<Vertex> p3_centers;
  std::vector<BigStar> big;  // >= 3 leaves
  std::vector<const ComponentSummary*> p2s;
  for (const auto& c : d.comps) {
    if (c.cls == ComponentClass::SingleEdge) p2s.push_back(&c);
    if (auto s = as_big_star(g, c)) {
      if (s->leaves == 2)
        p3_centers.push_back(s->center);
      else
        big.push_back(*s);
    }
  }
  size_t iso = d.isolates.size();

  if (iso >= 2) {
    // a P_3 left by Max is dangerous: convert it to K_{1,3}
    if (!p3_centers.empty()) {
      std::optional<Edge> best;
      for (Vertex c : p3_centers)
        for (Vertex i : d.isolates) consider(best, Edge(i, c));
      if (best && legal_ok(f, g, *best)) return *best;
    }
    if (iso == 3 && !big.empty()) {
      std::optional<Edge> best;
      for (const auto& s : big)
        for (Vertex i : d.isolates) consider(best, Edge(i, s.center));
      if (best && legal_ok(f, g, *best)) return *best;
    }
    Edge e(d.isolates[0], d.isolates[1]);
    if (legal_ok(f, g, e)) return e;
  }

  if (iso == 1) {
    // attach the last isolate to a largest star (an isolated edge counts
    // as the 1-leaf star)
    int best_rank = 0;
    for (const auto& s : big) best_rank = std::max(best_rank, s.leaves);
    if (!p3_centers.empty()) best_rank = std::max(best_rank, 2);
    if (best_rank == 0 && !p2s.empty()) best_rank = 1;
    std::optional<Edge> best;
    for (const auto& s : big)
      if (s.leaves == best_rank) consider(best, Edge(d.isolates[0], s.center));
    if (best_rank == 2)
      for (Vertex c : p3_centers) consider(best, Edge(d.isolates[0], c));
    if (best_rank == 1)
      for (const auto* c : p2s)
        for (Vertex u : c->vertices) consider(best, Edge(d.isolates[0], u));
    if (best && legal_ok(f, g, *best)) return *best;
  }
  return fallback;
}

Edge select_p4_max_kn(const ForbiddenFamily& f, const GameGraph& g, Edge fallback) {
  if (g.edge_count() == 0) return Edge(0, 1);  // mandated opening
  Digest d(g);
  std::vector<Vertex> p3_centers;
  std::vector<const ComponentSummary*> p3s;
  std::vector<BigStar> big;
  std::vector<const ComponentSummary*> p2s;
  for (const auto& c : d.comps) {
    if (c.cls == ComponentClass::SingleEdge) p2s.push_back(&c);
    if (c.cls == ComponentClass::Path && c.path_len == 3) p3s.push_back(&c);
    if (auto s = as_big_star(g, c); s && s->leaves >= 3) big.push_back(*s);
  }
  size_t iso = d.isolates.size();

  // a P_2 left by Min gets extended to P_3
  if (iso >= 1 && !p2s.empty()) {
    std::optional<Edge> best;
    for (const auto* c : p2s)
      for (Vertex u : c->vertices)
        for (Vertex i : d.isolates) consider(best, Edge(i, u));
    if (best && legal_ok(f, g, *best)) return *best;
  }
  // grow a star that already has at least three edges
  if (iso >= 1 && !big.empty()) {
    std::optional<Edge> best;
    for (const auto& s : big)
      for (Vertex i : d.isolates) consider(best, Edge(i, s.center));
    if (best && legal_ok(f, g, *best)) return *best;
  }
  // otherwise complete a triangle
  if (!p3s.empty()) {
    std::optional<Edge> best;
    for (const auto* c : p3s) {
      auto ends = path_endpoints(g, *c);
      if (ends.size() == 2) consider(best, Edge(ends[0], ends[1]));
    }
    if (best && legal_ok(f, g, *best)) return *best;
  }
  // forced: join the last isolated vertices
  if (iso >= 2) {
    Edge e(d.isolates[0], d.isolates[1]);
    if (legal_ok(f, g, e)) return e;
  }
  return fallback;
}

// ------------------------------------------------------------ P_4 on K_{m,n}

struct BipStars {
  std::vector<BigStar> x_stars;  // >= 2 leaves in X (center in Y)
  std::vector<BigStar> y_stars;  // >= 2 leaves in Y (center in X)
};

BipStars bip_stars(const GameGraph& g, const Digest& d) {
  BipStars out;
  for (const auto& c : d.comps) {
    if (auto s = as_big_star(g, c)) {
      if (g.host().in_part_y(s->center))
        out.x_stars.push_back(*s);
      else
        out.y_stars.push_back(*s);
    }
  }
  return out;
}

// lex-least move extending an isolated edge into a star whose leaves lie in
// `leaf_part_y ? Y : X`
std::optional<Edge> extend_p2_to_star(const ForbiddenFamily& f, const GameGraph& g,
                                      const Digest& d, bool leaf_part_y) {
  const auto& isos = leaf_part_y ? d.iso_y : d.iso_x;
  if (isos.empty()) return std::nullopt;
  std::optional<Edge> best;
  for (const auto& c : d.comps) {
    if (c.cls != ComponentClass::SingleEdge) continue;
    for (Vertex u : c.vertices) {
      if (g.host().in_part_y(u) == leaf_part_y) continue;  // u becomes the center
      for (Vertex i : isos) consider(best, Edge(u, i));
    }
  }
  if (best && legal_ok(f, g, *best)) return best;
  return std::nullopt;
}

// enlarge the largest star among `stars` (leaves in part P); ties by lex center
std::optional<Edge> enlarge_largest(const ForbiddenFamily& f, const GameGraph& g, const Digest& d,
                                    const std::vector<BigStar>& stars, bool leaf_part_y) {
  const auto& isos = leaf_part_y ? d.iso_y : d.iso_x;
  if (stars.empty() || isos.empty()) return std::nullopt;
  int most = 0;
  for (const auto& s : stars) most = std::max(most, s.leaves);
  std::optional<Edge> best;
  for (const auto& s : stars)
    if (s.leaves == most) consider(best, Edge(s.center, isos.front()));
  if (best && legal_ok(f, g, *best)) return best;
  return std::nullopt;
}

std::optional<Edge> new_isolated_edge(const ForbiddenFamily& f, const GameGraph& g,
                                      const Digest& d) {
  if (d.iso_x.empty() || d.iso_y.empty()) return std::nullopt;
  Edge e(d.iso_x.front(), d.iso_y.front());
  if (legal_ok(f, g, e)) return e;
  return std::nullopt;
}

Edge select_bip_p4_min(const ForbiddenFamily& f, const GameGraph& g, PlayerRole mover,
                       Edge fallback) {
  PlayerRole first = g.edge_count() % 2 == 0 ? mover : other(mover);
  int m = g.host().part_x(), n = g.host().part_y();
  Digest d(g);
  BipStars st = bip_stars(g, d);
  size_t p2_count = 0;
  for (const auto& c : d.comps)
    if (c.cls == ComponentClass::SingleEdge) ++p2_count;

  // 0 = only-X-stars, 1 = only-Y-stars, 2 = isolated-edge matching
  int mode = 2;
  if (first == PlayerRole::Max) {
    if (n % 2 == 0)
      mode = 1;
    else if (m % 2 == 0)
      mode = 0;
  } else if (m % 2 == 1 && n % 2 == 1 && p2_count <= 1) {
    // Min-start, mn odd: adopt the star direction Max committed to with its
    // immediate answer. On that script at most one isolated edge is ever
    // pending; more means the game went through the matching line instead.
    if (!st.x_stars.empty() && st.y_stars.empty()) mode = 0;
    if (!st.y_stars.empty() && st.x_stars.empty()) mode = 1;
  }

  if (mode == 0 || mode == 1) {
    bool leaf_y = mode == 1;
    if (auto e = extend_p2_to_star(f, g, d, leaf_y)) return *e;
    if (auto e = enlarge_largest(f, g, d, leaf_y ? st.y_stars : st.x_stars, leaf_y)) return *e;
    return fallback;
  }

  // Min-start with mn odd counts the isolated edge Max is forced to answer
  // with, which improves the bound by one.
  int target = (n + 1) / 2;
  if (first == PlayerRole::Min && m % 2 == 1 && n % 2 == 1) target += 1;
  if (max_matching(g) < target) {
    if (auto e = new_isolated_edge(f, g, d)) return *e;
  }
  return fallback;
}

Edge select_bip_p4_max(const ForbiddenFamily& f, const GameGraph& g, PlayerRole mover,
                       Edge fallback) {
  PlayerRole first = g.edge_count() % 2 == 0 ? mover : other(mover);
  int m = g.host().part_x(), n = g.host().part_y();
  Digest d(g);
  BipStars st = bip_stars(g, d);
  size_t p2_count = 0;
  for (const auto& c : d.comps)
    if (c.cls == ComponentClass::SingleEdge) ++p2_count;
  bool has_x = !st.x_stars.empty(), has_y = !st.y_stars.empty();
  bool full_types = has_x && has_y;

  // Grow the primary star type. When its leaf part is down to the last
  // isolated vertex and the graph is not yet full, an isolated edge must be
  // on the board before that last leaf is taken: the stranded edge is what
  // forces the opponent to complete a full subgraph.
  auto grow = [&](bool leaf_y) -> std::optional<Edge> {
    const auto& tstars = leaf_y ? st.y_stars : st.x_stars;
    const auto& leaf_isos = leaf_y ? d.iso_y : d.iso_x;
    if (!tstars.empty() && !leaf_isos.empty()) {
      if (leaf_isos.size() >= 2 || full_types || p2_count >= 1)
        return enlarge_largest(f, g, d, tstars, leaf_y);
      if (auto e = new_isolated_edge(f, g, d)) return e;
      return enlarge_largest(f, g, d, tstars, leaf_y);
    }
    if (tstars.empty()) {
      if (auto e = extend_p2_to_star(f, g, d, leaf_y)) return e;
    }
    // leaf part exhausted: push the position toward fullness
    if (auto e = extend_p2_to_star(f, g, d, !leaf_y)) return e;
    if (auto e = enlarge_largest(f, g, d, leaf_y ? st.x_stars : st.y_stars, !leaf_y)) return e;
    if (auto e = new_isolated_edge(f, g, d)) return e;
    return std::nullopt;
  };

  if (first == PlayerRole::Max) {
    if (n % 2 == 0) {
      if (auto e = grow(true)) return *e;
      if (auto e = grow(false)) return *e;
      return fallback;
    }
    if (m % 2 == 0) {
      // force an X-star into existence, never feeding Y-stars
      if (auto e = enlarge_largest(f, g, d, st.x_stars, false)) return *e;
      if (auto e = extend_p2_to_star(f, g, d, false)) return *e;
      if (auto e = new_isolated_edge(f, g, d)) return *e;
      return fallback;
    }
    // mn odd: open with K_2, star the board on move 3, then grow the
    // largest star (Y preferred on ties)
    if (!has_x && !has_y) {
      if (p2_count >= 2) {
        if (auto e = extend_p2_to_star(f, g, d, true)) return *e;
        if (auto e = extend_p2_to_star(f, g, d, false)) return *e;
      }
      if (auto e = new_isolated_edge(f, g, d)) return *e;
      if (auto e = extend_p2_to_star(f, g, d, true)) return *e;
      if (auto e = extend_p2_to_star(f, g, d, false)) return *e;
      return fallback;
    }
    int bx = 0, by = 0;
    for (const auto& s : st.x_stars) bx = std::max(bx, s.leaves);
    for (const auto& s : st.y_stars) by = std::max(by, s.leaves);
    bool primary_y = by >= bx;
    if (auto e = grow(primary_y)) return *e;
    if (auto e = grow(!primary_y)) return *e;
    return fallback;
  }

  // Min-start branches
  if (n <= 2) {
    if (auto e = enlarge_largest(f, g, d, st.x_stars, false)) return *e;
    if (auto e = extend_p2_to_star(f, g, d, false)) return *e;
    if (auto e = new_isolated_edge(f, g, d)) return *e;
    return fallback;
  }
  if (m % 2 == 0 || n % 2 == 0) {
    bool leaf_y = n % 2 == 0;
    if (auto e = grow(leaf_y)) return *e;
    if (auto e = grow(!leaf_y)) return *e;
    return fallback;
  }
  // mn odd: second isolated edge first, then make both star types, then
  // burn Y-isolates
  if (!has_x && !has_y && p2_count <= 1) {
    if (auto e = new_isolated_edge(f, g, d)) return *e;
  }
  if (!has_x) {
    if (auto e = extend_p2_to_star(f, g, d, false)) return *e;
  }
  if (!has_y) {
    if (auto e = extend_p2_to_star(f, g, d, true)) return *e;
  }
  if (auto e = grow(true)) return *e;
  if (auto e = grow(false)) return *e;
  return fallback;
}

// --------------------------------------------------------- C_4 star builder

Edge select_c4_star_max(const ForbiddenFamily& f, const GameGraph& g, LegalMoveCache* cache,
                        Edge fallback) {
  int m = g.host().part_x();
  int n = g.host().part_y();
  int k = std::max(0, static_cast<int>(std::floor(std::sqrt(n / 3.0))) - 1);
  auto is_center = [&](Vertex v) { return (v < k) || (v >= m && v < m + k); };

  // building phase: give degree k to the k lowest-id vertices of each part,
  // claiming fresh non-center leaves in increasing id order
  for (int ci = 0; ci < 2 * k; ++ci) {
    Vertex c = ci < k ? ci : m + (ci - k);
    if (g.degree(c) >= k) continue;
    int lo = c < m ? m : 0;
    int hi = c < m ? m + n : m;
    for (Vertex v = lo; v < hi; ++v) {
      if (g.degree(v) != 0 || is_center(v)) continue;
      Edge e(c, v);
      if (legal_ok(f, g, e)) return e;
    }
  }

  // done building: any legal move, but avoid gluing a designated center to
  // another same-part center's star (keeps every center's neighborhood
  // within its own designated leaves)
  auto keep = [&](Edge e) {
    for (auto [c, w] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
      if (!is_center(c)) continue;
      for (Vertex x : g.neighbors(w))
        if (x != c && is_center(x) && (x < m) == (c < m)) return false;
    }
    return true;
  };
  if (cache) {
    if (auto e = cache->first_legal_if(f, g, keep)) return *e;
    return fallback;
  }
  auto moves = legal_moves(f, g);
  for (Edge e : moves)
    if (keep(e)) return e;
  if (!moves.empty()) return moves.front();
  return fallback;
}

void check_compat(const Policy& p, const ForbiddenFamily& f, const HostGraph& h) {
  auto fail = [&](const std::string& need) {
    throw PolicyHostMismatch("policy " + p.name() + " needs " + need + ", got family " +
                             f.to_string() + " on host " + h.to_string());
  };
  switch (p.kind()) {
    case PolicyKind::OddCycleBalanceMax:
      if (f.kind() != FamilyKind::OddCycles || h.is_bipartite()) fail("odd-cycles on K_n");
      break;
    case PolicyKind::TreeOneComponentMax:
    case PolicyKind::TreeSplitMin:
      if (f.kind() != FamilyKind::AllSpanningTrees || h.is_bipartite()) fail("trees on K_n");
      break;
    case PolicyKind::ClawParityW:
      if (f.kind() != FamilyKind::Star || f.star_leaves() != 3 || h.is_bipartite())
        fail("star:r+1=3 on K_n");
      break;
    case PolicyKind::P4MinKn:
    case PolicyKind::P4MaxKn:
      if (f.kind() != FamilyKind::Path || f.path_len() != 4 || h.is_bipartite())
        fail("path:4 on K_n");
      break;
    case PolicyKind::BipP4Min:
    case PolicyKind::BipP4Max:
      if (f.kind() != FamilyKind::Path || f.path_len() != 4 || !h.is_bipartite())
        fail("path:4 on K_{m,n}");
      break;
    case PolicyKind::C4StarBuilderMax:
      if (f.kind() != FamilyKind::Cycle4 || !h.is_bipartite() || h.part_x() != h.part_y())
        fail("cycle:4 on K_{n,n}");
      break;
    case PolicyKind::RandomLegal:
    case PolicyKind::FirstLegal:
      break;
  }
}

}  // namespace

PolicyChoice select_move(const Policy& p, const ForbiddenFamily& f, const GameGraph& g,
                         PlayerRole mover, LegalMoveCache* cache) {
  check_compat(p, f, g.host());
  if (!is_free(f, g)) throw PositionNotFree("select_move on a non-free position");

  std::optional<Edge> first;
  std::vector<Edge> all;
  if (cache) {
    first = cache->first_legal(f, g);
  } else {
    all = legal_moves(f, g);
    if (!all.empty()) first = all.front();
  }
  if (!first) throw PositionSaturated("select_move on a saturated position");
  Edge fb = *first;

  Edge move = fb;
  Policy next = p;
  switch (p.kind()) {
    case PolicyKind::OddCycleBalanceMax: move = select_odd_balance(f, g, fb); break;
    case PolicyKind::TreeOneComponentMax: move = select_tree_one_max(f, g, fb); break;
    case PolicyKind::TreeSplitMin: move = select_tree_split_min(f, g, fb); break;
    case PolicyKind::ClawParityW: move = select_claw_parity(f, g, mover, fb); break;
    case PolicyKind::P4MinKn: move = select_p4_min_kn(f, g, fb); break;
    case PolicyKind::P4MaxKn: move = select_p4_max_kn(f, g, fb); break;
    case PolicyKind::BipP4Min: move = select_bip_p4_min(f, g, mover, fb); break;
    case PolicyKind::BipP4Max: move = select_bip_p4_max(f, g, mover, fb); break;
    case PolicyKind::C4StarBuilderMax: move = select_c4_star_max(f, g, cache, fb); break;
    case PolicyKind::FirstLegal: move = fb; break;
    case PolicyKind::RandomLegal: {
      if (!p.has_seed()) throw Error("random policy needs a seed (use random:SEED)");
      std::vector<Edge> legal = cache ? cache->legal(f, g) : std::move(all);
      std::uint64_t r = splitmix64(p.seed() ^ splitmix64(p.counter()));
      move = legal[static_cast<size_t>(r % legal.size())];
      next = p.next_draw();
      break;
    }
  }
  if (!legal_ok(f, g, move)) move = fb;
  return {move, next};
}

Edge select_move_edge(const Policy& p, const ForbiddenFamily& f, const GameGraph& g,
                      PlayerRole mover, LegalMoveCache* cache) {
  return select_move(p, f, g, mover, cache).move;
}

}  // namespace satgame
