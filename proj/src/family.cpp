#include "satgame/family.hpp"

#include <bit>
#include <cstdio>
#include <functional>

namespace satgame {

ForbiddenFamily ForbiddenFamily::odd_cycles() { return {FamilyKind::OddCycles, 0}; }

ForbiddenFamily ForbiddenFamily::spanning_trees(int order) {
  if (order < 1) throw ParseError("spanning_trees: order >= 1 required");
  return {FamilyKind::AllSpanningTrees, order};
}

ForbiddenFamily ForbiddenFamily::star(int leaves) {
  if (leaves < 2) throw ParseError("star family needs r+1 >= 2");
  return {FamilyKind::Star, leaves};
}

ForbiddenFamily ForbiddenFamily::path(int k) {
  if (k < 3) throw ParseError("path family needs k >= 3");
  return {FamilyKind::Path, k};
}

ForbiddenFamily ForbiddenFamily::cycle4() { return {FamilyKind::Cycle4, 4}; }

ForbiddenFamily ForbiddenFamily::parse(const std::string& text, const HostGraph& host) {
  if (text == "odd-cycles") return odd_cycles();
  if (text == "trees") return spanning_trees(host.order());
  int p = 0;
  if (std::sscanf(text.c_str(), "star:r+1=%d", &p) == 1) return star(p);
  if (std::sscanf(text.c_str(), "path:%d", &p) == 1) return path(p);
  if (text == "cycle:4") return cycle4();
  throw ParseError("bad family spec: " + text);
}

std::string ForbiddenFamily::to_string() const {
  switch (kind_) {
    case FamilyKind::OddCycles: return "odd-cycles";
    case FamilyKind::AllSpanningTrees: return "trees";
    case FamilyKind::Star: return "star:r+1=" + std::to_string(param_);
    case FamilyKind::Path: return "path:" + std::to_string(param_);
    case FamilyKind::Cycle4: return "cycle:4";
  }
  return "?";
}

namespace {

// component labels + count; colors give a 2-coloring attempt per component
struct Coloring {
  std::vector<int> comp;
  std::vector<int> color;
  int count = 0;
  bool bipartite = true;
};

Coloring color_components(const GameGraph& g) {
  int n = g.order();
  Coloring c;
  c.comp.assign(static_cast<size_t>(n), -1);
  c.color.assign(static_cast<size_t>(n), 0);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
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
        } else if (c.color[static_cast<size_t>(w)] == c.color[static_cast<size_t>(v)]) {
          c.bipartite = false;
        }
      }
    }
  }
  return c;
}

bool has_pair_with_two_common(const GameGraph& g) {
  int n = g.order();
  int words = g.row_words();
  for (Vertex u = 0; u < n; ++u) {
    if (g.degree(u) < 1) continue;
    for (Vertex v = u + 1; v < n; ++v) {
      if (g.degree(v) < 1) continue;
      int common = 0;
      const std::uint64_t* ru = g.row(u);
      const std::uint64_t* rv = g.row(v);
      for (int w = 0; w < words && common < 2; ++w)
        common += std::popcount(ru[w] & rv[w]);
      if (common >= 2) return true;
    }
  }
  return false;
}

// Longest simple path, counted in vertices, within the component containing
// `start` of g plus an optional extra edge. Early exit once k is reached.
struct LocalPathSearch {
  const GameGraph& g;
  Edge extra;
  bool use_extra;
  int k;
  std::vector<char> on_path;

  LocalPathSearch(const GameGraph& gg, int kk) : g(gg), extra(), use_extra(false), k(kk) {
    on_path.assign(static_cast<size_t>(g.order()), 0);
  }

  bool dfs(Vertex v, int depth) {
    if (depth >= k) return true;
    on_path[static_cast<size_t>(v)] = 1;
    for (Vertex w : g.neighbors(v)) {
      if (!on_path[static_cast<size_t>(w)] && dfs(w, depth + 1)) {
        on_path[static_cast<size_t>(v)] = 0;
        return true;
      }
    }
    if (use_extra) {
      Vertex w = -1;
      if (v == extra.u) w = extra.v;
      if (v == extra.v) w = extra.u;
      if (w >= 0 && !on_path[static_cast<size_t>(w)] && dfs(w, depth + 1)) {
        on_path[static_cast<size_t>(v)] = 0;
        return true;
      }
    }
    on_path[static_cast<size_t>(v)] = 0;
    return false;
  }
};

bool component_has_path_k(const GameGraph& g, const std::vector<Vertex>& verts, int k,
                          const Edge* extra) {
  if (static_cast<int>(verts.size()) < k) return false;
  LocalPathSearch search(g, k);
  if (extra) {
    search.extra = *extra;
    search.use_extra = true;
  }
  for (Vertex v : verts) {
    if (search.dfs(v, 1)) return true;
  }
  return false;
}

std::vector<Vertex> merged_component(const GameGraph& g, const std::vector<int>& comp,
                                     const std::vector<std::vector<Vertex>>& comp_verts, Edge e) {
  int cu = comp[static_cast<size_t>(e.u)];
  int cv = comp[static_cast<size_t>(e.v)];
  std::vector<Vertex> verts = comp_verts[static_cast<size_t>(cu)];
  if (cv != cu) {
    verts.insert(verts.end(), comp_verts[static_cast<size_t>(cv)].begin(),
                 comp_verts[static_cast<size_t>(cv)].end());
  }
  return verts;
}

std::vector<std::vector<Vertex>> group_by_component(const std::vector<int>& comp, int count) {
  std::vector<std::vector<Vertex>> out(static_cast<size_t>(count));
  for (size_t v = 0; v < comp.size(); ++v)
    out[static_cast<size_t>(comp[v])].push_back(static_cast<Vertex>(v));
  return out;
}

void check_tree_order(const ForbiddenFamily& f, const GameGraph& g) {
  if (f.kind() == FamilyKind::AllSpanningTrees && f.tree_order() != g.order())
    throw HostOrderMismatch("trees family bound to order " + std::to_string(f.tree_order()) +
                            " used on host of order " + std::to_string(g.order()));
}

}  // namespace

bool is_free(const ForbiddenFamily& f, const GameGraph& g) {
  check_tree_order(f, g);
  switch (f.kind()) {
    case FamilyKind::OddCycles:
      return color_components(g).bipartite;
    case FamilyKind::AllSpanningTrees:
      return color_components(g).count > 1;
    case FamilyKind::Star: {
      int r = f.degree_cap();
      for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) > r) return false;
      return true;
    }
    case FamilyKind::Path: {
      auto coloring = color_components(g);
      auto verts = group_by_component(coloring.comp, coloring.count);
      for (const auto& c : verts)
        if (component_has_path_k(g, c, f.path_len(), nullptr)) return false;
      return true;
    }
    case FamilyKind::Cycle4:
      return !has_pair_with_two_common(g);
  }
  return false;
}

bool move_creates(const ForbiddenFamily& f, const GameGraph& g, Edge e) {
  check_tree_order(f, g);
  switch (f.kind()) {
    case FamilyKind::OddCycles: {
      auto c = color_components(g);
      return c.comp[static_cast<size_t>(e.u)] == c.comp[static_cast<size_t>(e.v)] &&
             c.color[static_cast<size_t>(e.u)] == c.color[static_cast<size_t>(e.v)];
    }
    case FamilyKind::AllSpanningTrees: {
      auto c = color_components(g);
      return c.count == 2 && c.comp[static_cast<size_t>(e.u)] != c.comp[static_cast<size_t>(e.v)];
    }
    case FamilyKind::Star:
      return g.degree(e.u) == f.degree_cap() || g.degree(e.v) == f.degree_cap();
    case FamilyKind::Path: {
      auto c = color_components(g);
      auto verts = group_by_component(c.comp, c.count);
      auto merged = merged_component(g, c.comp, verts, e);
      return component_has_path_k(g, merged, f.path_len(), &e);
    }
    case FamilyKind::Cycle4:
      return p4_between(g, e.u, e.v);
  }
  return false;
}

std::vector<Edge> legal_moves(const ForbiddenFamily& f, const GameGraph& g) {
  if (!is_free(f, g)) throw PositionNotFree("legal_moves on non-free position");
  std::vector<Edge> out;
  switch (f.kind()) {
    case FamilyKind::OddCycles: {
      auto c = color_components(g);
      for (Edge e : g.host().all_edges()) {
        if (g.has_edge(e)) continue;
        bool creates = c.comp[static_cast<size_t>(e.u)] == c.comp[static_cast<size_t>(e.v)] &&
                       c.color[static_cast<size_t>(e.u)] == c.color[static_cast<size_t>(e.v)];
        if (!creates) out.push_back(e);
      }
      return out;
    }
    case FamilyKind::AllSpanningTrees: {
      auto c = color_components(g);
      for (Edge e : g.host().all_edges()) {
        if (g.has_edge(e)) continue;
        bool creates =
            c.count == 2 && c.comp[static_cast<size_t>(e.u)] != c.comp[static_cast<size_t>(e.v)];
        if (!creates) out.push_back(e);
      }
      return out;
    }
    case FamilyKind::Star: {
      int r = f.degree_cap();
      for (Edge e : g.host().all_edges()) {
        if (g.has_edge(e)) continue;
        if (g.degree(e.u) < r && g.degree(e.v) < r) out.push_back(e);
      }
      return out;
    }
    case FamilyKind::Path: {
      auto c = color_components(g);
      auto verts = group_by_component(c.comp, c.count);
      for (Edge e : g.host().all_edges()) {
        if (g.has_edge(e)) continue;
        auto merged = merged_component(g, c.comp, verts, e);
        if (!component_has_path_k(g, merged, f.path_len(), &e)) out.push_back(e);
      }
      return out;
    }
    case FamilyKind::Cycle4: {
      for (Edge e : g.host().all_edges()) {
        if (g.has_edge(e)) continue;
        if (!p4_between(g, e.u, e.v)) out.push_back(e);
      }
      return out;
    }
  }
  return out;
}

std::vector<Edge> legal_moves_slow(const ForbiddenFamily& f, const GameGraph& g) {
  if (!is_free(f, g)) throw PositionNotFree("legal_moves_slow on non-free position");
  std::vector<Edge> out;
  for (Edge e : g.host().all_edges()) {
    if (g.has_edge(e)) continue;
    if (is_free(f, add_edge(g, e))) out.push_back(e);
  }
  return out;
}

bool is_saturated(const ForbiddenFamily& f, const GameGraph& g) {
  if (!is_free(f, g)) return false;
  return legal_moves(f, g).empty();
}

}  // namespace satgame
