#include "satgame/graph.hpp"

#include <bit>
#include <cstdio>
#include <functional>
#include <numeric>
#include <unordered_map>

namespace satgame {

HostGraph HostGraph::complete(int n) {
  if (n < 1) throw ParseError("complete host needs n >= 1");
  return HostGraph(HostKind::Complete, n, 0);
}

HostGraph HostGraph::bipartite(int m, int n) {
  if (m < 1 || n < 1) throw ParseError("bipartite host needs m, n >= 1");
  if (m < n) std::swap(m, n);
  return HostGraph(HostKind::CompleteBipartite, m, n);
}

HostGraph HostGraph::parse(const std::string& text) {
  if (text.size() > 2 && (text[0] == 'K' || text[0] == 'k') && text[1] == ':') {
    int n = 0;
    if (std::sscanf(text.c_str() + 2, "%d", &n) != 1)
      throw ParseError("bad host spec: " + text);
    return complete(n);
  }
  if (text.size() > 2 && (text[0] == 'B' || text[0] == 'b') && text[1] == ':') {
    int m = 0, n = 0;
    if (std::sscanf(text.c_str() + 2, "%d,%d", &m, &n) != 2)
      throw ParseError("bad host spec: " + text);
    return bipartite(m, n);
  }
  throw ParseError("bad host spec (expected K:n or B:m,n): " + text);
}

int HostGraph::part_x() const {
  if (!is_bipartite()) throw HostNotBipartite("part_x on complete host");
  return m_;
}

int HostGraph::part_y() const {
  if (!is_bipartite()) throw HostNotBipartite("part_y on complete host");
  return n_;
}

bool HostGraph::in_part_y(Vertex v) const {
  return is_bipartite() && v >= m_;
}

bool HostGraph::allows(Edge e) const {
  if (e.u < 0 || e.v >= order() || e.u == e.v) return false;
  if (kind_ == HostKind::Complete) return true;
  return in_part_y(e.u) != in_part_y(e.v);
}

long long HostGraph::edge_count() const {
  if (kind_ == HostKind::Complete) return static_cast<long long>(m_) * (m_ - 1) / 2;
  return static_cast<long long>(m_) * n_;
}

std::vector<Edge> HostGraph::all_edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<size_t>(edge_count()));
  if (kind_ == HostKind::Complete) {
    for (Vertex u = 0; u < m_; ++u)
      for (Vertex v = u + 1; v < m_; ++v) out.emplace_back(u, v);
  } else {
    for (Vertex x = 0; x < m_; ++x)
      for (Vertex y = m_; y < m_ + n_; ++y) out.emplace_back(x, y);
  }
  return out;
}

std::string HostGraph::to_string() const {
  if (kind_ == HostKind::Complete) return "K:" + std::to_string(m_);
  return "B:" + std::to_string(m_) + "," + std::to_string(n_);
}

GameGraph::GameGraph(HostGraph host)
    : host_(host),
      degree_(static_cast<size_t>(host.order()), 0),
      words_((host.order() + 63) / 64) {
  adj_.assign(static_cast<size_t>(host_.order()) * words_, 0);
}

bool GameGraph::adjacent(Vertex a, Vertex b) const {
  return (row(a)[b >> 6] >> (b & 63)) & 1u;
}

std::vector<Vertex> GameGraph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  out.reserve(static_cast<size_t>(degree(v)));
  const std::uint64_t* r = row(v);
  for (int w = 0; w < words_; ++w) {
    std::uint64_t bits = r[w];
    while (bits) {
      int b = std::countr_zero(bits);
      out.push_back(w * 64 + b);
      bits &= bits - 1;
    }
  }
  return out;
}

void GameGraph::add_in_place(Edge e) {
  if (!host_.allows(e)) throw EdgeNotInHost("edge not allowed by host " + host_.to_string());
  if (adjacent(e.u, e.v)) throw EdgeAlreadyPresent("edge already present");
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  edges_.insert(it, e);
  ++degree_[static_cast<size_t>(e.u)];
  ++degree_[static_cast<size_t>(e.v)];
  adj_[static_cast<size_t>(e.u) * words_ + (e.v >> 6)] |= std::uint64_t{1} << (e.v & 63);
  adj_[static_cast<size_t>(e.v) * words_ + (e.u >> 6)] |= std::uint64_t{1} << (e.u & 63);
}

GameGraph add_edge(GameGraph g, Edge e) {
  g.add_in_place(e);
  return g;
}

std::string to_string(ComponentClass c) {
  switch (c) {
    case ComponentClass::IsolatedVertex: return "isolated-vertex";
    case ComponentClass::SingleEdge: return "single-edge";
    case ComponentClass::Path: return "path";
    case ComponentClass::Star: return "star";
    case ComponentClass::Triangle: return "triangle";
    case ComponentClass::Cycle: return "cycle";
    case ComponentClass::Tree: return "tree";
    case ComponentClass::Other: return "other";
  }
  return "?";
}

namespace {

ComponentSummary classify(const GameGraph& g, std::vector<Vertex> verts) {
  ComponentSummary cs;
  cs.vertices = std::move(verts);
  int s = static_cast<int>(cs.vertices.size());
  int deg_sum = 0;
  int max_deg = 0;
  Vertex max_v = cs.vertices.front();
  int deg1 = 0;
  bool all_le2 = true;
  for (Vertex v : cs.vertices) {
    int d = g.degree(v);
    deg_sum += d;
    if (d == 1) ++deg1;
    if (d > 2) all_le2 = false;
    if (d > max_deg) {
      max_deg = d;
      max_v = v;
    }
    if (g.host().is_bipartite() && g.host().in_part_y(v))
      ++cs.y_count;
    else if (g.host().is_bipartite())
      ++cs.x_count;
  }
  cs.edge_cnt = deg_sum / 2;

  if (s == 1) {
    cs.cls = ComponentClass::IsolatedVertex;
  } else if (s == 2) {
    cs.cls = ComponentClass::SingleEdge;
  } else if (cs.edge_cnt == s - 1) {
    if (all_le2 && deg1 == 2) {
      cs.cls = ComponentClass::Path;
      cs.path_len = s;
    } else if (max_deg == s - 1 && deg1 == s - 1) {
      cs.cls = ComponentClass::Star;
      cs.star_center = max_v;
      cs.star_leaves = s - 1;
    } else {
      cs.cls = ComponentClass::Tree;
    }
  } else if (cs.edge_cnt == s && all_le2) {
    if (s == 3) {
      cs.cls = ComponentClass::Triangle;
    } else {
      cs.cls = ComponentClass::Cycle;
      cs.cycle_len = s;
    }
  } else {
    cs.cls = ComponentClass::Other;
  }
  return cs;
}

}  // namespace

std::vector<ComponentSummary> components(const GameGraph& g) {
  int n = g.order();
  std::vector<int> comp(static_cast<size_t>(n), -1);
  std::vector<ComponentSummary> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[static_cast<size_t>(s)] >= 0) continue;
    int id = static_cast<int>(out.size());
    std::vector<Vertex> verts;
    comp[static_cast<size_t>(s)] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      verts.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (comp[static_cast<size_t>(w)] < 0) {
          comp[static_cast<size_t>(w)] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(verts.begin(), verts.end());
    out.push_back(classify(g, std::move(verts)));
  }
  return out;
}

std::vector<ComponentBalance> bipartition_balance(const GameGraph& g) {
  int n = g.order();
  std::vector<int> color(static_cast<size_t>(n), -1);
  std::vector<ComponentBalance> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (color[static_cast<size_t>(s)] >= 0 || g.degree(s) == 0) continue;
    ComponentBalance cb;
    color[static_cast<size_t>(s)] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      cb.vertices.push_back(v);
      if (color[static_cast<size_t>(v)] == 0)
        ++cb.a;
      else
        ++cb.b;
      for (Vertex w : g.neighbors(v)) {
        if (color[static_cast<size_t>(w)] < 0) {
          color[static_cast<size_t>(w)] = 1 - color[static_cast<size_t>(v)];
          stack.push_back(w);
        } else if (color[static_cast<size_t>(w)] == color[static_cast<size_t>(v)]) {
          cb.bipartite = false;
        }
      }
    }
    std::sort(cb.vertices.begin(), cb.vertices.end());
    if (cb.a < cb.b) std::swap(cb.a, cb.b);
    out.push_back(std::move(cb));
  }
  return out;
}

namespace {

// Kuhn's augmenting-path matching for bipartite-host positions.
int bipartite_matching(const GameGraph& g) {
  int m = g.host().part_x();
  int n = g.host().part_y();
  std::vector<int> match_y(static_cast<size_t>(n), -1);
  std::vector<char> used;
  std::function<bool(Vertex)> try_kuhn = [&](Vertex x) {
    for (Vertex w : g.neighbors(x)) {
      int yi = w - m;
      if (used[static_cast<size_t>(yi)]) continue;
      used[static_cast<size_t>(yi)] = 1;
      if (match_y[static_cast<size_t>(yi)] < 0 || try_kuhn(match_y[static_cast<size_t>(yi)])) {
        match_y[static_cast<size_t>(yi)] = x;
        return true;
      }
    }
    return false;
  };
  int result = 0;
  for (Vertex x = 0; x < m; ++x) {
    if (g.degree(x) == 0) continue;
    used.assign(static_cast<size_t>(n), 0);
    if (try_kuhn(x)) ++result;
  }
  return result;
}

// Exact matching on general graphs by branching on the lowest live vertex,
// memoized on the live-vertex mask.
int general_matching(const GameGraph& g) {
  int n = g.order();
  if (n > 64) throw Error("max_matching: complete hosts supported up to 64 vertices");
  std::unordered_map<std::uint64_t, int> memo;
  std::function<int(std::uint64_t)> rec = [&](std::uint64_t live) -> int {
    if (!live) return 0;
    auto it = memo.find(live);
    if (it != memo.end()) return it->second;
    int v = std::countr_zero(live);
    std::uint64_t without_v = live & ~(std::uint64_t{1} << v);
    int best = rec(without_v);
    for (Vertex w : g.neighbors(v)) {
      if (!(without_v >> w & 1)) continue;
      best = std::max(best, 1 + rec(without_v & ~(std::uint64_t{1} << w)));
    }
    memo.emplace(live, best);
    return best;
  };
  std::uint64_t live = 0;
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) > 0) live |= std::uint64_t{1} << v;
  return rec(live);
}

}  // namespace

int max_matching(const GameGraph& g) {
  if (g.edge_count() == 0) return 0;
  if (g.host().is_bipartite()) return bipartite_matching(g);
  return general_matching(g);
}

bool p4_between(const GameGraph& g, Vertex u, Vertex v) {
  if (u == v) throw Error("p4_between: u == v");
  // path u - a - b - v with all four vertices distinct
  const std::uint64_t* ru = g.row(u);
  int words = g.row_words();
  for (Vertex b : g.neighbors(v)) {
    if (b == u) continue;
    const std::uint64_t* rb = g.row(b);
    for (int w = 0; w < words; ++w) {
      std::uint64_t common = ru[w] & rb[w];
      if (!common) continue;
      // a must avoid v and b (a != u holds since a is a neighbor of u)
      if ((v >> 6) == w) common &= ~(std::uint64_t{1} << (v & 63));
      if ((b >> 6) == w) common &= ~(std::uint64_t{1} << (b & 63));
      if (common) return true;
    }
  }
  return false;
}

}  // namespace satgame
