#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "satgame/errors.hpp"

namespace satgame {

using Vertex = int;

/// Unordered vertex pair in normal form (u < v).
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

  auto operator<=>(const Edge&) const = default;
};

enum class HostKind { Complete, CompleteBipartite };

/// The arena: K_n or K_{m,n}. Vertices are dense ids 0..N-1; bipartite hosts
/// put part X (size m >= n) first, part Y after it.
class HostGraph {
 public:
  static HostGraph complete(int n);
  static HostGraph bipartite(int m, int n);  // swaps so that m >= n
  static HostGraph parse(const std::string& text);  // "K:6" or "B:4,3"

  HostKind kind() const { return kind_; }
  bool is_bipartite() const { return kind_ == HostKind::CompleteBipartite; }
  int order() const { return kind_ == HostKind::Complete ? m_ : m_ + n_; }
  int part_x() const;  // bipartite only
  int part_y() const;  // bipartite only
  bool in_part_y(Vertex v) const;
  int part_of(Vertex v) const { return in_part_y(v) ? 1 : 0; }

  bool allows(Edge e) const;
  long long edge_count() const;
  std::vector<Edge> all_edges() const;  // sorted lexicographically

  std::string to_string() const;
  bool operator==(const HostGraph&) const = default;

 private:
  HostGraph(HostKind k, int m, int n) : kind_(k), m_(m), n_(n) {}
  HostKind kind_;
  int m_;  // complete: order; bipartite: larger part
  int n_;  // bipartite: smaller part
};

/// A game position: simple subgraph of the host. Positions are immutable
/// values; add_edge returns a new position. Adjacency is kept as a bit
/// matrix so structural queries stay cheap on large hosts.
class GameGraph {
 public:
  explicit GameGraph(HostGraph host);

  const HostGraph& host() const { return host_; }
  int order() const { return host_.order(); }
  const std::vector<Edge>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int degree(Vertex v) const { return degree_[static_cast<size_t>(v)]; }
  bool adjacent(Vertex a, Vertex b) const;
  bool has_edge(Edge e) const { return adjacent(e.u, e.v); }
  std::vector<Vertex> neighbors(Vertex v) const;

  int row_words() const { return words_; }
  const std::uint64_t* row(Vertex v) const { return adj_.data() + static_cast<size_t>(v) * words_; }

  friend GameGraph add_edge(GameGraph g, Edge e);
  bool operator==(const GameGraph& o) const { return host_ == o.host_ && edges_ == o.edges_; }

 private:
  void add_in_place(Edge e);

  HostGraph host_;
  std::vector<Edge> edges_;  // sorted
  std::vector<int> degree_;
  std::vector<std::uint64_t> adj_;
  int words_;
};

GameGraph add_edge(GameGraph g, Edge e);

enum class ComponentClass {
  IsolatedVertex,
  SingleEdge,
  Path,
  Star,
  Triangle,
  Cycle,
  Tree,
  Other,
};

std::string to_string(ComponentClass c);

struct ComponentSummary {
  std::vector<Vertex> vertices;  // sorted
  ComponentClass cls = ComponentClass::IsolatedVertex;
  int edge_cnt = 0;
  int path_len = 0;        // Path: number of vertices
  Vertex star_center = -1; // Star
  int star_leaves = 0;     // Star
  int cycle_len = 0;       // Cycle
  int x_count = 0;         // bipartite hosts: vertices in part X
  int y_count = 0;         //                  vertices in part Y

  bool nontrivial() const { return edge_cnt > 0; }
};

std::vector<ComponentSummary> components(const GameGraph& g);

/// Two-coloring report for one nontrivial component. Class sizes are given
/// with a >= b; bipartite == false marks a NotBipartite component.
struct ComponentBalance {
  std::vector<Vertex> vertices;
  bool bipartite = true;
  int a = 0;
  int b = 0;

  bool balanced() const { return bipartite && a == b; }
};

std::vector<ComponentBalance> bipartition_balance(const GameGraph& g);

/// Exact maximum matching size. Bipartite hosts use augmenting paths; on
/// complete hosts a memoized branching search is used (supported up to 64
/// vertices, far beyond any exact-solver host here).
int max_matching(const GameGraph& g);

/// True iff g contains a 3-edge path u-a-b-v on 4 distinct vertices.
bool p4_between(const GameGraph& g, Vertex u, Vertex v);

}  // namespace satgame
