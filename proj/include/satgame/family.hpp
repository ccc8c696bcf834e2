#pragma once

#include <string>
#include <vector>

#include "satgame/graph.hpp"

namespace satgame {

enum class FamilyKind { OddCycles, AllSpanningTrees, Star, Path, Cycle4 };

/// Descriptor of the forbidden family F. Each variant carries a structural
/// free-check equivalent to "contains no member of F":
///   OddCycles         <=> position is bipartite
///   AllSpanningTrees  <=> position is disconnected (order bound to the host)
///   Star(s) = K_{1,s} <=> max degree <= s-1
///   Path(k)           <=> no k-vertex path
///   Cycle4            <=> no vertex pair with two common neighbors
class ForbiddenFamily {
 public:
  static ForbiddenFamily odd_cycles();
  static ForbiddenFamily spanning_trees(int order);
  static ForbiddenFamily star(int leaves);  // K_{1,leaves}, leaves >= 2
  static ForbiddenFamily path(int k);       // k >= 3
  static ForbiddenFamily cycle4();

  /// "odd-cycles" | "trees" | "star:r+1=S" | "path:K" | "cycle:4".
  /// "trees" binds its order to the given host.
  static ForbiddenFamily parse(const std::string& text, const HostGraph& host);

  FamilyKind kind() const { return kind_; }
  int tree_order() const { return param_; }
  int star_leaves() const { return param_; }
  int degree_cap() const { return param_ - 1; }  // Star: r
  int path_len() const { return param_; }
  std::string to_string() const;
  bool operator==(const ForbiddenFamily&) const = default;

 private:
  ForbiddenFamily(FamilyKind k, int p) : kind_(k), param_(p) {}
  FamilyKind kind_;
  int param_;
};

/// From-scratch structural free-check.
bool is_free(const ForbiddenFamily& f, const GameGraph& g);

/// Incremental creation check: given a free position, does adding e complete
/// a member of f?  Pre: is_free(f, g), e addable.
bool move_creates(const ForbiddenFamily& f, const GameGraph& g, Edge e);

/// All host edges e not in g with g+e still free, in edge normal form.
/// Throws PositionNotFree when g itself is not free.
std::vector<Edge> legal_moves(const ForbiddenFamily& f, const GameGraph& g);

/// Same contract, computed by re-running the from-scratch free-check on every
/// candidate child. Cross-check path for tests and the solver's debug mode.
std::vector<Edge> legal_moves_slow(const ForbiddenFamily& f, const GameGraph& g);

bool is_saturated(const ForbiddenFamily& f, const GameGraph& g);

}  // namespace satgame
