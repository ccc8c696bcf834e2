#pragma once

#include <optional>
#include <vector>

#include "satgame/family.hpp"
#include "satgame/graph.hpp"

namespace satgame {

/// Candidate tracker for one line of play. Legality is monotone: once a move
/// would complete a forbidden subgraph it stays illegal for the rest of the
/// game, so candidates are discarded permanently as they are found illegal.
/// Keeps large-host games (K_{n,n} with n in the hundreds) near-linear in the
/// number of host edges overall.
class LegalMoveCache {
 public:
  explicit LegalMoveCache(const HostGraph& host) : open_(host.all_edges()) {}

  /// Call after an edge has been played on the tracked line.
  void on_move(Edge e) {
    auto it = std::lower_bound(open_.begin(), open_.end(), e);
    if (it != open_.end() && *it == e) open_.erase(it);
  }

  /// All currently legal moves, lex order. Prunes discovered-illegal
  /// candidates as a side effect. Pre: is_free(f, g).
  std::vector<Edge> legal(const ForbiddenFamily& f, const GameGraph& g) {
    std::vector<Edge> out;
    size_t w = 0;
    for (size_t r = 0; r < open_.size(); ++r) {
      if (move_creates(f, g, open_[r])) continue;  // illegal forever: drop
      out.push_back(open_[r]);
      open_[w++] = open_[r];
    }
    open_.resize(w);
    return out;
  }

  /// Lex-least legal move accepted by `keep`, or the overall lex-least legal
  /// move when no acceptable one exists. Scans stop classifying once a kept
  /// move is found; everything already proven illegal is dropped.
  template <class Pred>
  std::optional<Edge> first_legal_if(const ForbiddenFamily& f, const GameGraph& g, Pred&& keep) {
    std::optional<Edge> any;
    std::optional<Edge> found;
    size_t w = 0;
    for (size_t r = 0; r < open_.size(); ++r) {
      Edge e = open_[r];
      if (!found) {
        if (move_creates(f, g, e)) continue;
        open_[w++] = e;
        if (!any) any = e;
        if (keep(e)) found = e;
      } else {
        open_[w++] = e;
      }
    }
    open_.resize(w);
    return found ? found : any;
  }

  std::optional<Edge> first_legal(const ForbiddenFamily& f, const GameGraph& g) {
    return first_legal_if(f, g, [](Edge) { return true; });
  }

  bool has_legal(const ForbiddenFamily& f, const GameGraph& g) {
    return first_legal(f, g).has_value();
  }

  const std::vector<Edge>& open() const { return open_; }

 private:
  std::vector<Edge> open_;
};

}  // namespace satgame
