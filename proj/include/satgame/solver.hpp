#pragma once

#include <cstdint>
#include <optional>

#include "satgame/canonical.hpp"
#include "satgame/family.hpp"
#include "satgame/graph.hpp"
#include "satgame/policy.hpp"
#include "satgame/role.hpp"

namespace satgame {

struct SolveConfig {
  ForbiddenFamily family;
  HostGraph host;
  PlayerRole first = PlayerRole::Max;
  std::size_t memo_capacity = std::size_t{1} << 24;
  std::optional<std::uint64_t> node_budget;
  bool orbit_reduction = true;
  /// Debug: permute the legal-move enumeration order; the value must not move.
  std::optional<std::uint64_t> shuffle_seed;
  /// Debug: re-derive legal_moves extensionally at every expanded node.
  bool paranoid_legal_check = false;
};

struct SolveResult {
  int value = 0;
  std::optional<Edge> optimal_move;  // absent at terminal positions
  std::uint64_t nodes = 0;
  std::size_t memo_entries = 0;
  double seconds = 0.0;
  bool exact = true;
};

/// Exact game length under optimal play from the empty position, by memoized
/// minimax over certificate-keyed positions with orbit-reduced branching.
/// Throws NodeBudgetExceeded when the node budget or memo capacity runs out.
SolveResult game_value(const SolveConfig& cfg);

/// Optimal continuation from an arbitrary position; ties broken by the
/// lexicographically least edge among optimal orbit representatives.
Edge best_move(const ForbiddenFamily& f, const GameGraph& g, PlayerRole mover, PlayerRole first);

/// Game length when fixed_role always plays `policy` and the opponent
/// searches exhaustively for its own objective: the guarantee the policy
/// certifies. Rejects randomized policies.
int best_response(const Policy& policy, PlayerRole fixed_role, const SolveConfig& cfg);

}  // namespace satgame
