#pragma once

#include <cstdint>
#include <string>

#include "satgame/family.hpp"
#include "satgame/graph.hpp"
#include "satgame/legal_cache.hpp"
#include "satgame/role.hpp"

namespace satgame {

enum class PolicyKind {
  OddCycleBalanceMax,
  TreeOneComponentMax,
  TreeSplitMin,
  ClawParityW,
  P4MinKn,
  P4MaxKn,
  BipP4Min,
  BipP4Max,
  C4StarBuilderMax,
  RandomLegal,
  FirstLegal,
};

/// Deterministic move-selection policies implementing the strategies from the
/// theorem proofs, plus the RandomLegal / FirstLegal baselines. Policies are
/// immutable; RandomLegal carries its generator state (seed, draw counter)
/// explicitly and returns the advanced state in the PolicyChoice continuation.
class Policy {
 public:
  static Policy odd_balance_max() { return Policy(PolicyKind::OddCycleBalanceMax); }
  static Policy tree_one_max() { return Policy(PolicyKind::TreeOneComponentMax); }
  static Policy tree_split_min() { return Policy(PolicyKind::TreeSplitMin); }
  static Policy claw_parity() { return Policy(PolicyKind::ClawParityW); }
  static Policy p4_min() { return Policy(PolicyKind::P4MinKn); }
  static Policy p4_max() { return Policy(PolicyKind::P4MaxKn); }
  static Policy bip_p4_min() { return Policy(PolicyKind::BipP4Min); }
  static Policy bip_p4_max() { return Policy(PolicyKind::BipP4Max); }
  static Policy c4_star_max() { return Policy(PolicyKind::C4StarBuilderMax); }
  static Policy first_legal() { return Policy(PolicyKind::FirstLegal); }
  static Policy random_legal(std::uint64_t seed) {
    Policy p(PolicyKind::RandomLegal);
    p.seed_ = seed;
    p.has_seed_ = true;
    return p;
  }
  /// Unseeded random policy; the simulator injects a seed derived from the
  /// game seed before the first move.
  static Policy random_unseeded() { return Policy(PolicyKind::RandomLegal); }

  /// "odd-balance-max" | "tree-one-max" | "tree-split-min" | "claw-parity" |
  /// "p4-min" | "p4-max" | "bip-p4-min" | "bip-p4-max" | "c4-star-max" |
  /// "random:SEED" | "random" | "first"
  static Policy parse(const std::string& text);

  PolicyKind kind() const { return kind_; }
  bool deterministic() const { return kind_ != PolicyKind::RandomLegal; }
  bool has_seed() const { return has_seed_; }
  std::uint64_t seed() const { return seed_; }
  std::uint64_t counter() const { return counter_; }
  Policy with_seed(std::uint64_t s) const;
  /// Same policy with the draw counter advanced by one (RandomLegal
  /// continuations).
  Policy next_draw() const;
  std::string name() const;

 private:
  explicit Policy(PolicyKind k) : kind_(k) {}
  PolicyKind kind_;
  std::uint64_t seed_ = 0;
  std::uint64_t counter_ = 0;
  bool has_seed_ = false;
};

struct PolicyChoice {
  Edge move;
  Policy next;
};

/// Selects the policy's move at a free, non-saturated position. Pure given
/// (policy, position, mover); the optional cache only memoizes legality along
/// a single line of play. The named strategies fall back to the lex-least legal
/// move where their strategy leaves the choice free or its stated condition
/// cannot be maintained.
PolicyChoice select_move(const Policy& p, const ForbiddenFamily& f, const GameGraph& g,
                         PlayerRole mover, LegalMoveCache* cache = nullptr);

Edge select_move_edge(const Policy& p, const ForbiddenFamily& f, const GameGraph& g,
                      PlayerRole mover, LegalMoveCache* cache = nullptr);

/// Exact value of the claw game's path/cycle abstraction: state = (isolated
/// vertices, single-edge paths, longer paths); cycles are dead. Doubles as an
/// independent oracle for K_{1,3} game values.
int claw_abstract_value(int isolates, int paths2, int paths3, PlayerRole mover);

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace satgame
