#include "satgame/solver.hpp"

#include <algorithm>
#include <chrono>
#include <unordered_map>

namespace satgame {

namespace {

struct Searcher {
  const ForbiddenFamily& family;
  PlayerRole first;
  const SolveConfig& cfg;
  std::unordered_map<std::string, int> memo;
  std::uint64_t nodes = 0;

  explicit Searcher(const SolveConfig& c) : family(c.family), first(c.first), cfg(c) {}

  std::vector<Edge> moves_of(const GameGraph& g) {
    auto moves = legal_moves(family, g);
    if (cfg.paranoid_legal_check && moves != legal_moves_slow(family, g))
      throw Error("legal_moves disagrees with extensional recomputation");
    if (cfg.shuffle_seed) {
      std::uint64_t s = *cfg.shuffle_seed ^ splitmix64(static_cast<std::uint64_t>(g.edge_count()));
      for (size_t i = moves.size(); i > 1; --i) {
        s = splitmix64(s);
        std::swap(moves[i - 1], moves[static_cast<size_t>(s % i)]);
      }
    }
    return moves;
  }

  int value_of(const GameGraph& g, const std::string& key) {
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    if (++nodes, cfg.node_budget && nodes > *cfg.node_budget)
      throw NodeBudgetExceeded("node budget exhausted after " + std::to_string(nodes - 1) +
                               " nodes");
    auto moves = moves_of(g);
    int result = 0;
    if (!moves.empty()) {
      PlayerRole mover = mover_at(first, g.edge_count());
      bool maximize = mover == PlayerRole::Max;
      int best = 0;
      bool have = false;
      std::vector<std::string> seen;
      for (Edge e : moves) {
        GameGraph child = add_edge(g, e);
        std::string ck = certificate(child).bytes;
        if (cfg.orbit_reduction) {
          if (std::find(seen.begin(), seen.end(), ck) != seen.end()) continue;
          seen.push_back(ck);
        }
        int v = value_of(child, ck);
        if (!have || (maximize ? v > best : v < best)) {
          best = v;
          have = true;
        }
      }
      result = 1 + best;
    }
    if (memo.size() >= cfg.memo_capacity)
      throw NodeBudgetExceeded("memo capacity " + std::to_string(cfg.memo_capacity) + " reached");
    memo.emplace(key, result);
    return result;
  }

  // Value plus the optimal move at g, tie-broken by the lex-least edge among
  // optimal orbit representatives.
  std::pair<int, std::optional<Edge>> solve_root(const GameGraph& g) {
    std::string key = certificate(g).bytes;
    int value = value_of(g, key);
    if (value == 0) return {0, std::nullopt};
    PlayerRole mover = mover_at(first, g.edge_count());
    bool maximize = mover == PlayerRole::Max;
    std::optional<Edge> best_edge;
    int best = 0;
    bool have = false;
    for (const auto& orbit : legal_move_orbit_groups(family, g)) {
      int v = value_of(add_edge(g, orbit.representative), orbit.child.bytes);
      if (!have || (maximize ? v > best : v < best)) {
        best = v;
        have = true;
        best_edge = orbit.representative;
      } else if (v == best && orbit.representative < *best_edge) {
        best_edge = orbit.representative;
      }
    }
    return {1 + best, best_edge};
  }
};

}  // namespace

SolveResult game_value(const SolveConfig& cfg) {
  if (cfg.memo_capacity == 0 || (cfg.node_budget && *cfg.node_budget == 0))
    throw Error("budgets must be positive");
  GameGraph empty(cfg.host);
  if (!is_free(cfg.family, empty))
    throw PositionNotFree("empty position is not free for " + cfg.family.to_string());
  auto t0 = std::chrono::steady_clock::now();
  Searcher s(cfg);
  auto [value, move] = s.solve_root(empty);
  auto t1 = std::chrono::steady_clock::now();
  SolveResult r;
  r.value = value;
  r.optimal_move = move;
  r.nodes = s.nodes;
  r.memo_entries = s.memo.size();
  r.seconds = std::chrono::duration<double>(t1 - t0).count();
  r.exact = true;
  return r;
}

Edge best_move(const ForbiddenFamily& f, const GameGraph& g, PlayerRole mover, PlayerRole first) {
  if (mover_at(first, g.edge_count()) != mover)
    throw Error("mover inconsistent with first player and edge parity");
  if (!is_free(f, g)) throw PositionNotFree("best_move on a non-free position");
  SolveConfig cfg{f, g.host(), first};
  Searcher s(cfg);
  auto [value, move] = s.solve_root(g);
  (void)value;
  if (!move) throw PositionSaturated("best_move on a saturated position");
  return *move;
}

namespace {

// best_response memoizes on the concrete edge set, not the certificate:
// policies tie-break lexicographically, so their moves need not commute with
// host automorphisms.
struct ResponseSearcher {
  const ForbiddenFamily& family;
  PlayerRole first;
  PlayerRole fixed_role;
  Policy policy;
  const SolveConfig& cfg;
  std::unordered_map<std::string, int> memo;
  std::uint64_t nodes = 0;

  static std::string key_of(const GameGraph& g) {
    std::string k;
    k.reserve(g.edges().size() * 4);
    for (Edge e : g.edges()) {
      k.push_back(static_cast<char>(e.u & 0xff));
      k.push_back(static_cast<char>((e.u >> 8) & 0xff));
      k.push_back(static_cast<char>(e.v & 0xff));
      k.push_back(static_cast<char>((e.v >> 8) & 0xff));
    }
    return k;
  }

  int value_of(const GameGraph& g) {
    std::string key = key_of(g);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    if (++nodes, cfg.node_budget && nodes > *cfg.node_budget)
      throw NodeBudgetExceeded("best_response node budget exhausted");
    PlayerRole mover = mover_at(first, g.edge_count());
    auto moves = legal_moves(family, g);
    int result;
    if (moves.empty()) {
      result = 0;
    } else if (mover == fixed_role) {
      Edge e = select_move(policy, family, g, mover).move;
      result = 1 + value_of(add_edge(g, e));
    } else {
      bool maximize = mover == PlayerRole::Max;
      int best = 0;
      bool have = false;
      for (Edge e : moves) {
        int v = value_of(add_edge(g, e));
        if (!have || (maximize ? v > best : v < best)) {
          best = v;
          have = true;
        }
      }
      result = 1 + best;
    }
    if (memo.size() >= cfg.memo_capacity)
      throw NodeBudgetExceeded("best_response memo capacity reached");
    memo.emplace(std::move(key), result);
    return result;
  }
};

}  // namespace

int best_response(const Policy& policy, PlayerRole fixed_role, const SolveConfig& cfg) {
  if (cfg.memo_capacity == 0 || (cfg.node_budget && *cfg.node_budget == 0))
    throw Error("budgets must be positive");
  if (!policy.deterministic())
    throw RandomPolicyNotCertifiable("best_response requires a deterministic policy");
  GameGraph empty(cfg.host);
  if (!is_free(cfg.family, empty))
    throw PositionNotFree("empty position is not free for " + cfg.family.to_string());
  ResponseSearcher s{cfg.family, cfg.first, fixed_role, policy, cfg};
  return s.value_of(empty);
}

}  // namespace satgame
