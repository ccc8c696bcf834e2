#include "satgame/simulate.hpp"

#include <chrono>
#include <sstream>

#include "satgame/legal_cache.hpp"

namespace satgame {

std::uint64_t trial_seed(std::uint64_t master, int trial) {
  return splitmix64(master ^ (0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(trial) + 1)));
}

Transcript play(Policy pmax, Policy pmin, const ForbiddenFamily& f, const HostGraph& h,
                PlayerRole first, std::uint64_t seed) {
  if (pmax.kind() == PolicyKind::RandomLegal && !pmax.has_seed())
    pmax = pmax.with_seed(splitmix64(seed ^ 0xa11ceULL));
  if (pmin.kind() == PolicyKind::RandomLegal && !pmin.has_seed())
    pmin = pmin.with_seed(splitmix64(seed ^ 0xb0bULL));

  Transcript t;
  t.family = f.to_string();
  t.host = h.to_string();
  t.first = first;
  t.max_policy = pmax.name();
  t.min_policy = pmin.name();
  t.seed = seed;

  GameGraph g(h);
  if (!is_free(f, g)) throw PositionNotFree("empty position is not free for " + f.to_string());
  LegalMoveCache cache(h);
  PlayerRole mover = first;
  long long guard = h.edge_count();
  while (cache.has_legal(f, g)) {
    if (t.moves.size() > static_cast<size_t>(guard)) throw Error("game exceeded |E(host)| moves");
    Policy& p = mover == PlayerRole::Max ? pmax : pmin;
    PolicyChoice choice = select_move(p, f, g, mover, &cache);
    p = choice.next;
    t.moves.push_back({static_cast<int>(t.moves.size()), mover, choice.move});
    g = add_edge(std::move(g), choice.move);
    cache.on_move(choice.move);
    mover = other(mover);
  }
  t.final_size = g.edge_count();
  t.saturated = true;
  return t;
}

Transcript random_process(const ForbiddenFamily& f, const HostGraph& h, std::uint64_t seed) {
  Transcript t;
  t.family = f.to_string();
  t.host = h.to_string();
  t.first = PlayerRole::Max;
  t.max_policy = "random-process";
  t.min_policy = "random-process";
  t.seed = seed;

  GameGraph g(h);
  if (!is_free(f, g)) throw PositionNotFree("empty position is not free for " + f.to_string());
  LegalMoveCache cache(h);
  std::uint64_t state = seed;
  PlayerRole mover = PlayerRole::Max;
  for (;;) {
    auto legal = cache.legal(f, g);
    if (legal.empty()) break;
    state = splitmix64(state);
    Edge e = legal[static_cast<size_t>(state % legal.size())];
    t.moves.push_back({static_cast<int>(t.moves.size()), mover, e});
    g = add_edge(std::move(g), e);
    cache.on_move(e);
    mover = other(mover);
  }
  t.final_size = g.edge_count();
  t.saturated = true;
  return t;
}

GameGraph replay(const Transcript& t) {
  HostGraph h = HostGraph::parse(t.host);
  ForbiddenFamily f = ForbiddenFamily::parse(t.family, h);
  GameGraph g(h);
  if (!is_free(f, g)) throw Error("replay: empty position not free");
  PlayerRole mover = t.first;
  for (const auto& mv : t.moves) {
    if (mv.mover != mover) throw Error("replay: mover out of turn at move " + std::to_string(mv.index));
    // freeness is inductive: each accepted move keeps the prefix free
    if (move_creates(f, g, mv.edge)) throw Error("replay: illegal move");
    g = add_edge(std::move(g), mv.edge);
    mover = other(mover);
  }
  if (g.edge_count() != t.final_size) throw Error("replay: final size mismatch");
  if (is_saturated(f, g) != t.saturated) throw Error("replay: saturation flag mismatch");
  return g;
}

namespace {

std::string substitute_size(const std::string& tmpl, int size) {
  std::string out;
  for (char c : tmpl) {
    if (c == 'n')
      out += std::to_string(size);
    else
      out.push_back(c);
  }
  return out;
}

}  // namespace

std::vector<ExperimentRow> scaling_experiment(const std::string& family_spec,
                                              const std::string& host_template,
                                              const std::vector<int>& sizes, const Policy& pmax,
                                              const Policy& pmin, int trials,
                                              std::uint64_t seed) {
  if (trials < 1) throw Error("scaling_experiment: trials >= 1 required");
  for (size_t i = 1; i < sizes.size(); ++i)
    if (sizes[i] <= sizes[i - 1]) throw Error("scaling_experiment: sizes must ascend");
  std::vector<ExperimentRow> rows;
  int trial_index = 0;
  for (int size : sizes) {
    HostGraph h = HostGraph::parse(substitute_size(host_template, size));
    ForbiddenFamily f = ForbiddenFamily::parse(family_spec, h);
    ExperimentRow row;
    row.size = size;
    row.trials = trials;
    auto t0 = std::chrono::steady_clock::now();
    long long total = 0;
    for (int i = 0; i < trials; ++i, ++trial_index) {
      Transcript t = play(pmax, pmin, f, h, PlayerRole::Max, trial_seed(seed, trial_index));
      int sz = t.final_size;
      total += sz;
      if (i == 0 || sz < row.min_size) row.min_size = sz;
      if (i == 0 || sz > row.max_size) row.max_size = sz;
    }
    auto t1 = std::chrono::steady_clock::now();
    row.mean_size = static_cast<double>(total) / trials;
    row.seconds = std::chrono::duration<double>(t1 - t0).count();
    rows.push_back(row);
  }
  return rows;
}

std::string experiment_csv(const std::vector<ExperimentRow>& rows) {
  std::ostringstream os;
  os << "n,trials,min,mean,max,seconds\n";
  for (const auto& r : rows) {
    os << r.size << ',' << r.trials << ',' << r.min_size << ',' << r.mean_size << ','
       << r.max_size << ',' << r.seconds << '\n';
  }
  return os.str();
}

}  // namespace satgame
