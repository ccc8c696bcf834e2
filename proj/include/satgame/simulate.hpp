#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "satgame/family.hpp"
#include "satgame/graph.hpp"
#include "satgame/policy.hpp"
#include "satgame/role.hpp"

namespace satgame {

struct TranscriptMove {
  int index = 0;
  PlayerRole mover = PlayerRole::Max;
  Edge edge;
};

/// Record of one played game: enough to replay it from the empty position.
struct Transcript {
  std::string family;
  std::string host;
  PlayerRole first = PlayerRole::Max;
  std::string max_policy;
  std::string min_policy;
  std::uint64_t seed = 0;
  std::vector<TranscriptMove> moves;
  int final_size = 0;
  bool saturated = false;
};

/// Alternating play from the empty position until saturation. Unseeded
/// random policies get per-role seeds derived from the game seed.
Transcript play(Policy pmax, Policy pmin, const ForbiddenFamily& f, const HostGraph& h,
                PlayerRole first, std::uint64_t seed);

/// The F-free process: a uniformly random legal move each turn.
Transcript random_process(const ForbiddenFamily& f, const HostGraph& h, std::uint64_t seed);

/// Re-applies the transcript, checking host legality, family legality,
/// mover alternation, the final edge count, and final saturation.
/// Returns the replayed final position.
GameGraph replay(const Transcript& t);

/// Per-trial seed: splitmix64 of the master seed combined with the trial
/// index (documented mixing, reproducible trial by trial).
std::uint64_t trial_seed(std::uint64_t master, int trial);

struct ExperimentRow {
  int size = 0;
  int trials = 0;
  int min_size = 0;
  double mean_size = 0.0;
  int max_size = 0;
  double seconds = 0.0;
};

/// Plays `trials` games per host size. The host template substitutes each
/// size for the letter n (e.g. "B:n,n" at 50 -> "B:50,50"); the family spec
/// is re-bound per host so "trees" tracks the host order.
std::vector<ExperimentRow> scaling_experiment(const std::string& family_spec,
                                              const std::string& host_template,
                                              const std::vector<int>& sizes, const Policy& pmax,
                                              const Policy& pmin, int trials, std::uint64_t seed);

std::string experiment_csv(const std::vector<ExperimentRow>& rows);

}  // namespace satgame
