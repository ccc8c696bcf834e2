#include <doctest.h>

#include "oracles.hpp"
#include "satgame/analysis.hpp"
#include "satgame/simulate.hpp"

using namespace satgame;
using namespace satgame::testing;

TEST_CASE("play: paper policy matchups land on the theorem values") {
  // P_4 on K_10, both paper policies: the window is [ceil(34/5), floor(44/5)]
  Transcript t = play(Policy::p4_max(), Policy::p4_min(), ForbiddenFamily::path(4),
                      HostGraph::complete(10), PlayerRole::Max, 1);
  CHECK(t.final_size >= 7);
  CHECK(t.final_size <= 8);

  // tree game on K_3: the second edge would connect everything
  Transcript t2 = play(Policy::first_legal(), Policy::first_legal(),
                       ForbiddenFamily::spanning_trees(3), HostGraph::complete(3),
                       PlayerRole::Max, 1);
  CHECK(t2.final_size == 1);

  // P_4 on K_{3,3} under the bipartite policies: exactly m + floor(n/2)
  Transcript t3 = play(Policy::bip_p4_max(), Policy::bip_p4_min(), ForbiddenFamily::path(4),
                       HostGraph::bipartite(3, 3), PlayerRole::Max, 1);
  CHECK(t3.final_size == 4);
}

TEST_CASE("play rejects mismatched policies") {
  CHECK_THROWS_AS(play(Policy::bip_p4_max(), Policy::bip_p4_min(), ForbiddenFamily::path(4),
                       HostGraph::complete(6), PlayerRole::Max, 1),
                  PolicyHostMismatch);
}

TEST_CASE("random process examples") {
  // C_4-saturated subgraphs of K_{n,n} are connected: at least 2n-1 edges
  Transcript t = random_process(ForbiddenFamily::cycle4(), HostGraph::bipartite(8, 8), 7);
  CHECK(t.final_size >= 15);
  CHECK(t.saturated);

  // K_{1,4}-free positions on K_6 have at most floor(3*6/2) edges
  Transcript t2 = random_process(ForbiddenFamily::star(4), HostGraph::complete(6), 8);
  CHECK(t2.final_size <= 9);

  Transcript t3 = random_process(ForbiddenFamily::path(4), HostGraph::bipartite(1, 1), 9);
  CHECK(t3.final_size == 1);
}

TEST_CASE("seed determinism and replay identity") {
  Transcript a = random_process(ForbiddenFamily::star(3), HostGraph::complete(8), 1234);
  Transcript b = random_process(ForbiddenFamily::star(3), HostGraph::complete(8), 1234);
  REQUIRE(a.moves.size() == b.moves.size());
  for (size_t i = 0; i < a.moves.size(); ++i) CHECK(a.moves[i].edge == b.moves[i].edge);

  Transcript c = play(Policy::random_unseeded(), Policy::random_unseeded(),
                      ForbiddenFamily::odd_cycles(), HostGraph::complete(6), PlayerRole::Min, 55);
  Transcript d = play(Policy::random_unseeded(), Policy::random_unseeded(),
                      ForbiddenFamily::odd_cycles(), HostGraph::complete(6), PlayerRole::Min, 55);
  REQUIRE(c.moves.size() == d.moves.size());
  for (size_t i = 0; i < c.moves.size(); ++i) CHECK(c.moves[i].edge == d.moves[i].edge);

  GameGraph final_pos = replay(c);
  CHECK(final_pos.edge_count() == c.final_size);
  CHECK(is_saturated(ForbiddenFamily::odd_cycles(), final_pos));
}

TEST_CASE("every emitted transcript ends saturated") {
  std::uint64_t s = 5150;
  for (int it = 0; it < 10; ++it) {
    Transcript t = random_process(ForbiddenFamily::path(4),
                                  HostGraph::bipartite(4 + static_cast<int>(rng_next(s) % 2), 3),
                                  rng_next(s));
    GameGraph g = replay(t);
    CHECK(is_saturated(ForbiddenFamily::parse(t.family, g.host()), g));
  }
}

TEST_CASE("P_4 games on bipartite hosts only ever build stars") {
  std::uint64_t s = 815;
  for (int it = 0; it < 10; ++it) {
    HostGraph h = HostGraph::bipartite(5, 4);
    Transcript t = random_process(ForbiddenFamily::path(4), h, rng_next(s));
    GameGraph g(h);
    for (const auto& mv : t.moves) {
      g = add_edge(std::move(g), mv.edge);
      for (const auto& c : components(g)) {
        bool star_like = c.cls == ComponentClass::IsolatedVertex ||
                         c.cls == ComponentClass::SingleEdge ||
                         (c.cls == ComponentClass::Path && c.path_len == 3) ||
                         c.cls == ComponentClass::Star;
        CHECK(star_like);
      }
    }
  }
}

TEST_CASE("scaling experiment rows") {
  auto rows = scaling_experiment("cycle:4", "B:n,n", {6, 8}, Policy::c4_star_max(),
                                 Policy::random_unseeded(), 3, 99);
  REQUIRE(rows.size() == 2);
  for (const auto& r : rows) {
    CHECK(r.trials == 3);
    CHECK(r.min_size <= r.mean_size);
    CHECK(r.mean_size <= r.max_size);
    CHECK(r.min_size >= 2 * r.size - 1);  // connectivity bound
  }

  // trials = 1 collapses the summary
  auto one = scaling_experiment("star:r+1=4", "K:n", {6}, Policy::first_legal(),
                                Policy::first_legal(), 1, 5);
  REQUIRE(one.size() == 1);
  CHECK(one[0].min_size == one[0].max_size);
  CHECK(one[0].mean_size == one[0].min_size);

  // deterministic policies give the exact theorem value every trial
  auto det = scaling_experiment("path:4", "B:n,n", {3, 4, 5}, Policy::bip_p4_max(),
                                Policy::bip_p4_min(), 2, 17);
  for (const auto& r : det) {
    long long want = closed_form({TheoremId::P4Kmn, r.size, r.size, 0, 0, PlayerRole::Max}).lo;
    CHECK(r.min_size == want);
    CHECK(r.max_size == want);
  }

  CHECK_THROWS_AS(scaling_experiment("path:4", "B:n,n", {5, 3}, Policy::first_legal(),
                                     Policy::first_legal(), 1, 1),
                  Error);  // sizes must ascend

  std::string csv = experiment_csv(rows);
  CHECK(csv.rfind("n,trials,min,mean,max,seconds\n", 0) == 0);
}
