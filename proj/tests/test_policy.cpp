#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "satgame/policy.hpp"
#include "satgame/simulate.hpp"

using namespace satgame;
using namespace satgame::testing;

namespace {

GameGraph build(const HostGraph& h, std::initializer_list<Edge> edges) {
  GameGraph g(h);
  for (Edge e : edges) g = add_edge(std::move(g), e);
  return g;
}

}  // namespace

TEST_CASE("policy parsing round-trips") {
  for (const char* s : {"odd-balance-max", "tree-one-max", "tree-split-min", "claw-parity",
                        "p4-min", "p4-max", "bip-p4-min", "bip-p4-max", "c4-star-max", "first",
                        "random:77"}) {
    CHECK(Policy::parse(s).name() == s);
  }
  CHECK(Policy::parse("random").name() == "random");
  CHECK(!Policy::parse("random").has_seed());
  CHECK_THROWS_AS(Policy::parse("alphago"), ParseError);
}

TEST_CASE("policy/family/host compatibility is enforced") {
  GameGraph g(HostGraph::bipartite(3, 3));
  CHECK_THROWS_AS(
      select_move(Policy::odd_balance_max(), ForbiddenFamily::odd_cycles(), g, PlayerRole::Max),
      PolicyHostMismatch);
  GameGraph k6(HostGraph::complete(6));
  CHECK_THROWS_AS(select_move(Policy::bip_p4_min(), ForbiddenFamily::path(4), k6, PlayerRole::Min),
                  PolicyHostMismatch);
  CHECK_THROWS_AS(
      select_move(Policy::c4_star_max(), ForbiddenFamily::cycle4(),
                  GameGraph(HostGraph::bipartite(4, 3)), PlayerRole::Max),
      PolicyHostMismatch);
}

TEST_CASE("saturated and non-free positions are rejected") {
  auto sat = build(HostGraph::complete(4), {Edge(0, 1), Edge(2, 3)});
  CHECK_THROWS_AS(select_move(Policy::p4_max(), ForbiddenFamily::path(4), sat, PlayerRole::Max),
                  PositionSaturated);
  auto tri = build(HostGraph::complete(4), {Edge(0, 1), Edge(1, 2), Edge(0, 2)});
  CHECK_THROWS_AS(
      select_move(Policy::first_legal(), ForbiddenFamily::odd_cycles(), tri, PlayerRole::Max),
      PositionNotFree);
}

TEST_CASE("odd-balance rebalances the component the opponent unbalanced") {
  // P_3 on {0,1,2}: color classes {0,2} vs {1}; the policy attaches an
  // isolate opposite the larger class
  auto g = build(HostGraph::complete(6), {Edge(0, 1), Edge(1, 2)});
  Edge e = select_move_edge(Policy::odd_balance_max(), ForbiddenFamily::odd_cycles(), g,
                            PlayerRole::Max);
  CHECK(e == Edge(0, 3));
  auto after = add_edge(g, e);
  for (const auto& cb : bipartition_balance(after)) CHECK(cb.balanced());
}

TEST_CASE("p4-min converts a P_3 into K_{1,3}") {
  auto g = build(HostGraph::complete(6), {Edge(0, 1), Edge(0, 2)});
  Edge e = select_move_edge(Policy::p4_min(), ForbiddenFamily::path(4), g, PlayerRole::Min);
  CHECK(e == Edge(0, 3));  // lex-least isolate onto the center
}

TEST_CASE("p4-max opening and priorities") {
  GameGraph empty(HostGraph::complete(5));
  CHECK(select_move_edge(Policy::p4_max(), ForbiddenFamily::path(4), empty, PlayerRole::Max) ==
        Edge(0, 1));
  // an isolated edge left by Min gets extended to P_3 first
  auto g = build(HostGraph::complete(7), {Edge(0, 1), Edge(0, 2), Edge(0, 3), Edge(4, 5)});
  CHECK(select_move_edge(Policy::p4_max(), ForbiddenFamily::path(4), g, PlayerRole::Max) ==
        Edge(4, 6));
  // otherwise grow a star with at least three edges
  auto g2 = build(HostGraph::complete(7), {Edge(0, 1), Edge(0, 2), Edge(0, 3)});
  CHECK(select_move_edge(Policy::p4_max(), ForbiddenFamily::path(4), g2, PlayerRole::Max) ==
        Edge(0, 4));
  // and with no isolates at all, complete a triangle from a P_3
  auto g3 = build(HostGraph::complete(5), {Edge(0, 1), Edge(1, 2), Edge(3, 4)});
  CHECK(select_move_edge(Policy::p4_max(), ForbiddenFamily::path(4), g3, PlayerRole::Max) ==
        Edge(0, 2));
}

TEST_CASE("c4-star-max opening claims a fresh leaf for the first center") {
  GameGraph g(HostGraph::bipartite(100, 100));
  Edge e = select_move_edge(Policy::c4_star_max(), ForbiddenFamily::cycle4(), g, PlayerRole::Max);
  // centers are X: 0..3 and Y: 100..103 (k = 4); the first fresh non-center
  // leaf in Y is 104
  CHECK(e == Edge(0, 104));
}

TEST_CASE("c4-star-max building phase keeps designated stars disjoint") {
  // n = 30 gives k = 2: centers {0, 1} and {30, 31}
  HostGraph h = HostGraph::bipartite(30, 30);
  auto f = ForbiddenFamily::cycle4();
  Transcript t = play(Policy::c4_star_max(), Policy::random_legal(5), f, h, PlayerRole::Max, 5);
  GameGraph g(h);
  std::vector<int> deg(60, 0);
  std::vector<std::vector<Vertex>> leaves(4);
  auto center_index = [&](Vertex v) {
    if (v == 0 || v == 1) return static_cast<int>(v);
    if (v == 30 || v == 31) return static_cast<int>(2 + (v - 30));
    return -1;
  };
  for (const auto& mv : t.moves) {
    if (mv.mover == PlayerRole::Max) {
      for (auto [c, w] : {std::pair{mv.edge.u, mv.edge.v}, std::pair{mv.edge.v, mv.edge.u}}) {
        int ci = center_index(c);
        if (ci < 0 || center_index(w) >= 0) continue;
        if (deg[static_cast<size_t>(w)] == 0 && deg[static_cast<size_t>(c)] < 2)
          leaves[static_cast<size_t>(ci)].push_back(w);
      }
    }
    ++deg[static_cast<size_t>(mv.edge.u)];
    ++deg[static_cast<size_t>(mv.edge.v)];
    g = add_edge(std::move(g), mv.edge);
    // during the building phase no non-center vertex may see two designated
    // leaves of one star
    for (int ci = 0; ci < 4; ++ci) {
      for (Vertex v = 0; v < 60; ++v) {
        if (center_index(v) == ci) continue;
        int cnt = 0;
        for (Vertex leaf : leaves[static_cast<size_t>(ci)])
          if (g.adjacent(v, leaf)) ++cnt;
        REQUIRE(cnt <= 1);
      }
    }
  }
  // every center reaches degree k (random interference may supply part of
  // it); the policy's own claims stay within k and pairwise disjoint
  for (Vertex c : {0, 1, 30, 31}) CHECK(g.degree(c) >= 2);
  for (int ci = 0; ci < 4; ++ci) CHECK(leaves[static_cast<size_t>(ci)].size() <= 2);
  std::set<Vertex> all;
  for (const auto& ls : leaves)
    for (Vertex v : ls) CHECK(all.insert(v).second);
}

TEST_CASE("random policy is reproducible and first policy is lex-least") {
  GameGraph empty(HostGraph::complete(4));
  auto f = ForbiddenFamily::odd_cycles();
  auto c1 = select_move(Policy::random_legal(42), f, empty, PlayerRole::Max);
  auto c2 = select_move(Policy::random_legal(42), f, empty, PlayerRole::Max);
  CHECK(c1.move == c2.move);
  CHECK(c1.next.counter() == 1);
  // the continuation draws a fresh value
  auto c3 = select_move(c1.next, f, add_edge(empty, c1.move), PlayerRole::Min);
  CHECK(c3.next.counter() == 2);
  CHECK(select_move_edge(Policy::first_legal(), f, empty, PlayerRole::Max) == Edge(0, 1));
}

TEST_CASE("policies always return legal moves on random reachable positions") {
  std::uint64_t s = 90210;
  struct Setup {
    Policy p;
    ForbiddenFamily f;
    HostGraph h;
  };
  std::vector<Setup> setups = {
      {Policy::odd_balance_max(), ForbiddenFamily::odd_cycles(), HostGraph::complete(8)},
      {Policy::tree_one_max(), ForbiddenFamily::spanning_trees(7), HostGraph::complete(7)},
      {Policy::tree_split_min(), ForbiddenFamily::spanning_trees(7), HostGraph::complete(7)},
      {Policy::claw_parity(), ForbiddenFamily::star(3), HostGraph::complete(9)},
      {Policy::p4_min(), ForbiddenFamily::path(4), HostGraph::complete(9)},
      {Policy::p4_max(), ForbiddenFamily::path(4), HostGraph::complete(9)},
      {Policy::bip_p4_min(), ForbiddenFamily::path(4), HostGraph::bipartite(5, 4)},
      {Policy::bip_p4_max(), ForbiddenFamily::path(4), HostGraph::bipartite(5, 4)},
      {Policy::c4_star_max(), ForbiddenFamily::cycle4(), HostGraph::bipartite(8, 8)},
      {Policy::first_legal(), ForbiddenFamily::star(4), HostGraph::complete(8)},
      {Policy::random_legal(3), ForbiddenFamily::star(4), HostGraph::complete(8)},
  };
  for (const auto& setup : setups) {
    for (int it = 0; it < 60; ++it) {
      // a random reachable position: play random legal moves to a random depth
      GameGraph g(setup.h);
      int depth = static_cast<int>(rng_next(s) % 10);
      for (int mv = 0; mv < depth; ++mv) {
        auto moves = legal_moves(setup.f, g);
        if (moves.empty()) break;
        g = add_edge(std::move(g), moves[static_cast<size_t>(rng_next(s) % moves.size())]);
      }
      if (legal_moves(setup.f, g).empty()) continue;
      PlayerRole mover = rng_next(s) % 2 ? PlayerRole::Max : PlayerRole::Min;
      Edge e = select_move_edge(setup.p, setup.f, g, mover);
      CHECK(!g.has_edge(e));
      CHECK(g.host().allows(e));
      CHECK(!move_creates(setup.f, g, e));
    }
  }
}

TEST_CASE("odd-balance maintains balance after each of its moves") {
  // random opponent, policy as Max; every nontrivial component stays
  // balanced after the policy's move
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    Transcript t = play(Policy::odd_balance_max(), Policy::random_unseeded(),
                        ForbiddenFamily::odd_cycles(), HostGraph::complete(8), PlayerRole::Max,
                        seed);
    GameGraph g(HostGraph::complete(8));
    for (const auto& mv : t.moves) {
      g = add_edge(std::move(g), mv.edge);
      if (mv.mover == PlayerRole::Max) {
        for (const auto& cb : bipartition_balance(g)) CHECK(cb.balanced());
      }
    }
  }
}

TEST_CASE("tree-one-max leaves one nontrivial component whenever possible") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    Transcript t = play(Policy::tree_one_max(), Policy::random_unseeded(),
                        ForbiddenFamily::spanning_trees(7), HostGraph::complete(7),
                        PlayerRole::Max, seed);
    GameGraph g(HostGraph::complete(7));
    auto f = ForbiddenFamily::spanning_trees(7);
    for (const auto& mv : t.moves) {
      GameGraph before = g;
      g = add_edge(std::move(g), mv.edge);
      if (mv.mover != PlayerRole::Max) continue;
      int nontrivial = 0;
      for (const auto& c : components(g))
        if (c.nontrivial()) ++nontrivial;
      if (nontrivial == 1) continue;
      // acceptable only when no legal move could have achieved it
      for (Edge e : legal_moves(f, before)) {
        int nt = 0;
        for (const auto& c : components(add_edge(before, e)))
          if (c.nontrivial()) ++nt;
        CHECK(nt != 1);
      }
    }
  }
}
