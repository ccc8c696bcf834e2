#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "satgame/canonical.hpp"

using namespace satgame;
using namespace satgame::testing;

namespace {

GameGraph build(const HostGraph& h, std::initializer_list<Edge> edges) {
  GameGraph g(h);
  for (Edge e : edges) g = add_edge(std::move(g), e);
  return g;
}

}  // namespace

TEST_CASE("certificate examples") {
  HostGraph k5 = HostGraph::complete(5);
  CHECK(certificate(build(k5, {Edge(0, 1)})) == certificate(build(k5, {Edge(2, 3)})));

  HostGraph k4 = HostGraph::complete(4);
  auto p3 = build(k4, {Edge(0, 1), Edge(1, 2)});
  auto two_k2 = build(k4, {Edge(0, 1), Edge(2, 3)});
  CHECK(certificate(p3) != certificate(two_k2));

  HostGraph b22 = HostGraph::bipartite(2, 2);
  CHECK(certificate(build(b22, {Edge(0, 2)})) == certificate(build(b22, {Edge(1, 3)})));
}

TEST_CASE("certificates separate hosts and part orientations") {
  // the same abstract star K_{1,2} with leaves in X vs leaves in Y
  HostGraph b32 = HostGraph::bipartite(3, 2);
  auto x_star = build(b32, {Edge(0, 3), Edge(1, 3)});   // two X-leaves
  auto y_star = build(b32, {Edge(0, 3), Edge(0, 4)});   // two Y-leaves
  CHECK(certificate(x_star) != certificate(y_star));

  // identical edge lists on different hosts must not collide
  auto on_k4 = build(HostGraph::complete(4), {Edge(0, 1)});
  auto on_k5 = build(HostGraph::complete(5), {Edge(0, 1)});
  CHECK(certificate(on_k4) != certificate(on_k5));
}

TEST_CASE("certificate hex is printable") {
  auto g = build(HostGraph::complete(3), {Edge(0, 1)});
  std::string hex = certificate(g).hex();
  CHECK(!hex.empty());
  for (char c : hex) CHECK(std::string("0123456789abcdef").find(c) != std::string::npos);
}

TEST_CASE("orbit examples") {
  GameGraph empty6(HostGraph::complete(6));
  // the empty complete host is edge-transitive for every family
  for (auto f : {ForbiddenFamily::odd_cycles(), ForbiddenFamily::spanning_trees(6),
                 ForbiddenFamily::star(3), ForbiddenFamily::path(4), ForbiddenFamily::cycle4()}) {
    CHECK(legal_move_orbits(f, empty6).size() == 1);
  }

  auto one_edge = build(HostGraph::complete(4), {Edge(0, 1)});
  auto orbits = legal_move_orbits(ForbiddenFamily::odd_cycles(), one_edge);
  // derived by grouping the 5 legal moves under exhaustive isomorphism search
  {
    auto moves = legal_moves(ForbiddenFamily::odd_cycles(), one_edge);
    REQUIRE(moves.size() == 5);
    std::vector<GameGraph> reps;
    int classes = 0;
    for (Edge e : moves) {
      GameGraph child = add_edge(one_edge, e);
      bool found = false;
      for (const auto& r : reps) found = found || host_isomorphic_oracle(child, r);
      if (!found) {
        reps.push_back(child);
        ++classes;
      }
    }
    CHECK(classes == 2);
    CHECK(orbits.size() == 2);
  }

  GameGraph empty32(HostGraph::bipartite(3, 2));
  CHECK(legal_move_orbits(ForbiddenFamily::path(4), empty32).size() == 1);

  auto tri = build(HostGraph::complete(3), {Edge(0, 1), Edge(1, 2), Edge(0, 2)});
  CHECK_THROWS_AS(legal_move_orbits(ForbiddenFamily::odd_cycles(), tri), PositionNotFree);
}

TEST_CASE("orbit groups cover all legal moves with equal-certificate children") {
  std::uint64_t s = 31337;
  for (int it = 0; it < 100; ++it) {
    HostGraph h = it % 2 ? HostGraph::complete(5 + static_cast<int>(rng_next(s) % 3))
                         : HostGraph::bipartite(3, 2 + static_cast<int>(rng_next(s) % 2));
    ForbiddenFamily f =
        it % 2 ? ForbiddenFamily::star(3) : ForbiddenFamily::path(4);
    GameGraph g(h);
    for (Edge e : h.all_edges()) {
      if (rng_next(s) % 4 != 0) continue;
      if (!move_creates(f, g, e)) g = add_edge(std::move(g), e);
    }
    auto moves = legal_moves(f, g);
    auto groups = legal_move_orbit_groups(f, g);
    size_t covered = 0;
    for (const auto& orbit : groups) {
      covered += static_cast<size_t>(orbit.multiplicity);
      CHECK(certificate(add_edge(g, orbit.representative)) == orbit.child);
    }
    CHECK(covered == moves.size());
  }
}

TEST_CASE("certificate census matches the unlabeled graph counts") {
  // the number of distinct certificates over all subgraphs of K_n must equal
  // the number of graphs on n vertices up to isomorphism: 4, 11, 34, 156
  int expected[] = {4, 11, 34, 156};
  for (int n = 3; n <= 6; ++n) {
    HostGraph h = HostGraph::complete(n);
    auto host_edges = h.all_edges();
    std::set<std::string> census;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << host_edges.size()); ++mask) {
      GameGraph g(h);
      for (size_t b = 0; b < host_edges.size(); ++b)
        if (mask >> b & 1) g = add_edge(std::move(g), host_edges[b]);
      census.insert(certificate(g).bytes);
    }
    CHECK(census.size() == static_cast<size_t>(expected[n - 3]));
  }
}

TEST_CASE("bipartite certificate census matches exhaustive grouping") {
  for (auto [m, n] : {std::pair{2, 2}, {3, 2}, {3, 3}}) {
    HostGraph h = HostGraph::bipartite(m, n);
    auto host_edges = h.all_edges();
    std::vector<GameGraph> all;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << host_edges.size()); ++mask) {
      GameGraph g(h);
      for (size_t b = 0; b < host_edges.size(); ++b)
        if (mask >> b & 1) g = add_edge(std::move(g), host_edges[b]);
      all.push_back(std::move(g));
    }
    std::set<std::string> census;
    for (const auto& g : all) census.insert(certificate(g).bytes);
    // group the same population by brute-force isomorphism search
    std::vector<const GameGraph*> reps;
    for (const auto& g : all) {
      bool found = false;
      for (const auto* r : reps) found = found || host_isomorphic_oracle(g, *r);
      if (!found) reps.push_back(&g);
    }
    CHECK(census.size() == reps.size());
  }
}

TEST_CASE("certificate equality coincides with exhaustive isomorphism search") {
  std::uint64_t s = 777;
  for (int it = 0; it < 200; ++it) {
    bool bip = rng_next(s) % 2 == 0;
    HostGraph h = bip ? HostGraph::bipartite(2 + static_cast<int>(rng_next(s) % 2),
                                             2 + static_cast<int>(rng_next(s) % 2))
                      : HostGraph::complete(4 + static_cast<int>(rng_next(s) % 4));
    GameGraph a = random_subgraph(h, s);
    GameGraph b = random_subgraph(h, s);
    CHECK((certificate(a) == certificate(b)) == host_isomorphic_oracle(a, b));
  }
}
