#include <doctest.h>

#include "oracles.hpp"
#include "satgame/graph.hpp"

using namespace satgame;
using namespace satgame::testing;

namespace {

GameGraph build(const HostGraph& h, std::initializer_list<Edge> edges) {
  GameGraph g(h);
  for (Edge e : edges) g = add_edge(std::move(g), e);
  return g;
}

}  // namespace

TEST_CASE("host parsing and normalization") {
  CHECK(HostGraph::parse("K:6").to_string() == "K:6");
  CHECK(HostGraph::parse("B:4,3").to_string() == "B:4,3");
  CHECK(HostGraph::parse("B:3,4").to_string() == "B:4,3");  // m >= n normalization
  CHECK(HostGraph::complete(5).edge_count() == 10);
  CHECK(HostGraph::bipartite(4, 3).edge_count() == 12);
  CHECK_THROWS_AS(HostGraph::parse("Q:4"), ParseError);
  CHECK_THROWS_AS(HostGraph::complete(0), ParseError);
}

TEST_CASE("add_edge basics") {
  GameGraph g(HostGraph::complete(2));
  g = add_edge(std::move(g), Edge(0, 1));
  CHECK(g.edge_count() == 1);

  GameGraph b(HostGraph::bipartite(2, 2));
  CHECK_THROWS_AS(add_edge(b, Edge(0, 1)), EdgeNotInHost);  // both ends in X

  GameGraph k4 = build(HostGraph::complete(4), {Edge(0, 1)});
  CHECK_THROWS_AS(add_edge(k4, Edge(0, 1)), EdgeAlreadyPresent);
}

TEST_CASE("add_edge returns a new value") {
  GameGraph g(HostGraph::complete(3));
  GameGraph g2 = add_edge(g, Edge(0, 1));
  CHECK(g.edge_count() == 0);
  CHECK(g2.edge_count() == 1);
}

TEST_CASE("component classification") {
  SUBCASE("empty K_3") {
    auto cs = components(GameGraph(HostGraph::complete(3)));
    REQUIRE(cs.size() == 3);
    for (const auto& c : cs) CHECK(c.cls == ComponentClass::IsolatedVertex);
  }
  SUBCASE("triangle plus isolate") {
    auto g = build(HostGraph::complete(4), {Edge(0, 1), Edge(1, 2), Edge(0, 2)});
    auto cs = components(g);
    REQUIRE(cs.size() == 2);
    CHECK(cs[0].cls == ComponentClass::Triangle);
    CHECK(cs[1].cls == ComponentClass::IsolatedVertex);
  }
  SUBCASE("star with three leaves") {
    auto g = build(HostGraph::complete(5), {Edge(0, 1), Edge(0, 2), Edge(0, 3)});
    auto cs = components(g);
    REQUIRE(cs.size() == 2);
    CHECK(cs[0].cls == ComponentClass::Star);
    CHECK(cs[0].star_center == 0);
    CHECK(cs[0].star_leaves == 3);
    CHECK(cs[1].cls == ComponentClass::IsolatedVertex);
  }
  SUBCASE("P_3 reports as path, not star") {
    auto g = build(HostGraph::complete(3), {Edge(0, 1), Edge(0, 2)});
    auto cs = components(g);
    REQUIRE(cs.size() == 1);
    CHECK(cs[0].cls == ComponentClass::Path);
    CHECK(cs[0].path_len == 3);
  }
  SUBCASE("cycles and trees") {
    auto c5 = build(HostGraph::complete(5),
                    {Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(3, 4), Edge(0, 4)});
    CHECK(components(c5)[0].cls == ComponentClass::Cycle);
    auto spider = build(HostGraph::complete(6),
                        {Edge(0, 1), Edge(0, 2), Edge(0, 3), Edge(3, 4), Edge(4, 5)});
    CHECK(components(spider)[0].cls == ComponentClass::Tree);
  }
  SUBCASE("component vertex lists partition the host") {
    std::uint64_t s = 7;
    for (int it = 0; it < 50; ++it) {
      HostGraph h = it % 2 ? HostGraph::complete(8) : HostGraph::bipartite(4, 4);
      GameGraph g = random_subgraph(h, s);
      auto cs = components(g);
      std::vector<char> seen(static_cast<size_t>(h.order()), 0);
      for (const auto& c : cs)
        for (Vertex v : c.vertices) {
          CHECK(!seen[static_cast<size_t>(v)]);
          seen[static_cast<size_t>(v)] = 1;
        }
      for (char x : seen) CHECK(x == 1);
    }
  }
}

TEST_CASE("bipartition balance") {
  auto single = build(HostGraph::complete(4), {Edge(0, 1)});
  auto b1 = bipartition_balance(single);
  REQUIRE(b1.size() == 1);
  CHECK(b1[0].bipartite);
  CHECK(b1[0].a == 1);
  CHECK(b1[0].b == 1);

  auto p4 = build(HostGraph::complete(5), {Edge(0, 1), Edge(1, 2), Edge(2, 3)});
  auto b2 = bipartition_balance(p4);
  REQUIRE(b2.size() == 1);
  CHECK(b2[0].a == 2);
  CHECK(b2[0].b == 2);
  CHECK(b2[0].balanced());

  auto tri = build(HostGraph::complete(3), {Edge(0, 1), Edge(1, 2), Edge(0, 2)});
  auto b3 = bipartition_balance(tri);
  REQUIRE(b3.size() == 1);
  CHECK(!b3[0].bipartite);
}

TEST_CASE("max_matching examples") {
  auto three = build(HostGraph::complete(6), {Edge(0, 1), Edge(2, 3), Edge(4, 5)});
  CHECK(max_matching(three) == 3);
  auto star4 = build(HostGraph::complete(5), {Edge(0, 1), Edge(0, 2), Edge(0, 3), Edge(0, 4)});
  CHECK(max_matching(star4) == 1);
  auto p4 = build(HostGraph::complete(4), {Edge(0, 1), Edge(1, 2), Edge(2, 3)});
  CHECK(max_matching(p4) == 2);
}

TEST_CASE("max_matching matches brute force on random graphs") {
  std::uint64_t s = 42;
  for (int it = 0; it < 1000; ++it) {
    int n = 2 + static_cast<int>(rng_next(s) % 9);  // up to 10 vertices
    bool bip = rng_next(s) % 2 == 0;
    HostGraph h = bip ? HostGraph::bipartite(std::max(1, n / 2), std::max(1, n - n / 2))
                      : HostGraph::complete(n);
    GameGraph g = random_subgraph(h, s);
    CHECK(max_matching(g) == max_matching_oracle(g));
  }
}

TEST_CASE("p4_between examples") {
  auto p4 = build(HostGraph::complete(4), {Edge(0, 1), Edge(1, 2), Edge(2, 3)});
  CHECK(p4_between(p4, 0, 3));
  CHECK(!p4_between(p4, 0, 2));

  auto star = build(HostGraph::complete(4), {Edge(0, 1), Edge(0, 2)});
  CHECK(!p4_between(star, 1, 2));  // only a length-2 path through the center

  auto c6 = build(HostGraph::complete(6),
                  {Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(3, 4), Edge(4, 5), Edge(0, 5)});
  CHECK(p4_between(c6, 0, 3));  // opposite vertices of C_6
}

TEST_CASE("p4_between equals C_4 creation on C_4-free bipartite positions") {
  std::uint64_t s = 99;
  for (int it = 0; it < 300; ++it) {
    int m = 2 + static_cast<int>(rng_next(s) % 7);
    int n = 2 + static_cast<int>(rng_next(s) % 7);  // up to 16 vertices total
    HostGraph h = HostGraph::bipartite(m, n);
    GameGraph g(h);
    auto f = ForbiddenFamily::cycle4();
    for (Edge e : h.all_edges()) {
      if (rng_next(s) % 3 != 0) continue;
      if (!move_creates(f, g, e)) g = add_edge(std::move(g), e);
    }
    REQUIRE(!has_c4_oracle(g));
    for (Edge e : h.all_edges()) {
      if (g.has_edge(e)) continue;
      CHECK(p4_between(g, e.u, e.v) == has_c4_oracle(add_edge(g, e)));
    }
  }
}

TEST_CASE("incremental caches survive random play") {
  std::uint64_t s = 1234;
  for (int it = 0; it < 60; ++it) {
    int n = 4 + static_cast<int>(rng_next(s) % 9);  // up to 12 vertices
    HostGraph h = it % 3 == 0 ? HostGraph::bipartite((n + 1) / 2, n / 2) : HostGraph::complete(n);
    GameGraph g(h);
    auto host_edges = h.all_edges();
    int moves = static_cast<int>(rng_next(s) % 31);
    for (int mv = 0; mv < moves; ++mv) {
      Edge e = host_edges[static_cast<size_t>(rng_next(s) % host_edges.size())];
      if (g.has_edge(e)) continue;
      g = add_edge(std::move(g), e);
      for (Vertex v = 0; v < g.order(); ++v) {
        int d = 0;
        for (Vertex w = 0; w < g.order(); ++w)
          if (w != v && g.adjacent(v, w)) ++d;
        REQUIRE(g.degree(v) == d);
      }
    }
    int total_edges = 0;
    for (const auto& c : components(g)) total_edges += c.edge_cnt;
    CHECK(total_edges == g.edge_count());
  }
}
