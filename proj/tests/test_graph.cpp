#include "doctest.h"

#include "copsrobber/generators.hpp"
#include "copsrobber/graph.hpp"
#include "oracles.hpp"

using namespace copsrobber;

namespace {

std::set<Vertex> as_set(const VertexSet& s) {
  auto v = s.to_vector();
  return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("edge list parsing") {
  const Graph p4 = from_edge_list("4 3\n0 1\n1 2\n2 3");
  CHECK(p4 == path_graph(4));

  const Graph k3 = from_edge_list("3 3\n0 1\n1 2\n2 0\n");
  CHECK(k3 == complete_graph(3));
  CHECK(k3 == cycle_graph(3));

  CHECK_THROWS_AS(from_edge_list("2 1\n0 0"), InvalidEdge);
  CHECK_THROWS_AS(from_edge_list("2 1\n0 2"), InvalidEdge);
  CHECK_THROWS_AS(from_edge_list("2 1\n0  1"), ParseError);
  CHECK_THROWS_AS(from_edge_list("2 1\nzero one"), ParseError);
  CHECK_THROWS_AS(from_edge_list("3 2\n0 1"), ParseError);
  CHECK_THROWS_AS(from_edge_list(""), ParseError);

  SUBCASE("comments and duplicates") {
    const Graph g = from_edge_list("# header comment\n3 3\n0 1\n# inside\n1 0\n1 2\n");
    CHECK(g.m() == 2);
    CHECK(to_edge_list(g) == "3 2\n0 1\n1 2\n");
  }
}

TEST_CASE("serialization is canonical and round-trips") {
  for (int n = 2; n <= 5; ++n) {
    enumerate_connected(n, [](std::uint64_t, const Graph& g) {
      const auto text = to_edge_list(g);
      CHECK(from_edge_list(text) == g);
      CHECK(to_edge_list(from_edge_list(text)) == text);
    });
  }
}

TEST_CASE("closed neighborhood") {
  const Graph c6 = cycle_graph(6);
  CHECK(closed_neighborhood(c6, VertexSet(6, {0})) == VertexSet(6, {5, 0, 1}));
  CHECK(closed_neighborhood(c6, VertexSet(6)).empty());
  const Graph p5 = path_graph(5);
  CHECK(closed_neighborhood(p5, VertexSet(5, {1, 3})) == VertexSet::full(5));

  // Contains s and has at most |s| (Delta + 1) vertices.
  const Graph pet = petersen_graph();
  SplitMix64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    VertexSet s(10);
    for (Vertex v = 0; v < 10; ++v)
      if (rng.below(3) == 0) s.insert(v);
    const auto closed = closed_neighborhood(pet, s);
    CHECK(s.is_subset_of(closed));
    CHECK(closed.size() <= s.size() * (pet.max_degree() + 1));
  }
}

TEST_CASE("removal components") {
  const Graph p5 = path_graph(5);
  auto comps = removal_components(p5, VertexSet(5, {2}));
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == VertexSet(5, {0, 1}));
  CHECK(comps[1] == VertexSet(5, {3, 4}));

  CHECK(removal_components(cycle_graph(4), VertexSet(4)) == std::vector{VertexSet::full(4)});
  CHECK(removal_components(complete_graph(4), VertexSet::full(4)).empty());

  SUBCASE("agrees with union-find on all 5-vertex removals") {
    enumerate_connected(5, [](std::uint64_t mask, const Graph& g) {
      for (std::uint32_t f = 0; f < 32; f += 1 + static_cast<std::uint32_t>(mask % 3)) {
        VertexSet forbidden(5);
        std::set<Vertex> fset;
        for (Vertex v = 0; v < 5; ++v)
          if ((f >> v) & 1u) forbidden.insert(v), fset.insert(v);
        std::vector<std::vector<Vertex>> got;
        for (const auto& c : removal_components(g, forbidden)) got.push_back(c.to_vector());
        CHECK(got == oracle::union_find_components(g, fset));
      }
    });
  }
}

TEST_CASE("reachable within") {
  const Graph p5 = path_graph(5);
  CHECK(reachable_within(p5, 0, Speed::infinite(), VertexSet(5, {2})) == VertexSet(5, {0, 1}));
  CHECK(reachable_within(p5, 0, Speed::steps(1), VertexSet(5)) == VertexSet(5, {0, 1}));
  const Graph c6 = cycle_graph(6);
  CHECK(reachable_within(c6, 0, Speed::steps(2), VertexSet(6, {1})) == VertexSet(6, {0, 5, 4}));
  CHECK_THROWS_AS(reachable_within(c6, 1, Speed::steps(2), VertexSet(6, {1})), SourceForbidden);

  SUBCASE("matches simple-path enumeration") {
    const Graph pet = petersen_graph();
    SplitMix64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
      VertexSet forbidden(10);
      std::set<Vertex> fset;
      for (Vertex v = 0; v < 10; ++v)
        if (rng.below(4) == 0) forbidden.insert(v), fset.insert(v);
      const Vertex src = static_cast<Vertex>(rng.below(10));
      if (fset.count(src)) continue;
      for (int steps : {1, 2, 3, 10}) {
        CHECK(as_set(reachable_within(pet, src, Speed::steps(steps), forbidden)) ==
              oracle::paths_reach(pet, src, steps, fset));
      }
    }
  }
}

TEST_CASE("block decomposition") {
  const Graph bowtie(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
  auto dec = block_decomposition(bowtie);
  REQUIRE(dec.blocks.size() == 2);
  CHECK(dec.blocks[0] == VertexSet(5, {0, 1, 2}));
  CHECK(dec.blocks[1] == VertexSet(5, {2, 3, 4}));
  CHECK(dec.cut_vertices == VertexSet(5, {2}));

  dec = block_decomposition(path_graph(4));
  REQUIRE(dec.blocks.size() == 3);
  CHECK(dec.blocks[0] == VertexSet(4, {0, 1}));
  CHECK(dec.blocks[1] == VertexSet(4, {1, 2}));
  CHECK(dec.blocks[2] == VertexSet(4, {2, 3}));
  CHECK(dec.cut_vertices == VertexSet(4, {1, 2}));

  dec = block_decomposition(petersen_graph());
  REQUIRE(dec.blocks.size() == 1);
  CHECK(dec.blocks[0] == VertexSet::full(10));
  CHECK(dec.cut_vertices.empty());

  CHECK(block_decomposition(path_graph(1)).blocks.empty());
  CHECK_THROWS_AS(block_decomposition(Graph(3, {{0, 1}})), NotConnected);

  SUBCASE("structural properties on every connected graph with n <= 6") {
    for (int n = 2; n <= 6; ++n) {
      enumerate_connected(n, [&](std::uint64_t, const Graph& g) {
        const auto d = block_decomposition(g);
        // Each edge in exactly one block.
        for (auto [u, v] : g.edges()) {
          int owners = 0;
          for (const auto& b : d.blocks) owners += b.contains(u) && b.contains(v);
          CHECK(owners == 1);
        }
        for (const auto& b : d.blocks) {
          const auto members = b.to_vector();
          CHECK(members.size() >= 2);
          if (members.size() >= 3) {
            for (Vertex x : members) CHECK(oracle::connected_without(g, members, x));
          }
          // Maximality: no outside vertex keeps the enlarged set 2-connected.
          for (Vertex y = 0; y < n; ++y) {
            if (b.contains(y)) continue;
            auto bigger = members;
            bigger.push_back(y);
            bool two_connected = oracle::connected_without(g, bigger, -1);
            for (Vertex x : bigger) two_connected = two_connected && oracle::connected_without(g, bigger, x);
            CHECK_FALSE(two_connected);
          }
        }
        // Cut vertices are exactly the articulation points.
        std::vector<Vertex> all(n);
        std::iota(all.begin(), all.end(), 0);
        for (Vertex v = 0; v < n; ++v) CHECK(d.cut_vertices.contains(v) == !oracle::connected_without(g, all, v));
        // Block tree is a tree.
        CHECK(d.tree_edges.size() == d.blocks.size() + d.cut_vertices.size() - 1);
      });
    }
  }
}

TEST_CASE("power graph") {
  CHECK(power_graph(path_graph(4), 2) == Graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}));
  CHECK(power_graph(cycle_graph(5), 2) == complete_graph(5));
  const Graph pet = petersen_graph();
  CHECK(power_graph(pet, 1) == pet);

  SUBCASE("monotone and saturates at the diameter") {
    for (const Graph& g : {petersen_graph(), path_graph(7), cycle_graph(9)}) {
      const int diam = DistanceMatrix(g).diameter();
      Graph prev = g;
      for (int t = 2; t <= diam + 2; ++t) {
        Graph cur = power_graph(g, t);
        for (auto [u, v] : prev.edges()) CHECK(cur.adjacent(u, v));
        if (t >= diam) CHECK(cur == complete_graph(g.n()));
        prev = std::move(cur);
      }
    }
  }
}

TEST_CASE("cartesian product") {
  const Graph p2 = path_graph(2), p3 = path_graph(3), c4 = cycle_graph(4);
  {
    const Graph f[] = {p2, p2};
    CHECK(cartesian_product(f).degree_sequence() == std::vector<int>{2, 2, 2, 2});
    CHECK(cartesian_product(f).m() == 4);
    CHECK(is_connected(cartesian_product(f)));
  }
  {
    const Graph f[] = {p3, p3};
    CHECK(cartesian_product(f).degree_sequence() == std::vector<int>{2, 2, 2, 2, 3, 3, 3, 3, 4});
  }
  {
    const Graph f[] = {c4, c4};
    const Graph g = cartesian_product(f);
    CHECK(g.n() == 16);
    CHECK(g.m() == 32);
    CHECK(g.min_degree() == 4);
    CHECK(g.max_degree() == 4);
  }
  CHECK_THROWS_AS(cartesian_product(std::span<const Graph>{}), EmptyFactor);
  {
    const Graph f[] = {p2, Graph(0, {})};
    CHECK_THROWS_AS(cartesian_product(f), EmptyFactor);
  }

  SUBCASE("mixed-radix labelling and degree sums") {
    const Graph f[] = {path_graph(3), cycle_graph(4), star_graph(3)};
    const Graph g = cartesian_product(f);
    CHECK(g.n() == 36);
    CHECK(g.max_degree() == f[0].max_degree() + f[1].max_degree() + f[2].max_degree());
    for (Vertex x = 0; x < 36; ++x) {
      const int a = x / 12, b = (x / 3) % 4, c = x % 3;
      CHECK(g.degree(x) == f[0].degree(a) + f[1].degree(b) + f[2].degree(c));
    }
    // (0,0,0) ~ (1,0,0) has index distance 12.
    CHECK(g.adjacent(0, 12));
    CHECK_FALSE(g.adjacent(0, 13));
  }
}

TEST_CASE("speed parsing") {
  CHECK(Speed::parse("inf").is_infinite());
  CHECK(Speed::parse("3") == Speed::steps(3));
  CHECK_THROWS_AS(Speed::parse("0"), PreconditionError);
  CHECK_THROWS_AS(Speed::parse("fast"), ParseError);
  CHECK(Speed::infinite().capped(9) == 9);
}
