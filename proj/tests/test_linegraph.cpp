#include <doctest.h>

#include <random>

#include "clawham/canon.hpp"
#include "clawham/clawfree.hpp"
#include "clawham/enumeration.hpp"
#include "clawham/errors.hpp"
#include "clawham/graph_ops.hpp"
#include "clawham/linegraph.hpp"
#include "oracles.hpp"

using namespace clawham;

namespace {

SimpleGraph cycle(int n) {
  SimpleGraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

SimpleGraph path(int n) {
  SimpleGraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

SimpleGraph star(int leaves) {
  SimpleGraph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

// Partition invariants rechecked from scratch.
bool partition_sound(const SimpleGraph& host, const KrauszPartition& p) {
  const int n = host.order();
  std::vector<std::vector<int>> cover(n, std::vector<int>(n, 0));
  std::vector<int> per_vertex(n, 0);
  for (const VertexSet k : p.cliques) {
    const auto vs = k.members();
    for (int a : vs) {
      ++per_vertex[a];
      for (int b : vs)
        if (a < b) {
          if (!host.adjacent(a, b)) return false;
          ++cover[a][b];
        }
    }
  }
  for (int a = 0; a < n; ++a) {
    if (per_vertex[a] > 2) return false;
    for (int b = a + 1; b < n; ++b)
      if (host.adjacent(a, b) != (cover[a][b] == 1)) return false;
  }
  for (std::size_t i = 0; i < p.cliques.size(); ++i)
    for (std::size_t j = i + 1; j < p.cliques.size(); ++j)
      if ((p.cliques[i] & p.cliques[j]).size() > 1) return false;
  return true;
}

void check_root(const SimpleGraph& g, const RootResult& r) {
  CHECK(oracle::triangle_free(r.root));
  CHECK(r.root.size() == g.order());
  CHECK(partition_sound(g, r.certificate));
  CHECK(is_valid_krausz_partition(g, r.certificate));
  int singles = 0;
  for (int v = 0; v < g.order(); ++v) singles += r.certificate.incidence[v].size() == 1 ? 1 : 0;
  CHECK(r.root.order() == static_cast<int>(r.certificate.cliques.size()) + singles);
  // The correspondence is an isomorphism L(root) -> g.
  REQUIRE(static_cast<int>(r.correspondence.size()) == g.order());
  for (int a = 0; a < g.order(); ++a) {
    CHECK(r.root.adjacent(r.correspondence[a].first, r.correspondence[a].second));
    for (int b = a + 1; b < g.order(); ++b) {
      const auto [p, q] = r.correspondence[a];
      const auto [s, t] = r.correspondence[b];
      CHECK(g.adjacent(a, b) == (p == s || p == t || q == s || q == t));
    }
  }
}

}  // namespace

TEST_CASE("line graph examples") {
  CHECK(line_graph(path(4)).graph == path(3));
  CHECK(are_isomorphic(line_graph(cycle(5)).graph, cycle(5)));
  CHECK(line_graph(star(3)).graph == cycle(3));
  const auto lg = line_graph(cycle(5));
  CHECK(lg.edge_of_vertex == cycle(5).edges());
  SimpleGraph big(12);
  for (int u = 0; u < 12; ++u)
    for (int v = u + 1; v < 12; ++v) big.add_edge(u, v);
  CHECK_THROWS_AS(line_graph(big), CapExceeded);
}

TEST_CASE("line graph matches the direct construction") {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 300; ++i) {
    const SimpleGraph h = oracle::random_graph(2 + static_cast<int>(rng() % 8), 0.4, rng);
    CHECK(line_graph(h).graph == oracle::line_graph(h));
  }
}

TEST_CASE("root of K3 is the claw, the only triangle-free root") {
  const RootResult r = root_graph(cycle(3));
  CHECK(are_isomorphic(r.root, star(3)));
  CHECK(r.multiplicity == 1);
  check_root(cycle(3), r);
  // Every graph with at most 4 edges and no isolated vertex, up to 8 vertices.
  int roots = 0, triangle_free_roots = 0;
  for (int n = 2; n <= 8; ++n) {
    FamilySpec s = FamilySpec::exactly(n);
    s.max_edges = 4;
    s.min_degree = 1;
    for (const SimpleGraph& h : enumerate(s)) {
      if (!are_isomorphic(oracle::line_graph(h), cycle(3))) continue;
      ++roots;
      if (oracle::triangle_free(h)) {
        ++triangle_free_roots;
        CHECK(are_isomorphic(h, star(3)));
      }
    }
  }
  CHECK(roots == 2);
  CHECK(triangle_free_roots == 1);
}

TEST_CASE("root examples and errors") {
  const RootResult c5 = root_graph(cycle(5));
  CHECK(are_isomorphic(c5.root, cycle(5)));
  check_root(cycle(5), c5);
  const RootResult k1 = root_graph(SimpleGraph(1));
  CHECK(k1.root.order() == 2);
  CHECK(k1.root.size() == 1);

  CHECK_THROWS_AS(root_graph(SimpleGraph(0)), InvalidInput);
  CHECK_THROWS_AS(root_graph(SimpleGraph(2)), InvalidInput);
  try {
    root_graph(star(3));
    FAIL("claw accepted");
  } catch (const NotALineGraph& e) {
    CHECK_FALSE(e.certificate().empty());
  }
  const SimpleGraph diamond = SimpleGraph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}});
  CHECK_THROWS_AS(root_graph(diamond), NotClosed);
}

TEST_CASE("verify_line_iso examples") {
  CHECK(verify_line_iso(star(3), cycle(3)));
  CHECK(verify_line_iso(cycle(5), cycle(5)));
  CHECK_FALSE(verify_line_iso(path(4), cycle(3)));
}

TEST_CASE("root round trip on every connected triangle-free graph up to 8 vertices") {
  long checked = 0;
  for (int n = 2; n <= 8; ++n) {
    FamilySpec s = FamilySpec::exactly(n);
    s.connected = true;
    s.triangle_free = true;
    for (const SimpleGraph& h : enumerate(s)) {
      const SimpleGraph l = oracle::line_graph(h);
      const RootResult r = root_graph(l);
      REQUIRE(are_isomorphic(r.root, h));
      CHECK(r.multiplicity == 1);
      check_root(l, r);
      ++checked;
    }
  }
  CHECK(checked > 350);
}

TEST_CASE("root of random relabelled line graphs") {
  std::mt19937_64 rng(59);
  int done = 0;
  while (done < 500) {
    const SimpleGraph h = oracle::random_graph(3 + static_cast<int>(rng() % 7), 0.4, rng);
    if (!is_connected(h) || !is_triangle_free(h)) continue;
    const SimpleGraph l = oracle::line_graph(h);
    const SimpleGraph lp = oracle::permuted(l, oracle::random_permutation(l.order(), rng));
    const RootResult r = root_graph(lp);
    CHECK(are_isomorphic(r.root, h));
    CHECK(verify_line_iso(r.root, lp));
    check_root(lp, r);
    ++done;
  }
}

TEST_CASE("closures of 2-connected claw-free graphs have triangle-free roots") {
  for (int n = 3; n <= 9; ++n) {
    FamilySpec s = FamilySpec::exactly(n);
    s.claw_free = true;
    s.two_connected = true;
    for (const SimpleGraph& g : enumerate(s)) {
      const SimpleGraph c = closure(g);
      const RootResult r = root_graph(c);
      REQUIRE(oracle::triangle_free(r.root));
      REQUIRE(verify_line_iso(r.root, c));
    }
  }
}
