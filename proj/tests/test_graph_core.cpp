#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "clawham/canon.hpp"
#include "clawham/errors.hpp"
#include "clawham/graph.hpp"
#include "clawham/graph6.hpp"
#include "clawham/graph_ops.hpp"
#include "oracles.hpp"

using namespace clawham;

namespace {

SimpleGraph cycle(int n) {
  SimpleGraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

SimpleGraph complete_bipartite(int a, int b) {
  SimpleGraph g(a + b);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
  return g;
}

SimpleGraph petersen() {
  SimpleGraph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

}  // namespace

TEST_CASE("vertex and edge sets") {
  VertexSet s = VertexSet::of({1, 4, 6});
  CHECK(s.size() == 3);
  CHECK(s.front() == 1);
  CHECK(s.members() == std::vector<int>{1, 4, 6});
  s.erase(1);
  CHECK_FALSE(s.contains(1));
  CHECK(VertexSet::range(64).size() == 64);

  EdgeSet a(10), empty(10);
  a.insert(2);
  a.insert(7);
  CHECK(symmetric_difference(a, a) == empty);
  CHECK(symmetric_difference(a, empty) == a);
  CHECK_THROWS_AS(symmetric_difference(a, EdgeSet(11)), InvalidInput);
  CHECK_THROWS_AS(a.insert(10), InvalidInput);
}

TEST_CASE("symmetric difference of two 4-cycles sharing an edge") {
  // 0-1-2-3-0 and 0-1-4-5-0 share edge 01.
  const Multigraph g = Multigraph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {1, 4}, {4, 5}, {0, 5}});
  EdgeSet c1(g.size()), c2(g.size());
  for (auto [u, v] : {std::pair{0, 1}, {1, 2}, {2, 3}, {0, 3}}) c1.insert(g.first_edge(u, v));
  for (auto [u, v] : {std::pair{0, 1}, {1, 4}, {4, 5}, {0, 5}}) c2.insert(g.first_edge(u, v));
  const EdgeSet d = symmetric_difference(c1, c2);
  CHECK(d.size() == 6);
  CHECK_FALSE(d.contains(g.first_edge(0, 1)));
  for (int v = 0; v < 6; ++v) {
    int deg = 0;
    for (EdgeId e : g.incident(v)) deg += d.contains(e) ? 1 : 0;
    CHECK(deg == 2);
  }
}

TEST_CASE("multigraph invariants") {
  Multigraph g(4);
  g.add_edge(0, 1, 2);
  g.add_edge(1, 2);
  g.add_edge(2, 3, 3);
  CHECK(g.size() == 6);
  int total = 0;
  for (int u = 0; u < 4; ++u) {
    CHECK(g.multiplicity(u, u) == 0);
    for (int v = 0; v < 4; ++v) {
      CHECK(g.multiplicity(u, v) == g.multiplicity(v, u));
      total += g.multiplicity(u, v);
    }
  }
  CHECK(total / 2 == g.size());
  CHECK(g.degree(2) == 4);
  CHECK_FALSE(g.is_simple());
  CHECK_THROWS_AS(g.to_simple(), InvalidInput);
  CHECK_THROWS_AS(g.add_edge(1, 1), InvalidInput);
  CHECK_THROWS_AS(Multigraph::from_matrix({{0, 1}, {0, 0}}), InvalidInput);
}

TEST_CASE("graph6 fixed strings agree with the independent decoder") {
  CHECK(write_graph6(SimpleGraph(0)) == "?");
  CHECK(parse_graph6("?").order() == 0);
  const SimpleGraph d = parse_graph6("D?{");
  const auto m = oracle::decode_graph6("D?{");
  REQUIRE(m);
  CHECK(oracle::matrix(d) == *m);
  CHECK(d.edges() == std::vector<std::pair<int, int>>{{0, 4}, {1, 4}, {2, 4}, {3, 4}});
  CHECK(parse_graph6(">>graph6<<D?{\n") == d);
}

TEST_CASE("graph6 error kinds") {
  auto kind_of = [](const char* s) {
    try {
      parse_graph6(s);
    } catch (const Graph6Error& e) {
      return static_cast<int>(e.kind());
    }
    return -1;
  };
  CHECK(kind_of("") == static_cast<int>(Graph6Error::Kind::kMalformedHeader));
  CHECK(kind_of("D?") == static_cast<int>(Graph6Error::Kind::kTruncated));
  CHECK(kind_of("D?\x7f") == static_cast<int>(Graph6Error::Kind::kCharOutOfRange));
  CHECK(kind_of("D?{??") == static_cast<int>(Graph6Error::Kind::kTrailingData));
  CHECK(kind_of("~?AA") == static_cast<int>(Graph6Error::Kind::kTooLarge));
}

TEST_CASE("graph6 round trip against the independent decoder") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    const int n = static_cast<int>(rng() % 65);
    const SimpleGraph g = oracle::random_graph(n, 0.3, rng);
    const std::string s = write_graph6(g);
    CHECK(parse_graph6(s) == g);
    CHECK(write_graph6(parse_graph6(s)) == s);
    const auto m = oracle::decode_graph6(s);
    REQUIRE(m);
    CHECK(*m == oracle::matrix(g));
  }
}

TEST_CASE("connectivity examples") {
  const SimpleGraph p3 = SimpleGraph::from_edges(3, {{0, 1}, {1, 2}});
  CHECK(is_connected(p3));
  CHECK_FALSE(is_2_connected(p3));
  CHECK(is_2_connected(cycle(4)));
  CHECK(is_2_edge_connected(cycle(4)));
  SimpleGraph k33m = complete_bipartite(3, 3);
  k33m.remove_edge(0, 3);
  CHECK(is_2_connected(k33m) == oracle::two_connected(k33m));
  CHECK(is_2_connected(k33m));
  CHECK_FALSE(is_connected(SimpleGraph(0)));
  CHECK_FALSE(is_connected(SimpleGraph(2)));
}

TEST_CASE("2-connectivity matches the cutvertex scan on all graphs up to 6 vertices") {
  for (int n = 1; n <= 6; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (int mask = 0; mask < (1 << pairs); ++mask) {
      SimpleGraph g(n);
      int k = 0;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++k)
          if ((mask >> k) & 1) g.add_edge(u, v);
      REQUIRE(is_2_connected(g) == oracle::two_connected(g));
      REQUIRE(is_connected(g) == oracle::connected(oracle::matrix(g), oracle::all_vertices(n)));
    }
  }
}

TEST_CASE("essential 2-edge-connectivity") {
  CHECK(is_essentially_2_edge_connected(complete_bipartite(1, 4)));
  const SimpleGraph bowtie_bridge =
      SimpleGraph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 5}});
  CHECK_FALSE(is_essentially_2_edge_connected(bowtie_bridge));
  SimpleGraph c5p(6);
  for (int i = 0; i < 5; ++i) c5p.add_edge(i, (i + 1) % 5);
  c5p.add_edge(0, 5);
  CHECK(bridges(Multigraph::from_simple(c5p)).size() == 1);
  CHECK(is_essentially_2_edge_connected(c5p));
  CHECK_THROWS_AS(is_essentially_2_edge_connected(SimpleGraph(3)), InvalidInput);
  // Parallel copies are never bridges.
  const Multigraph dbl = Multigraph::from_edges(2, {{0, 1}, {0, 1}});
  CHECK(bridges(dbl).empty());
}

TEST_CASE("essentially 2-edge-connected implies a trivial side for every bridge") {
  std::mt19937_64 rng(5);
  int checked = 0;
  for (int i = 0; i < 400; ++i) {
    const SimpleGraph g = oracle::random_graph(3 + static_cast<int>(rng() % 6), 0.35, rng);
    if (!is_connected(g)) continue;
    const Multigraph m = Multigraph::from_simple(g);
    const bool ess = is_essentially_2_edge_connected(m);
    bool oracle_ok = true;
    for (EdgeId b : bridges(m)) {
      SimpleGraph cut = g;
      cut.remove_edge(m.edge(b).u, m.edge(b).v);
      // Side of u: vertices reachable from u in g - b.
      std::uint64_t side = std::uint64_t{1} << m.edge(b).u;
      for (bool grew = true; grew;) {
        grew = false;
        for (int v = 0; v < g.order(); ++v)
          if ((side >> v) & 1U)
            if ((cut.neighbors(v) & ~side) != 0) side |= cut.neighbors(v), grew = true;
      }
      const int a = std::popcount(side), c = g.order() - a;
      if (a > 1 && c > 1) oracle_ok = false;
    }
    CHECK(ess == oracle_ok);
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("triangle detection and edge degree") {
  CHECK(is_triangle_free(cycle(5)));
  CHECK_FALSE(is_triangle_free(cycle(3)));
  CHECK(is_triangle_free(petersen()));
  CHECK(is_triangle_free(petersen()) == oracle::triangle_free(petersen()));
  CHECK(edge_degree(cycle(5), 0, 1) == 2);
  const SimpleGraph p4 = SimpleGraph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(edge_degree(p4, 1, 2) == 2);
  const SimpleGraph k33 = complete_bipartite(3, 3);
  for (const auto& [u, v] : k33.edges()) CHECK(edge_degree(k33, u, v) == 4);
  const Multigraph m = Multigraph::from_edges(3, {{0, 1}, {0, 1}, {1, 2}});
  CHECK(edge_degree(m, m.first_edge(1, 2)) == 2);
  CHECK(edge_degree(m, m.first_edge(0, 1)) == 2);
}

TEST_CASE("edge degree sum identity on all graphs up to 7 vertices") {
  // For simple graphs: sum of ed(e) = sum of d(v)(d(v)-1). The triangle count
  // is computed alongside and cross-checked with a direct scan.
  for (int n = 1; n <= 7; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (long mask = 0; mask < (1L << pairs); ++mask) {
      SimpleGraph g(n);
      int k = 0;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++k)
          if ((mask >> k) & 1) g.add_edge(u, v);
      long direct = 0;
      const auto e = g.edges();
      for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = 0; j < e.size(); ++j)
          if (i != j && (e[i].first == e[j].first || e[i].first == e[j].second || e[i].second == e[j].first ||
                         e[i].second == e[j].second))
            ++direct;
      long lib = 0, degrees = 0;
      for (const auto& [u, v] : e) lib += edge_degree(g, u, v);
      for (int v = 0; v < n; ++v) degrees += static_cast<long>(g.degree(v)) * (g.degree(v) - 1);
      REQUIRE(lib == direct);
      REQUIRE(lib == degrees);
      int triangles = 0;
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
          for (int c = b + 1; c < n; ++c) triangles += g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c);
      REQUIRE(count_triangles(g) == triangles);
    }
  }
}

TEST_CASE("contraction examples") {
  const Multigraph c4 = Multigraph::from_simple(cycle(4));
  const auto r = contract(c4, VertexSet::of({0, 1}));
  CHECK(r.quotient == Multigraph::from_simple(cycle(3)));
  CHECK(r.contracted_vertex == 0);
  CHECK(r.vertex_map == std::vector<int>{0, 0, 1, 2});

  // K33 with parts {0,1,2}, {3,4,5}; contracting the 4-cycle 0 3 1 4 leaves
  // v_F joined to 2 twice (via 3 and 4) and to 5 twice (via 0 and 1).
  const Multigraph k33 = Multigraph::from_simple(complete_bipartite(3, 3));
  const auto q = contract(k33, VertexSet::of({0, 1, 3, 4}));
  CHECK(q.quotient.order() == 3);
  CHECK(q.quotient.size() == 5);
  const int vf = q.contracted_vertex, two = q.vertex_map[2], five = q.vertex_map[5];
  CHECK(q.quotient.multiplicity(vf, two) == 2);
  CHECK(q.quotient.multiplicity(vf, five) == 2);
  CHECK(q.quotient.multiplicity(two, five) == 1);
  for (EdgeId e = 0; e < q.quotient.size(); ++e) {
    const Edge& orig = k33.edge(q.edge_origin[e]);
    const Edge& now = q.quotient.edge(e);
    CHECK(std::minmax(q.vertex_map[orig.u], q.vertex_map[orig.v]) == std::minmax(now.u, now.v));
  }

  const auto all = contract(c4, c4.vertices());
  CHECK(all.quotient.order() == 1);
  CHECK(all.quotient.size() == 0);
  CHECK_THROWS_AS(contract(c4, VertexSet::of({0, 2})), InvalidInput);
  CHECK_THROWS_AS(contract(c4, VertexSet()), InvalidInput);
}

TEST_CASE("contraction preserves the edge count") {
  std::mt19937_64 rng(7);
  int done = 0;
  for (int i = 0; i < 500; ++i) {
    const int n = 2 + static_cast<int>(rng() % 8);
    const Multigraph g = Multigraph::from_simple(oracle::random_graph(n, 0.5, rng));
    VertexSet f(rng() & oracle::all_vertices(n));
    if (f.empty() || !is_connected_within(g, f)) continue;
    const auto r = contract(g, f);
    CHECK(g.size() == r.quotient.size() + g.induced(f).size());
    CHECK(r.quotient.order() == n - f.size() + 1);
    for (int v : f.members()) CHECK(r.vertex_map[v] == r.contracted_vertex);
    ++done;
  }
  CHECK(done > 100);
}

TEST_CASE("canonical form examples") {
  const SimpleGraph c6 = cycle(6);
  const std::vector<int> perm{3, 5, 1, 0, 4, 2};
  CHECK(canonical_form(c6) == canonical_form(c6.relabeled(perm)));
  CHECK(canonical_form(c6) != canonical_form(complete_bipartite(3, 3)));
  CHECK(oracle::brute_canonical(oracle::matrix(c6)) != oracle::brute_canonical(oracle::matrix(complete_bipartite(3, 3))));
  CHECK(are_isomorphic(petersen(), petersen().relabeled(std::vector<int>{9, 8, 7, 6, 5, 4, 3, 2, 1, 0})));
  CHECK_THROWS_AS(canonical_form(SimpleGraph(17)), CapExceeded);
}

TEST_CASE("canonical form decides isomorphism like the permutation oracle for n <= 6") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 600; ++i) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const SimpleGraph a = oracle::random_graph(n, 0.5, rng);
    const SimpleGraph b = oracle::random_graph(n, 0.5, rng);
    const bool brute = oracle::brute_canonical(oracle::matrix(a)) == oracle::brute_canonical(oracle::matrix(b));
    CHECK((canonical_form(a) == canonical_form(b)) == brute);
    CHECK(are_isomorphic(a, b) == brute);
    if (brute) CHECK(invariant_hash(a) == invariant_hash(b));
  }
}

TEST_CASE("canonical form is invariant under random relabelling, n <= 8") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 500; ++i) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const SimpleGraph g = oracle::random_graph(n, 0.45, rng);
    const SimpleGraph h = oracle::permuted(g, oracle::random_permutation(n, rng));
    CHECK(canonical_form(g) == canonical_form(h));
    CHECK(invariant_hash(g) == invariant_hash(h));
  }
}

TEST_CASE("coloured multigraph canonical form") {
  const Multigraph a = Multigraph::from_edges(3, {{0, 1}, {0, 1}, {1, 2}});
  const Multigraph b = Multigraph::from_edges(3, {{0, 1}, {1, 2}, {1, 2}});
  CHECK(canonical_form(a) == canonical_form(b));
  const std::vector<int> marks{1, 0, 0};
  CHECK(canonical_form(a, marks) != canonical_form(b, marks));
  const Multigraph c = Multigraph::from_edges(3, {{0, 1}, {1, 2}});
  CHECK_FALSE(are_isomorphic(a, c));
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    const int n = 2 + static_cast<int>(rng() % 5);
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) m[u][v] = m[v][u] = static_cast<int>(rng() % 3);
    std::vector<int> colors(n);
    for (int& c2 : colors) c2 = static_cast<int>(rng() % 2);
    const auto p = oracle::random_permutation(n, rng);
    std::vector<std::vector<int>> pm(n, std::vector<int>(n, 0));
    std::vector<int> pc(n);
    for (int u = 0; u < n; ++u) {
      pc[p[u]] = colors[u];
      for (int v = 0; v < n; ++v) pm[p[u]][p[v]] = m[u][v];
    }
    CHECK(canonical_form(Multigraph::from_matrix(m), colors) == canonical_form(Multigraph::from_matrix(pm), pc));
  }
}
