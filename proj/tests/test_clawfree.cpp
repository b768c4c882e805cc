#include <doctest.h>

#include <random>

#include "clawham/canon.hpp"
#include "clawham/clawfree.hpp"
#include "clawham/enumeration.hpp"
#include "clawham/errors.hpp"
#include "clawham/graph_ops.hpp"
#include "clawham/trails.hpp"
#include "oracles.hpp"

using namespace clawham;

namespace {

SimpleGraph cycle(int n) {
  SimpleGraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

SimpleGraph net() { return SimpleGraph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}}); }

SimpleGraph spider() { return SimpleGraph::from_edges(7, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 6}}); }

SimpleGraph complete_bipartite(int a, int b) {
  SimpleGraph g(a + b);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
  return g;
}

std::vector<SimpleGraph> all_graphs(int n) { return enumerate(FamilySpec::exactly(n), ExecutionPolicy::kSerial); }

std::vector<SimpleGraph> claw_free_sample(int count, std::uint64_t seed) {
  std::vector<SimpleGraph> pool;
  for (int n = 6; n <= 10; ++n) {
    FamilySpec s = FamilySpec::exactly(n);
    s.claw_free = true;
    for (auto& g : enumerate(s)) pool.push_back(std::move(g));
  }
  std::mt19937_64 rng(seed);
  std::vector<SimpleGraph> out;
  for (int i = 0; i < count; ++i) {
    const SimpleGraph& g = pool[rng() % pool.size()];
    out.push_back(oracle::permuted(g, oracle::random_permutation(g.order(), rng)));
  }
  return out;
}

bool eligible_by_definition(const SimpleGraph& g, int v) {
  const std::uint64_t nb = g.neighbors(v);
  if (nb == 0) return false;
  const auto m = oracle::matrix(g);
  if (!oracle::connected(m, nb)) return false;
  for (int a = 0; a < g.order(); ++a)
    for (int b = a + 1; b < g.order(); ++b)
      if (((nb >> a) & 1U) && ((nb >> b) & 1U) && !g.adjacent(a, b)) return true;
  return false;
}

}  // namespace

TEST_CASE("claw examples") {
  const auto claws = find_claws(complete_bipartite(1, 3));
  REQUIRE(claws.size() == 1);
  CHECK(claws[0].center == 0);
  CHECK(claws[0].leaves == std::array<int, 3>{1, 2, 3});
  CHECK(find_claws(cycle(6)).empty());
  CHECK(is_claw_free(cycle(6)));
  CHECK(find_claws(complete_bipartite(1, 4)).size() == 4);
}

TEST_CASE("line graphs of random triangle-free graphs have no claw") {
  std::mt19937_64 rng(23);
  int done = 0;
  while (done < 200) {
    const SimpleGraph h = oracle::random_graph(4 + static_cast<int>(rng() % 6), 0.4, rng);
    if (!is_triangle_free(h) || h.size() == 0 || h.size() > 12) continue;
    const SimpleGraph l = oracle::line_graph(h);
    CHECK(oracle::count_claws(l) == 0);
    CHECK(find_claws(l).empty());
    ++done;
  }
}

TEST_CASE("net examples and condition") {
  const auto nets = find_nets(net());
  REQUIRE(nets.size() == 1);
  CHECK(nets[0].triangle == std::array<int, 3>{0, 1, 2});
  CHECK(nets[0].ends == std::array<int, 3>{3, 4, 5});
  CHECK(find_nets(cycle(7)).empty());
  // Endvertex degree 1 and n = 6: 3 < 4.
  CHECK_FALSE(net_condition_holds(net()));
  CHECK(net_condition_holds(cycle(7)));
}

TEST_CASE("claw and net scans match the subset oracle on all graphs up to 8 vertices") {
  for (int n = 4; n <= 8; ++n)
    for (const SimpleGraph& g : all_graphs(n)) {
      REQUIRE(static_cast<long>(find_claws(g).size()) == oracle::count_claws(g));
      REQUIRE(is_claw_free(g) == oracle::claw_free(g));
      const auto nets = find_nets(g);
      REQUIRE(static_cast<long>(nets.size()) == oracle::count_nets(g));
      bool condition = true;
      for (const auto& vs : oracle::subsets(n, 6)) {
        SimpleGraph sub = g.induced(VertexSet::of({vs[0], vs[1], vs[2], vs[3], vs[4], vs[5]}));
        if (oracle::count_nets(sub) != 1) continue;
        for (int i = 0; i < 6; ++i) {
          const auto d = oracle::induced_degrees(g, vs);
          if (d[i] == 1 && 3 * g.degree(vs[i]) < n - 2) condition = false;
        }
      }
      REQUIRE(net_condition_holds(g) == condition);
    }
}

TEST_CASE("net scan matches the oracle on random graphs up to 9 vertices") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 300; ++i) {
    const SimpleGraph g = oracle::random_graph(6 + static_cast<int>(rng() % 4), 0.45, rng);
    CHECK(static_cast<long>(find_nets(g).size()) == oracle::count_nets(g));
  }
}

TEST_CASE("occurrences are induced and canonically ordered") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 200; ++i) {
    const SimpleGraph g = oracle::random_graph(8, 0.4, rng);
    for (const auto& c : find_claws(g)) {
      CHECK(std::is_sorted(c.leaves.begin(), c.leaves.end()));
      for (int a : c.leaves) CHECK(g.adjacent(c.center, a));
      CHECK_FALSE(g.adjacent(c.leaves[0], c.leaves[1]));
      CHECK_FALSE(g.adjacent(c.leaves[0], c.leaves[2]));
      CHECK_FALSE(g.adjacent(c.leaves[1], c.leaves[2]));
    }
    for (const auto& s : find_nets(g)) {
      CHECK(std::is_sorted(s.triangle.begin(), s.triangle.end()));
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
          if (a != b) CHECK(g.adjacent(s.triangle[a], s.triangle[b]));
          CHECK(g.adjacent(s.triangle[a], s.ends[b]) == (a == b));
          if (a != b) CHECK_FALSE(g.adjacent(s.ends[a], s.ends[b]));
        }
    }
  }
}

TEST_CASE("subdivided claws") {
  const auto sc = find_subdivided_claws(spider());
  REQUIRE(sc.size() == 1);
  CHECK(sc[0].hub == 0);
  CHECK(sc[0].spokes == std::array<int, 3>{1, 2, 3});
  CHECK(sc[0].tips == std::array<int, 3>{4, 5, 6});
  CHECK(find_subdivided_claws(cycle(7)).empty());
  CHECK_THROWS_AS(find_subdivided_claws(cycle(3)), InvalidInput);

  std::mt19937_64 rng(37);
  for (int i = 0; i < 300; ++i) {
    // Random labelled tree by attaching each vertex to an earlier one.
    const int n = 7 + static_cast<int>(rng() % 4);
    SimpleGraph t(n);
    for (int v = 1; v < n; ++v) t.add_edge(v, static_cast<int>(rng() % v));
    const SimpleGraph p = oracle::permuted(t, oracle::random_permutation(n, rng));
    CHECK(static_cast<long>(find_subdivided_claws(p).size()) == oracle::count_subdivided_claws(p));
  }
  for (int i = 0; i < 100; ++i) {
    const SimpleGraph g = oracle::random_graph(9, 0.3, rng);
    if (!is_triangle_free(g)) continue;
    CHECK(static_cast<long>(find_subdivided_claws(g).size()) == oracle::count_subdivided_claws(g));
  }
}

TEST_CASE("closure examples") {
  CHECK(closure(cycle(5)) == cycle(5));
  const SimpleGraph k3 = cycle(3);
  CHECK(closure(k3) == k3);
  CHECK_THROWS_AS(closure(complete_bipartite(1, 3)), InvalidInput);
  // A 4-cycle with a chord: both chord ends have a connected, non-complete
  // neighbourhood, so the closure is K4.
  const SimpleGraph diamond = SimpleGraph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}});
  CHECK(closure(diamond).size() == 6);
  // Line graphs of triangle-free graphs without eligible vertices are fixed.
  const SimpleGraph l = oracle::line_graph(cycle(6));
  CHECK(closure(l) == l);
}

TEST_CASE("closure eligibility follows the definition") {
  for (const SimpleGraph& g : claw_free_sample(200, 41))
    for (int v = 0; v < g.order(); ++v) CHECK(is_closure_eligible(g, v) == eligible_by_definition(g, v));
}

TEST_CASE("closure is idempotent, monotone and schedule independent") {
  std::uint64_t seed = 1;
  for (const SimpleGraph& g : claw_free_sample(500, 43)) {
    const SimpleGraph c = closure(g);
    CHECK(c.order() == g.order());
    CHECK(closure(c) == c);
    for (const auto& [u, v] : g.edges()) CHECK(c.adjacent(u, v));
    for (int v = 0; v < c.order(); ++v) CHECK_FALSE(eligible_by_definition(c, v));
    CHECK(closure_with_random_schedule(g, seed++) == c);
    CHECK(closure_with_random_schedule(g, seed++) == c);
    CHECK(is_claw_free(c));
  }
}

TEST_CASE("closure preserves hamiltonicity on 2-connected claw-free graphs up to 8 vertices") {
  for (int n = 3; n <= 8; ++n) {
    FamilySpec s = FamilySpec::exactly(n);
    s.claw_free = true;
    s.two_connected = true;
    for (const SimpleGraph& g : enumerate(s)) REQUIRE(oracle::hamiltonian(g) == oracle::hamiltonian(closure(g)));
  }
}

TEST_CASE("heavy edges and matchings") {
  const SimpleGraph c5 = cycle(5);
  CHECK(heavy_edges(c5).size() == 5);
  CHECK(find_heavy_matching(c5, 2).has_value());
  CHECK_FALSE(find_heavy_matching(c5, 3).has_value());
  const SimpleGraph k33 = complete_bipartite(3, 3);
  CHECK(heavy_edges(k33).size() == 9);
  const auto m = find_heavy_matching(k33, 3);
  REQUIRE(m);
  std::uint64_t seen = 0;
  const auto e = k33.edges();
  for (EdgeId id : *m) {
    const std::uint64_t ends = (std::uint64_t{1} << e[id].first) | (std::uint64_t{1} << e[id].second);
    CHECK((seen & ends) == 0);
    seen |= ends;
  }
  CHECK_FALSE(find_heavy_matching(complete_bipartite(1, 5), 2).has_value());
  // Slack raises the threshold: C5 edges have 3 ed = 6, |E| - 2 = 3.
  CHECK(heavy_edges(c5, 1).size() == 5);
  CHECK(heavy_edges(c5, 2).size() == 0);
}

TEST_CASE("heavy matching search matches subset enumeration") {
  std::mt19937_64 rng(47);
  for (int i = 0; i < 200; ++i) {
    const SimpleGraph h = oracle::random_graph(8, 0.35, rng);
    if (!is_triangle_free(h) || h.size() > 14) continue;
    const auto e = h.edges();
    const int m = h.size();
    std::vector<bool> heavy(m);
    for (int j = 0; j < m; ++j)
      heavy[j] = 3 * (h.degree(e[j].first) + h.degree(e[j].second) - 2) >= m - 2;
    for (int j = 0; j < m; ++j) CHECK(heavy_edges(h).contains(j) == heavy[j]);
    for (int k = 1; k <= 4; ++k) {
      bool found = false;
      for (std::uint32_t s = 0; s < (1U << m) && !found; ++s) {
        if (std::popcount(s) != k) continue;
        std::uint64_t used = 0;
        bool ok = true;
        for (int j = 0; j < m && ok; ++j)
          if ((s >> j) & 1U) {
            const std::uint64_t ends = (std::uint64_t{1} << e[j].first) | (std::uint64_t{1} << e[j].second);
            ok = heavy[j] && (used & ends) == 0;
            used |= ends;
          }
        found = ok;
      }
      CHECK(find_heavy_matching(h, k).has_value() == found);
    }
  }
}
