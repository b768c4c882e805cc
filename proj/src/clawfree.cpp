#include "clawham/clawfree.hpp"

#include <algorithm>
#include <random>

#include "clawham/errors.hpp"
#include "clawham/graph_ops.hpp"

namespace clawham {

namespace {

constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

std::vector<int> members(std::uint64_t mask) { return VertexSet(mask).members(); }

}  // namespace

std::vector<ClawOccurrence> find_claws(const SimpleGraph& g) {
  std::vector<ClawOccurrence> out;
  for (int c = 0; c < g.order(); ++c) {
    const auto nb = members(g.neighbors(c));
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (g.adjacent(nb[i], nb[j])) continue;
        for (std::size_t k = j + 1; k < nb.size(); ++k)
          if (!g.adjacent(nb[i], nb[k]) && !g.adjacent(nb[j], nb[k]))
            out.push_back({c, {nb[i], nb[j], nb[k]}});
      }
  }
  return out;
}

bool is_claw_free(const SimpleGraph& g) {
  for (int c = 0; c < g.order(); ++c) {
    const std::uint64_t nb = g.neighbors(c);
    for (std::uint64_t a = nb; a != 0; a &= a - 1) {
      const int x = std::countr_zero(a);
      // Non-neighbours of x inside N(c) that come after x.
      std::uint64_t rest = nb & ~g.neighbors(x) & ~(bit(x + 1) - 1);
      for (std::uint64_t b = rest; b != 0; b &= b - 1) {
        const int y = std::countr_zero(b);
        if (rest & ~g.neighbors(y) & ~(bit(y + 1) - 1)) return false;
      }
    }
  }
  return true;
}

std::vector<NetOccurrence> find_nets(const SimpleGraph& g) {
  std::vector<NetOccurrence> out;
  const int n = g.order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (!g.adjacent(a, b)) continue;
      for (int c = b + 1; c < n; ++c) {
        if (!g.adjacent(a, c) || !g.adjacent(b, c)) continue;
        const std::uint64_t tri = bit(a) | bit(b) | bit(c);
        const std::uint64_t na = g.neighbors(a), nb = g.neighbors(b), nc = g.neighbors(c);
        const std::uint64_t ya = na & ~nb & ~nc & ~tri;
        const std::uint64_t yb = nb & ~na & ~nc & ~tri;
        const std::uint64_t yc = nc & ~na & ~nb & ~tri;
        for (std::uint64_t p = ya; p != 0; p &= p - 1) {
          const int y1 = std::countr_zero(p);
          for (std::uint64_t q = yb & ~g.neighbors(y1); q != 0; q &= q - 1) {
            const int y2 = std::countr_zero(q);
            for (std::uint64_t r = yc & ~g.neighbors(y1) & ~g.neighbors(y2); r != 0; r &= r - 1)
              out.push_back({{a, b, c}, {y1, y2, std::countr_zero(r)}});
          }
        }
      }
    }
  return out;
}

bool net_condition_holds(const SimpleGraph& g) {
  const int n = g.order();
  std::uint64_t low = 0;
  for (int v = 0; v < n; ++v)
    if (3 * g.degree(v) < n - 2) low |= bit(v);
  if (low == 0) return true;
  for (const auto& net : find_nets(g))
    for (int y : net.ends)
      if (low & bit(y)) return false;
  return true;
}

bool is_closure_eligible(const SimpleGraph& g, int v) {
  const std::uint64_t nb = g.neighbors(v);
  const int k = std::popcount(nb);
  if (k < 2) return false;
  bool complete = true;
  for (std::uint64_t a = nb; a != 0 && complete; a &= a - 1) {
    const int x = std::countr_zero(a);
    if ((g.neighbors(x) & nb) != (nb & ~bit(x))) complete = false;
  }
  if (complete) return false;
  return is_connected_within(g, VertexSet(nb));
}

namespace {

template <class Pick>
SimpleGraph closure_impl(const SimpleGraph& g, Pick&& pick) {
  if (!is_claw_free(g)) throw InvalidInput("closure: graph contains an induced claw");
  SimpleGraph h = g;
  std::vector<int> eligible;
  while (true) {
    eligible.clear();
    for (int v = 0; v < h.order(); ++v)
      if (is_closure_eligible(h, v)) eligible.push_back(v);
    if (eligible.empty()) return h;
    const int v = pick(eligible);
    const auto nb = members(h.neighbors(v));
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) h.add_edge(nb[i], nb[j]);
  }
}

}  // namespace

SimpleGraph closure(const SimpleGraph& g) {
  return closure_impl(g, [](const std::vector<int>& eligible) { return eligible.front(); });
}

SimpleGraph closure_with_random_schedule(const SimpleGraph& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return closure_impl(g, [&](const std::vector<int>& eligible) {
    std::uniform_int_distribution<std::size_t> pick(0, eligible.size() - 1);
    return eligible[pick(rng)];
  });
}

std::vector<SubdividedClawOccurrence> find_subdivided_claws(const SimpleGraph& h) {
  if (!is_triangle_free(h)) throw InvalidInput("find_subdivided_claws: graph has a triangle");
  std::vector<SubdividedClawOccurrence> out;
  for (int hub = 0; hub < h.order(); ++hub) {
    const auto spokes = members(h.neighbors(hub));
    for (std::size_t i = 0; i < spokes.size(); ++i)
      for (std::size_t j = i + 1; j < spokes.size(); ++j)
        for (std::size_t k = j + 1; k < spokes.size(); ++k) {
          const std::array<int, 3> s{spokes[i], spokes[j], spokes[k]};
          const std::uint64_t core = bit(hub) | bit(s[0]) | bit(s[1]) | bit(s[2]);
          // Tip of leg i: a neighbour of s[i] outside the core, not adjacent
          // to the hub or another spoke (triangle-freeness already rules out
          // spoke-spoke edges).
          std::array<std::uint64_t, 3> tips{};
          for (int leg = 0; leg < 3; ++leg) {
            std::uint64_t t = h.neighbors(s[leg]) & ~core & ~h.neighbors(hub);
            for (int other = 0; other < 3; ++other)
              if (other != leg) t &= ~h.neighbors(s[other]);
            tips[leg] = t;
          }
          for (std::uint64_t a = tips[0]; a != 0; a &= a - 1) {
            const int t0 = std::countr_zero(a);
            for (std::uint64_t b = tips[1] & ~h.neighbors(t0) & ~bit(t0); b != 0; b &= b - 1) {
              const int t1 = std::countr_zero(b);
              for (std::uint64_t c = tips[2] & ~h.neighbors(t0) & ~h.neighbors(t1) & ~bit(t0) & ~bit(t1); c != 0;
                   c &= c - 1)
                out.push_back({hub, s, {t0, t1, std::countr_zero(c)}});
            }
          }
        }
  }
  return out;
}

EdgeSet heavy_edges(const SimpleGraph& h, int slack) {
  const auto edges = h.edges();
  const int m = static_cast<int>(edges.size());
  EdgeSet heavy(edges.size());
  for (int e = 0; e < m; ++e) {
    const auto [u, v] = edges[e];
    if (3 * edge_degree(h, u, v) >= m - 2 + 3 * slack) heavy.insert(e);
  }
  return heavy;
}

std::optional<std::vector<EdgeId>> find_heavy_matching(const SimpleGraph& h, int k, int slack) {
  const auto edges = h.edges();
  const auto heavy = heavy_edges(h, slack).members();
  std::vector<EdgeId> chosen;
  auto search = [&](auto&& self, std::size_t from, std::uint64_t used) -> bool {
    if (static_cast<int>(chosen.size()) == k) return true;
    if (static_cast<int>(heavy.size() - from) < k - static_cast<int>(chosen.size())) return false;
    for (std::size_t i = from; i < heavy.size(); ++i) {
      const auto [u, v] = edges[heavy[i]];
      if (used & (bit(u) | bit(v))) continue;
      chosen.push_back(heavy[i]);
      if (self(self, i + 1, used | bit(u) | bit(v))) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (k <= 0) return std::vector<EdgeId>{};
  if (search(search, 0, 0)) return chosen;
  return std::nullopt;
}

}  // namespace clawham
