#include "clawham/enumeration.hpp"

#include <set>
#include <sstream>
#include <unordered_set>

#include "clawham/canon.hpp"
#include "clawham/clawfree.hpp"
#include "clawham/errors.hpp"
#include "clawham/graph6.hpp"
#include "clawham/graph_ops.hpp"

namespace clawham {

namespace {

constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

// Induced claw using the vertex v.
bool has_claw_through(const SimpleGraph& g, int v) {
  const std::uint64_t nv = g.neighbors(v);
  // v as the centre.
  for (std::uint64_t a = nv; a != 0; a &= a - 1) {
    const int x = std::countr_zero(a);
    const std::uint64_t rest = nv & ~g.neighbors(x) & ~(bit(x + 1) - 1);
    for (std::uint64_t b = rest; b != 0; b &= b - 1) {
      const int y = std::countr_zero(b);
      if (rest & ~g.neighbors(y) & ~(bit(y + 1) - 1)) return true;
    }
  }
  // v as a leaf of centre c; the other leaves avoid N[v].
  for (std::uint64_t a = nv; a != 0; a &= a - 1) {
    const int c = std::countr_zero(a);
    const std::uint64_t others = g.neighbors(c) & ~nv & ~bit(v);
    for (std::uint64_t b = others; b != 0; b &= b - 1) {
      const int x = std::countr_zero(b);
      if (others & ~g.neighbors(x) & ~bit(x)) return true;
    }
  }
  return false;
}

struct Node {
  SimpleGraph graph;
  std::string code;
};

std::vector<Node> children_of(const Node& parent, const FamilySpec& spec) {
  const SimpleGraph& p = parent.graph;
  const int k = p.order();
  const int v = k;
  const int parent_edges = p.size();
  std::vector<Node> out;
  std::unordered_set<std::string> seen;
  for (std::uint64_t s = 0; s < bit(k); ++s) {
    if (spec.max_edges >= 0 && parent_edges + std::popcount(s) > spec.max_edges) continue;
    if (spec.triangle_free) {
      bool ok = true;
      for (std::uint64_t r = s; r != 0 && ok; r &= r - 1)
        if (p.neighbors(std::countr_zero(r)) & s) ok = false;
      if (!ok) continue;
    }
    SimpleGraph c(k + 1);
    for (const auto& [a, b] : p.edges()) c.add_edge(a, b);
    for (std::uint64_t r = s; r != 0; r &= r - 1) c.add_edge(std::countr_zero(r), v);
    if (spec.claw_free && has_claw_through(c, v)) continue;

    const CanonicalLabeling lab = canonical_labeling(c);
    const int last = lab.order.back();
    if (last != v) {
      if (c.degree(last) != c.degree(v)) continue;
      if (canonical_form(c.induced(c.vertices() - VertexSet::of({last}))) != parent.code) continue;
    }
    SimpleGraph canon = c.relabeled(lab.position);
    std::string code = write_graph6(canon);
    if (!seen.insert(code).second) continue;
    out.push_back({std::move(canon), std::move(code)});
  }
  return out;
}

}  // namespace

bool FamilySpec::accepts(const SimpleGraph& g) const {
  if (g.order() < n_min || g.order() > n_max) return false;
  if (max_edges >= 0 && g.size() > max_edges) return false;
  if (triangle_free && !is_triangle_free(g)) return false;
  if (claw_free && !is_claw_free(g)) return false;
  if (min_degree > 0 && g.min_degree() < min_degree) return false;
  if (connected && !is_connected(g)) return false;
  if (two_connected && !is_2_connected(g)) return false;
  if (essentially_2_edge_connected && (!is_connected(g) || !is_essentially_2_edge_connected(g))) return false;
  return true;
}

std::string FamilySpec::describe() const {
  std::ostringstream os;
  os << "n=" << n_min;
  if (n_max != n_min) os << ".." << n_max;
  if (connected) os << " connected";
  if (two_connected) os << " 2-connected";
  if (essentially_2_edge_connected) os << " essentially-2-edge-connected";
  if (triangle_free) os << " triangle-free";
  if (claw_free) os << " claw-free";
  if (min_degree > 0) os << " min-degree>=" << min_degree;
  if (max_edges >= 0) os << " max-edges<=" << max_edges;
  return os.str();
}

std::vector<SimpleGraph> enumerate(const FamilySpec& spec, ExecutionPolicy policy) {
  if (spec.n_min < 1 || spec.n_max < spec.n_min) throw InvalidInput("enumerate: bad order range");
  if (spec.n_max > kMaxEnumerationOrder) throw CapExceeded("enumerate: order above 12");
  std::vector<SimpleGraph> out;
  std::vector<Node> level{{SimpleGraph(1), write_graph6(SimpleGraph(1))}};
  for (int n = 1;; ++n) {
    if (n >= spec.n_min)
      for (const Node& node : level)
        if (spec.accepts(node.graph)) out.push_back(node.graph);
    if (n == spec.n_max) break;
    auto groups = indexed_map<std::vector<Node>>(
        level.size(), [&](std::size_t i) { return children_of(level[i], spec); }, policy);
    std::vector<Node> next;
    for (auto& g : groups)
      for (auto& node : g) next.push_back(std::move(node));
    level = std::move(next);
  }
  return out;
}

std::vector<Lemma5Instance> enumerate_lemma5_instances() {
  // Non-adjacent pairs of the 5-cycle.
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 2; b < 5; ++b)
      if (!(a == 0 && b == 4)) pairs.emplace_back(a, b);
  const std::vector<int> colors{0, 0, 0, 0, 0, 1, 1};
  std::set<std::string> seen;
  std::vector<Lemma5Instance> out;
  for (const auto& p1 : pairs)
    for (const auto& p2 : pairs)
      for (int joined = 0; joined < 2; ++joined) {
        const bool disjoint = p1.first != p2.first && p1.first != p2.second && p1.second != p2.first &&
                              p1.second != p2.second;
        if (joined && !disjoint) continue;  // w1 w2 u would be a triangle
        Lemma5Instance inst;
        inst.graph = SimpleGraph::from_edges(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
        inst.graph.add_edge(5, p1.first);
        inst.graph.add_edge(5, p1.second);
        inst.graph.add_edge(6, p2.first);
        inst.graph.add_edge(6, p2.second);
        if (joined) inst.graph.add_edge(5, 6);
        inst.w1w2 = joined != 0;
        if (seen.insert(canonical_form(Multigraph::from_simple(inst.graph), colors)).second)
          out.push_back(std::move(inst));
      }
  return out;
}

namespace {

struct Shape {
  int touched;
  std::vector<std::pair<int, int>> edges;  // R-local indices, one entry per copy
};

// Types of touched vertices are ordered so that each orbit of the shape's
// symmetry group is visited once.
bool touched_order_ok(const Shape& shape, const std::vector<int>& t) {
  switch (shape.touched) {
    case 2:
      return t[0] <= t[1];
    case 3:
      return t[0] <= t[2];
    case 4:
      return t[0] <= t[1] && t[2] <= t[3] && std::make_pair(t[0], t[1]) <= std::make_pair(t[2], t[3]);
    default:
      return true;
  }
}

bool lemma6_hypothesis(const Multigraph& g) {
  if (!is_connected(g)) return false;
  if (g.degree(0) < 2 || g.degree(1) < 2) return false;
  return is_essentially_2_edge_connected(g);
}

}  // namespace

std::vector<Lemma6Instance> enumerate_lemma6_instances(int max_n, int max_multiplicity) {
  if (max_n > 9) throw CapExceeded("enumerate_lemma6_instances: max_n above 9");
  if (max_multiplicity < 1 || max_multiplicity > 3)
    throw InvalidInput("enumerate_lemma6_instances: multiplicity must be 1..3");
  const int m = max_multiplicity;
  const int types = (m + 1) * (m + 1);
  std::vector<Lemma6Instance> out;
  for (int n = 2; n <= max_n; ++n) {
    const int r = n - 2;
    std::vector<Shape> shapes{{0, {}}};
    if (r >= 2) shapes.push_back({2, {{0, 1}}});
    if (r >= 2 && m >= 2) shapes.push_back({2, {{0, 1}, {0, 1}}});
    if (r >= 3) shapes.push_back({3, {{0, 1}, {1, 2}}});
    if (r >= 4) shapes.push_back({4, {{0, 1}, {2, 3}}});
    std::vector<int> colors(n, 0);
    colors[0] = colors[1] = 1;
    std::set<std::string> seen;
    for (const Shape& shape : shapes) {
      const int untouched = r - shape.touched;
      std::vector<int> t(shape.touched, 0);
      // Odometer over touched types.
      while (true) {
        if (touched_order_ok(shape, t)) {
          std::vector<int> u(untouched, 1);
          while (true) {
            for (int xy = 1; xy <= m; ++xy) {
              Multigraph g(n);
              g.add_edge(0, 1, xy);
              for (const auto& [a, b] : shape.edges) g.add_edge(2 + a, 2 + b);
              auto attach = [&](int v, int type) {
                const int mx = type / (m + 1), my = type % (m + 1);
                if (mx > 0) g.add_edge(0, v, mx);
                if (my > 0) g.add_edge(1, v, my);
              };
              for (int i = 0; i < shape.touched; ++i) attach(2 + i, t[i]);
              for (int i = 0; i < untouched; ++i) attach(2 + shape.touched + i, u[i]);
              if (!lemma6_hypothesis(g)) continue;
              if (seen.insert(canonical_form(g, colors)).second) out.push_back({std::move(g), 0, 1});
            }
            // Next nondecreasing sequence over types 1..types-1.
            int i = untouched - 1;
            while (i >= 0 && u[i] == types - 1) --i;
            if (i < 0) break;
            ++u[i];
            for (int j = i + 1; j < untouched; ++j) u[j] = u[i];
          }
        }
        int i = shape.touched - 1;
        while (i >= 0 && t[i] == types - 1) t[i--] = 0;
        if (i < 0) break;
        ++t[i];
      }
    }
  }
  return out;
}

}  // namespace clawham
