#include "clawham/canon.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <cstring>
#include <numeric>

#include "clawham/errors.hpp"
#include "clawham/graph6.hpp"

namespace clawham {

namespace {

constexpr int kN = kMaxCanonicalOrder;
constexpr int kCodeBytes = kN * (kN - 1) / 2;
constexpr int kNoJump = INT_MAX;

struct Matrix {
  int n = 0;
  bool weighted = false;
  std::array<std::uint32_t, kN> rows{};
  std::array<std::uint8_t, kN * kN> w{};
  std::array<int, kN> color{};

  int weight(int u, int v) const { return w[u * kN + v]; }
};

using Labels = std::array<std::uint8_t, kN>;
using Code = std::array<std::uint8_t, kCodeBytes>;

// Ordered partition of positions 0..n-1. Bit p of `starts` marks the first
// position of a cell; bit n is a sentinel.
struct Partition {
  Labels lab{};
  std::uint32_t starts = 0;
  int n = 0;

  int end(int p) const { return std::countr_zero(starts & ~((2U << p) - 1)); }
  bool discrete() const { return std::popcount(starts) == n + 1; }
};

void refine(const Matrix& m, Partition& p, std::uint32_t active) {
  std::array<int, kN> count{};
  while (active != 0 && !p.discrete()) {
    const int s = std::countr_zero(active);
    active &= active - 1;
    const int e = p.end(s);
    std::uint32_t splitter = 0;
    for (int i = s; i < e; ++i) splitter |= 1U << p.lab[i];

    const std::uint32_t snapshot = p.starts & ~(1U << p.n);
    for (std::uint32_t cs = snapshot; cs != 0; cs &= cs - 1) {
      const int c = std::countr_zero(cs);
      const int ce = p.end(c);
      if (ce - c < 2) continue;
      bool differ = false;
      for (int i = c; i < ce; ++i) {
        const int x = p.lab[i];
        int k = 0;
        if (!m.weighted) {
          k = std::popcount(m.rows[x] & splitter);
        } else {
          for (std::uint32_t b = splitter; b != 0; b &= b - 1) k += m.weight(x, std::countr_zero(b));
        }
        count[i] = k;
        if (k != count[c]) differ = true;
      }
      if (!differ) continue;
      // Stable insertion sort of the cell by count.
      for (int i = c + 1; i < ce; ++i) {
        const int key = count[i];
        const auto v = p.lab[i];
        int j = i - 1;
        while (j >= c && count[j] > key) {
          count[j + 1] = count[j];
          p.lab[j + 1] = p.lab[j];
          --j;
        }
        count[j + 1] = key;
        p.lab[j + 1] = v;
      }
      active |= 1U << c;
      for (int i = c + 1; i < ce; ++i)
        if (count[i] != count[i - 1]) {
          p.starts |= 1U << i;
          active |= 1U << i;
        }
    }
  }
}

class Searcher {
 public:
  explicit Searcher(const Matrix& m) : m_(m), code_len_(m.n * (m.n - 1) / 2) {}

  Labels run() {
    Partition p;
    p.n = m_.n;
    std::iota(p.lab.begin(), p.lab.begin() + m_.n, 0);
    std::stable_sort(p.lab.begin(), p.lab.begin() + m_.n,
                     [&](int a, int b) { return m_.color[a] < m_.color[b]; });
    p.starts = 1U << m_.n;
    std::uint32_t active = 0;
    for (int i = 0; i < m_.n; ++i)
      if (i == 0 || m_.color[p.lab[i]] != m_.color[p.lab[i - 1]]) {
        p.starts |= 1U << i;
        active |= 1U << i;
      }
    if (m_.n > 0) {
      refine(m_, p, active);
      dfs(p, 0);
    }
    return best_lab_;
  }

 private:
  int compare(const Code& a, const Code& b) const { return std::memcmp(a.data(), b.data(), code_len_); }

  Code code_of(const Partition& p) const {
    Code c{};
    int k = 0;
    for (int i = 0; i < m_.n; ++i)
      for (int j = i + 1; j < m_.n; ++j) c[k++] = static_cast<std::uint8_t>(m_.weight(p.lab[i], p.lab[j]));
    return c;
  }

  static int divergence(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t i = 0;
    while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
    return static_cast<int>(i);
  }

  void add_generator(const Labels& from, const Labels& to) {
    Labels g{};
    bool identity = true;
    for (int i = 0; i < m_.n; ++i) {
      g[from[i]] = to[i];
      if (from[i] != to[i]) identity = false;
    }
    if (!identity) generators_.push_back(g);
  }

  int leaf(const Partition& p) {
    const Code code = code_of(p);
    if (!have_first_) {
      have_first_ = true;
      first_code_ = best_code_ = code;
      first_lab_ = best_lab_ = p.lab;
      first_path_ = best_path_ = path_;
      return kNoJump;
    }
    if (compare(code, first_code_) == 0) {
      add_generator(first_lab_, p.lab);
      return divergence(path_, first_path_);
    }
    const int c = compare(code, best_code_);
    if (c < 0) {
      best_code_ = code;
      best_lab_ = p.lab;
      best_path_ = path_;
      return kNoJump;
    }
    if (c == 0) {
      add_generator(best_lab_, p.lab);
      return divergence(path_, best_path_);
    }
    return kNoJump;
  }

  // Union-find orbits of the group generated by the stored generators that
  // fix the current path pointwise.
  std::array<int, kN> orbits(int level) const {
    std::array<int, kN> parent{};
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& g : generators_) {
      bool fixes = true;
      for (int i = 0; i < level && fixes; ++i) fixes = g[path_[i]] == path_[i];
      if (!fixes) continue;
      for (int v = 0; v < m_.n; ++v) {
        const int a = find(v);
        const int b = find(g[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (int v = 0; v < m_.n; ++v) parent[v] = find(v);
    return parent;
  }

  int dfs(const Partition& p, int level) {
    if (p.discrete()) return leaf(p);

    int c = 0;
    for (std::uint32_t cs = p.starts & ~(1U << p.n); cs != 0; cs &= cs - 1) {
      c = std::countr_zero(cs);
      if (p.end(c) - c >= 2) break;
    }
    const int e = p.end(c);
    std::array<int, kN> cell{};
    const int size = e - c;
    for (int i = 0; i < size; ++i) cell[i] = p.lab[c + i];
    std::sort(cell.begin(), cell.begin() + size);

    std::array<int, kN> explored{};
    int explored_count = 0;
    std::size_t generators_seen = 0;
    std::array<int, kN> orbit{};
    std::iota(orbit.begin(), orbit.end(), 0);

    for (int idx = 0; idx < size; ++idx) {
      const int v = cell[idx];
      if (explored_count > 0) {
        if (generators_.size() != generators_seen) {
          orbit = orbits(level);
          generators_seen = generators_.size();
        }
        bool equivalent = false;
        for (int k = 0; k < explored_count && !equivalent; ++k) equivalent = orbit[explored[k]] == orbit[v];
        if (equivalent) continue;
      }
      Partition q = p;
      int at = c;
      while (q.lab[at] != v) ++at;
      std::swap(q.lab[c], q.lab[at]);
      q.starts |= 1U << (c + 1);
      refine(m_, q, 1U << c);

      path_.push_back(v);
      const int r = dfs(q, level + 1);
      path_.pop_back();
      explored[explored_count++] = v;
      if (r < level) return r;
    }
    return kNoJump;
  }

  const Matrix& m_;
  int code_len_;
  bool have_first_ = false;
  Code first_code_{}, best_code_{};
  Labels first_lab_{}, best_lab_{};
  std::vector<int> path_, first_path_, best_path_;
  std::vector<Labels> generators_;
};

CanonicalLabeling labeling_from(const Matrix& m) {
  Searcher search(m);
  const Labels lab = search.run();
  CanonicalLabeling out;
  out.order.assign(lab.begin(), lab.begin() + m.n);
  out.position.assign(m.n, 0);
  for (int i = 0; i < m.n; ++i) out.position[out.order[i]] = i;
  return out;
}

void check_order(int n) {
  if (n > kMaxCanonicalOrder)
    throw CapExceeded("canonical form supports at most " + std::to_string(kMaxCanonicalOrder) + " vertices");
}

Matrix matrix_of(const SimpleGraph& g) {
  check_order(g.order());
  Matrix m;
  m.n = g.order();
  for (int u = 0; u < m.n; ++u) {
    m.rows[u] = static_cast<std::uint32_t>(g.neighbors(u));
    for (int v = 0; v < m.n; ++v) m.w[u * kN + v] = g.adjacent(u, v) ? 1 : 0;
  }
  return m;
}

Matrix matrix_of(const Multigraph& g, std::span<const int> colors) {
  check_order(g.order());
  if (!colors.empty() && static_cast<int>(colors.size()) != g.order())
    throw InvalidInput("canonical_labeling: one colour per vertex required");
  Matrix m;
  m.n = g.order();
  for (int u = 0; u < m.n; ++u) {
    m.rows[u] = static_cast<std::uint32_t>(g.neighbors(u));
    for (int v = 0; v < m.n; ++v) {
      const int k = g.multiplicity(u, v);
      m.w[u * kN + v] = static_cast<std::uint8_t>(k);
      if (k > 1) m.weighted = true;
    }
    if (!colors.empty()) m.color[u] = colors[u];
  }
  return m;
}

}  // namespace

CanonicalLabeling canonical_labeling(const SimpleGraph& g) { return labeling_from(matrix_of(g)); }

CanonicalLabeling canonical_labeling(const Multigraph& g, std::span<const int> colors) {
  return labeling_from(matrix_of(g, colors));
}

std::string canonical_form(const SimpleGraph& g) {
  const auto lab = canonical_labeling(g);
  return write_graph6(g.relabeled(lab.position));
}

std::string canonical_form(const Multigraph& g, std::span<const int> colors) {
  const Matrix m = matrix_of(g, colors);
  const auto lab = labeling_from(m);
  std::string out;
  out.push_back(static_cast<char>(m.n));
  for (int i = 0; i < m.n; ++i) {
    const int c = m.color[lab.order[i]];
    if (c < 0 || c > 255) throw InvalidInput("canonical_form: colours must lie in 0..255");
    out.push_back(static_cast<char>(c));
  }
  for (int i = 0; i < m.n; ++i)
    for (int j = i + 1; j < m.n; ++j) out.push_back(static_cast<char>(m.weight(lab.order[i], lab.order[j])));
  return out;
}

bool are_isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  if (invariant_hash(a) != invariant_hash(b)) return false;
  return canonical_form(a) == canonical_form(b);
}

bool are_isomorphic(const Multigraph& a, const Multigraph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_form(a) == canonical_form(b);
}

std::uint64_t invariant_hash(const SimpleGraph& g) {
  // Sorted (degree, neighbour-degree sum, triangles through v) triples.
  std::vector<std::uint64_t> keys;
  keys.reserve(g.order());
  for (int v = 0; v < g.order(); ++v) {
    std::uint64_t nsum = 0;
    std::uint64_t tri = 0;
    for (std::uint64_t b = g.neighbors(v); b != 0; b &= b - 1) {
      const int u = std::countr_zero(b);
      nsum += g.degree(u);
      tri += std::popcount(g.neighbors(u) & g.neighbors(v));
    }
    keys.push_back((static_cast<std::uint64_t>(g.degree(v)) << 48) ^ (nsum << 24) ^ tri);
  }
  std::sort(keys.begin(), keys.end());
  std::uint64_t h = 1469598103934665603ULL ^ static_cast<std::uint64_t>(g.order());
  for (auto k : keys) {
    h ^= k + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace clawham
