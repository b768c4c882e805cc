// Serial reference vs OpenMP path on the main kernels. Each row also checks
// that both paths produced the same result.

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "clawham/enumeration.hpp"
#include "clawham/json_io.hpp"
#include "clawham/parallel.hpp"
#include "clawham/trails.hpp"
#include "clawham/verify.hpp"

using namespace clawham;

namespace {

double best_of(int repeats, const std::function<void()>& fn) {
  double best = 1e300;
  for (int i = 0; i < repeats; ++i) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  }
  return best;
}

// run(policy) returns a digest of its output for the equality column.
void row(const std::string& name, int repeats, const std::function<std::string(ExecutionPolicy)>& run) {
  std::string serial_digest, parallel_digest;
  const double s = best_of(repeats, [&] { serial_digest = run(ExecutionPolicy::kSerial); });
  const double p = best_of(repeats, [&] { parallel_digest = run(ExecutionPolicy::kParallel); });
  std::printf("%-36s %10.3f %10.3f %8.2fx  %s\n", name.c_str(), s, p, p > 0 ? s / p : 0.0,
              serial_digest == parallel_digest ? "same" : "DIFFERENT");
  std::fflush(stdout);
}

std::string check_digest(const CheckResult& r) { return to_json(r, false).dump(); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serial vs parallel kernel timings"};
  int repeats = 3;
  int max_n = 10;
  app.add_option("--repeats", repeats, "Runs per measurement (best is reported)");
  app.add_option("--max-n", max_n, "Order bound for enumeration and sweeps");
  CLI11_PARSE(app, argc, argv);

  std::printf("threads: %d\n", worker_count(ExecutionPolicy::kParallel));
  std::printf("%-36s %10s %10s %9s  %s\n", "kernel", "serial s", "parallel s", "speedup", "output");

  row("enumerate claw-free n<=" + std::to_string(max_n), repeats, [&](ExecutionPolicy policy) {
    FamilySpec s;
    s.n_min = 1;
    s.n_max = max_n;
    s.claw_free = true;
    return std::to_string(enumerate(s, policy).size());
  });

  row("enumerate all graphs n<=" + std::to_string(std::min(max_n, 9)), repeats, [&](ExecutionPolicy policy) {
    FamilySpec s;
    s.n_min = 1;
    s.n_max = std::min(max_n, 9);
    return std::to_string(enumerate(s, policy).size());
  });

  for (const char* name : {"ms", "theorem_small", "closure", "nokori2hen", "lai"}) {
    row(std::string("verify ") + name, repeats, [&](ExecutionPolicy policy) {
      CheckOptions o;
      o.policy = policy;
      return check_digest(run_check(name, o));
    });
  }

  // Collapsibility over a fixed batch of random multigraphs, parallel over
  // graphs.
  std::mt19937_64 rng(7);
  std::vector<Multigraph> batch;
  while (batch.size() < 500) {
    const int n = 6 + static_cast<int>(rng() % 7);
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 100 < 45) m[u][v] = m[v][u] = 1 + static_cast<int>(rng() % 2);
    Multigraph g = Multigraph::from_matrix(m);
    if (g.size() <= 36 && is_connected(g)) batch.push_back(std::move(g));
  }
  row("is_collapsible x500 (n 6..12)", repeats, [&](ExecutionPolicy policy) {
    const auto flags =
        indexed_map<char>(batch.size(), [&](std::size_t i) -> char { return is_collapsible(batch[i]) ? 1 : 0; }, policy);
    return std::string(flags.begin(), flags.end());
  });
  return 0;
}
