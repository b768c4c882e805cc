#pragma once

#include <functional>
#include <string>
#include <vector>

#include "clawham/parallel.hpp"

namespace clawham {

enum class Verdict { kPass, kFail, kCapExceeded };

const char* verdict_name(Verdict v);

struct Counterexample {
  std::string graph6;  ///< underlying simple graph
  std::string detail;  ///< JSON text: marked structure and what failed

  friend auto operator<=>(const Counterexample&, const Counterexample&) = default;
};

struct CheckResult {
  std::string name;
  std::string family;
  long long instances = 0;
  std::vector<Counterexample> counterexamples;  ///< sorted
  double elapsed_seconds = 0.0;
  Verdict verdict = Verdict::kPass;
  std::vector<std::string> notes;

  bool passed() const noexcept { return verdict == Verdict::kPass; }
};

struct CheckOptions {
  int max_n = -1;  ///< negative: the check's default
  ExecutionPolicy policy = ExecutionPolicy::kParallel;
  int heavy_slack = 0;
  int max_multiplicity = 2;
};

CheckResult check_lemma_5cycle(const CheckOptions& options = {});
CheckResult check_lemma_nokori2hen(const CheckOptions& options = {});
CheckResult check_hn(const CheckOptions& options = {});
CheckResult check_closure(const CheckOptions& options = {});
CheckResult check_ms(const CheckOptions& options = {});
CheckResult check_theorem_small(const CheckOptions& options = {});
CheckResult check_main_dichotomy(const CheckOptions& options = {});
CheckResult check_jisuukeisan(const CheckOptions& options = {});
CheckResult check_nokorisanhen(const CheckOptions& options = {});
CheckResult check_endmove_weak(const CheckOptions& options = {});
CheckResult check_lai(const CheckOptions& options = {});
CheckResult fixture_xi_star(const CheckOptions& options = {});
CheckResult fixture_k33(const CheckOptions& options = {});

/// Oracle values of the Xi* gadget, frozen from the first run.
inline constexpr bool kXiStarHasSpanningClosedTrail = false;
inline constexpr bool kXiStarHasDct = true;

struct CheckInfo {
  std::string name;
  int default_max_n;  ///< 0 when the check takes no order bound
  std::function<CheckResult(const CheckOptions&)> run;
};

const std::vector<CheckInfo>& check_registry();
/// Throws InvalidInput for an unknown name. A cap hit before the sweep
/// starts (say, an order beyond the enumerator) becomes a cap-exceeded result;
/// the check functions themselves let CapExceeded propagate.
CheckResult run_check(const std::string& name, const CheckOptions& options = {});

}  // namespace clawham
