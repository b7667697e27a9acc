#pragma once

#include <functional>
#include <optional>

#include "ahsp/sim.hpp"

namespace ahsp {

// phi = arccos(1 - 1/(2b)) on the principal branch, for b in [1/2, 1].
// Outside that range the caller's span bookkeeping is broken.
PhaseParams qaa_phase(double b);

// Per-step view handed to an optional instrumentation callback during exact
// runs: the post-amplification first-register marginal and the subgroup whose
// amplitude the step was meant to remove. A step is degenerate when earlier
// measurements already spanned the whole orthogonal group, leaving nothing to
// amplify; the operator is still applied (with the b = 1/2 endpoint phase)
// and the measurement then falls inside the span.
struct QaaStepView {
  int iteration;  // 1-based
  bool degenerate;
  const Subgroup& marked;
  const std::vector<double>& marginal;
};
using QaaProbe = std::function<void(const QaaStepView&)>;

struct RunReport {
  Subgroup recovered;
  int planned_iterations = 0;
  int iterations = 0;
  u64 oracle_queries = 0;
  std::vector<GroupElement> measured;
  bool success = false;  // against the instance's sealed subgroup
  double wall_time_ms = 0.0;
};

struct ExactRunOptions {
  // Stop as soon as the span has filled the orthogonal group. Off by
  // default: the stated query count then holds exactly, every run.
  bool early_exit = false;
  QaaProbe probe;
};

// Fourier-sampling runs: h iterations of prepare / A / measure, then the
// orthogonal of the span of the measurements.
RunReport run_standard(const GroupSpec& g, HiddenOracle& o, double epsilon,
                       Rng& rng, std::optional<int> known_len_k = {});

// Exact recovery via one amplitude-amplification step per iteration,
// len(G) - len(K) iterations, three oracle queries each. Requires |K|.
RunReport run_exact(const GroupSpec& g, HiddenOracle& o, i64 order_k, Rng& rng,
                    const ExactRunOptions& opts = {});

namespace detail {

// Shared measurement loops over the oracle's domain as first register; used
// by both the centralized runs and the per-node distributed runs.
struct SpanRecovery {
  Subgroup span;
  int planned_iterations = 0;
  int iterations = 0;
  std::vector<GroupElement> measured;
};

SpanRecovery sample_span(const GroupSpec& domain, HiddenOracle& o, int h,
                         Rng& rng);

SpanRecovery exact_span(const GroupSpec& domain, HiddenOracle& o, i64 order_k,
                        Rng& rng, const ExactRunOptions& opts);

i64 sample_index(const std::vector<double>& weights, Rng& rng);

}  // namespace detail

}  // namespace ahsp
