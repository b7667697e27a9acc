#pragma once

#include "ahsp/centralized.hpp"

namespace ahsp {

struct NodeReport {
  std::size_t node_index = 0;
  Subgroup local_orthogonal;  // the node's estimate of K_i^perp (exact: equal)
  int planned_iterations = 0;
  int iterations = 0;
  u64 local_queries = 0;
  u64 seed = 0;
  i64 state_dim = 0;  // |G_i| * |G|
  std::vector<GroupElement> measured;
};

struct DistributedReport {
  std::vector<NodeReport> node_reports;
  Subgroup recovered;
  u64 max_node_queries = 0;
  u64 total_queries = 0;
  u64 classical_messages = 0;
  u64 classical_bytes = 0;
  u64 quantum_messages = 0;  // nodes exchange Subgroup values only
  bool success = false;
  double wall_time_ms = 0.0;
};

// One Fourier-sampling node: h = min{ rank(G_i) + ceil(log2(2/eps')),
// len(G_i) + ceil(log2(1/eps')) } iterations with eps' the per-node error
// budget. The node's first register is G_i; the output register stays G.
NodeReport run_local_standard(const SylowComponent& comp, HiddenOracle& o_i,
                              double epsilon_over_m, Rng& rng);

// One exact node: len(G_i) - len(K_i) amplification iterations, three
// queries each; returns K_i^perp exactly.
NodeReport run_local_exact(const SylowComponent& comp, HiddenOracle& o_i,
                           i64 order_k_i, Rng& rng,
                           const ExactRunOptions& opts = {});

// Exact distributed run: one node per Sylow component in parallel, local
// results joined by classical messages only, then one orthogonal complement.
// Per-node subgroup orders come from |K_i| = gcd(|K|, |G_i|).
DistributedReport run_edk(const GroupSpec& g, HiddenOracle& o, i64 order_k,
                          const std::vector<u64>& node_seeds,
                          const QaaProbe& probe = {});

// Probabilistic distributed run with per-node budget epsilon / m.
DistributedReport run_dk_probabilistic(const GroupSpec& g, HiddenOracle& o,
                                       double epsilon,
                                       const std::vector<u64>& node_seeds);

}  // namespace ahsp
