#include "ahsp/distributed.hpp"

#include <chrono>
#include <future>

#include "ahsp/instance.hpp"

namespace ahsp {

namespace {

u64 serialized_subgroup_bytes(const Subgroup& s) {
  return subgroup_to_json(s).size();
}

DistributedReport aggregate(const GroupSpec& g,
                            const std::vector<SylowComponent>& comps,
                            std::vector<NodeReport> nodes,
                            const Subgroup& hidden_truth,
                            std::chrono::steady_clock::time_point t0) {
  DistributedReport report;
  std::vector<Subgroup> spans;
  spans.reserve(nodes.size());
  for (auto& n : nodes) {
    report.max_node_queries = std::max(report.max_node_queries,
                                       n.local_queries);
    report.total_queries += n.local_queries;
    report.classical_messages += 1;
    report.classical_bytes += serialized_subgroup_bytes(n.local_orthogonal);
    spans.push_back(n.local_orthogonal);
  }
  Subgroup orth_joined = direct_sum_subgroups(g, comps, spans);
  report.recovered = orth_joined.orthogonal();
  report.node_reports = std::move(nodes);
  report.quantum_messages = 0;
  report.success = report.recovered == hidden_truth;
  report.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                t0)
          .count();
  return report;
}

}  // namespace

NodeReport run_local_standard(const SylowComponent& comp, HiddenOracle& o_i,
                              double epsilon_over_m, Rng& rng) {
  const u64 q0 = o_i.query_count();
  const int h = iteration_bound(comp.group, epsilon_over_m);
  detail::SpanRecovery rec = detail::sample_span(comp.group, o_i, h, rng);
  NodeReport n;
  n.local_orthogonal = std::move(rec.span);
  n.planned_iterations = rec.planned_iterations;
  n.iterations = rec.iterations;
  n.local_queries = o_i.query_count() - q0;
  n.state_dim = checked_mul(comp.group.order(), o_i.codomain().order());
  n.measured = std::move(rec.measured);
  return n;
}

NodeReport run_local_exact(const SylowComponent& comp, HiddenOracle& o_i,
                           i64 order_k_i, Rng& rng,
                           const ExactRunOptions& opts) {
  const u64 q0 = o_i.query_count();
  detail::SpanRecovery rec =
      detail::exact_span(comp.group, o_i, order_k_i, rng, opts);
  NodeReport n;
  n.local_orthogonal = std::move(rec.span);
  n.planned_iterations = rec.planned_iterations;
  n.iterations = rec.iterations;
  n.local_queries = o_i.query_count() - q0;
  n.state_dim = checked_mul(comp.group.order(), o_i.codomain().order());
  n.measured = std::move(rec.measured);
  return n;
}

DistributedReport run_edk(const GroupSpec& g, HiddenOracle& o, i64 order_k,
                          const std::vector<u64>& node_seeds,
                          const QaaProbe& probe) {
  const auto t0 = std::chrono::steady_clock::now();
  if (order_k <= 0 || g.order() % order_k != 0)
    throw std::domain_error("run_edk: |K| must divide the group order");
  std::vector<SylowComponent> comps = sylow_decompose(g);
  if (node_seeds.size() != comps.size())
    throw std::invalid_argument("run_edk: one seed per Sylow node required");

  // Shared-nothing node tasks joined below; only Subgroup values come back.
  std::vector<std::future<NodeReport>> futures;
  futures.reserve(comps.size());
  for (std::size_t i = 0; i < comps.size(); ++i) {
    HiddenOracle o_i = o.subfunction(comps, i);
    const i64 order_k_i = gcd_i64(order_k, comps[i].group.order());
    futures.push_back(std::async(
        std::launch::async,
        [&comps, &probe, i, order_k_i, seed = node_seeds[i],
         oi = std::move(o_i)]() mutable {
          Rng rng(seed);
          ExactRunOptions opts;
          opts.probe = probe;
          NodeReport n = run_local_exact(comps[i], oi, order_k_i, rng, opts);
          n.node_index = i;
          n.seed = seed;
          return n;
        }));
  }
  std::vector<NodeReport> nodes;
  nodes.reserve(comps.size());
  for (auto& f : futures) nodes.push_back(f.get());
  return aggregate(g, comps, std::move(nodes), o.hidden_for_verification(),
                   t0);
}

DistributedReport run_dk_probabilistic(const GroupSpec& g, HiddenOracle& o,
                                       double epsilon,
                                       const std::vector<u64>& node_seeds) {
  const auto t0 = std::chrono::steady_clock::now();
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw std::domain_error("run_dk_probabilistic: epsilon must be in (0,1)");
  std::vector<SylowComponent> comps = sylow_decompose(g);
  if (node_seeds.size() != comps.size())
    throw std::invalid_argument(
        "run_dk_probabilistic: one seed per Sylow node required");
  const double eps_node = epsilon / static_cast<double>(comps.size());

  std::vector<std::future<NodeReport>> futures;
  futures.reserve(comps.size());
  for (std::size_t i = 0; i < comps.size(); ++i) {
    HiddenOracle o_i = o.subfunction(comps, i);
    futures.push_back(std::async(
        std::launch::async,
        [&comps, i, eps_node, seed = node_seeds[i],
         oi = std::move(o_i)]() mutable {
          Rng rng(seed);
          NodeReport n = run_local_standard(comps[i], oi, eps_node, rng);
          n.node_index = i;
          n.seed = seed;
          return n;
        }));
  }
  std::vector<NodeReport> nodes;
  nodes.reserve(comps.size());
  for (auto& f : futures) nodes.push_back(f.get());
  return aggregate(g, comps, std::move(nodes), o.hidden_for_verification(),
                   t0);
}

}  // namespace ahsp
