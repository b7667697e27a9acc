#include "ahsp/centralized.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>

namespace ahsp {

PhaseParams qaa_phase(double b) {
  if (!(b >= 0.5 && b <= 1.0))
    throw std::domain_error(
        "qaa_phase: b outside [1/2, 1]; span exceeds the orthogonal group");
  return PhaseParams{b, std::acos(1.0 - 1.0 / (2.0 * b))};
}

namespace detail {

i64 sample_index(const std::vector<double>& weights, Rng& rng) {
  double total = 0.0;
  for (double w : weights) total += w;
  if (std::abs(total - 1.0) > 1e-8)
    throw std::runtime_error("sample_index: distribution norm drifted");
  double u = rng.uniform() * total;
  double acc = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    acc += weights[i];
    if (u < acc) return static_cast<i64>(i);
  }
  return static_cast<i64>(weights.size()) - 1;
}

SpanRecovery sample_span(const GroupSpec& domain, HiddenOracle& o, int h,
                         Rng& rng) {
  RegisterLayout layout =
      RegisterLayout::for_algorithm(o.domain(), o.codomain());
  const std::vector<i64> zeros(layout.dims.size(), 0);
  SpanRecovery out{Subgroup::trivial(domain), h, 0, {}};
  for (int i = 0; i < h; ++i) {
    StateVector state = init_basis(layout, zeros);
    apply_a(state, o, false);
    std::vector<double> p = marginal_first(state, domain.num_factors());
    GroupElement t(domain, domain.coords_of(sample_index(p, rng)));
    out.span = out.span.joined_with(t);
    out.measured.push_back(std::move(t));
    ++out.iterations;
  }
  return out;
}

SpanRecovery exact_span(const GroupSpec& domain, HiddenOracle& o, i64 order_k,
                        Rng& rng, const ExactRunOptions& opts) {
  if (order_k <= 0 || domain.order() % order_k != 0)
    throw std::domain_error("exact run: |K| must divide the group order");
  const int h = domain.chain_length() - exponent_sum(order_k);
  const i64 orth_order = domain.order() / order_k;

  RegisterLayout layout =
      RegisterLayout::for_algorithm(o.domain(), o.codomain());
  const std::vector<i64> zeros(layout.dims.size(), 0);
  SpanRecovery out{Subgroup::trivial(domain), h, 0, {}};

  for (int i = 1; i <= h; ++i) {
    const bool degenerate = out.span.order() == orth_order;
    if (degenerate && opts.early_exit) break;

    StateVector state = init_basis(layout, zeros);
    apply_a(state, o, false);

    PhaseParams params;
    if (degenerate) {
      // Nothing left to amplify; any phase acts as a global phase on the
      // remaining support. Fixed at the b = 1/2 endpoint.
      params = PhaseParams{0.0, std::numbers::pi / 2.0};
    } else {
      // b = 1 - |span| * |K| / |G|, exact in integers before conversion.
      params = qaa_phase(1.0 - static_cast<double>(checked_mul(
                                   out.span.order(), order_k)) /
                                   static_cast<double>(domain.order()));
    }
    apply_q(state, o, params, out.span);

    std::vector<double> p = marginal_first(state, domain.num_factors());
    GroupElement t(domain, domain.coords_of(sample_index(p, rng)));
    if (opts.probe) opts.probe(QaaStepView{i, degenerate, out.span, p});
    if (!degenerate && out.span.contains(t)) {
      std::ostringstream os;
      os << "exact run: measured element " << t.to_string()
         << " inside span at iteration " << i << " (marked order "
         << out.span.order() << ", marginal:";
      for (double w : p) os << " " << w;
      os << ")";
      throw std::runtime_error(os.str());
    }
    out.span = out.span.joined_with(t);
    out.measured.push_back(std::move(t));
    ++out.iterations;
  }
  return out;
}

}  // namespace detail

RunReport run_standard(const GroupSpec& g, HiddenOracle& o, double epsilon,
                       Rng& rng, std::optional<int> known_len_k) {
  const auto t0 = std::chrono::steady_clock::now();
  const u64 q0 = o.query_count();
  const int h = iteration_bound(g, epsilon, known_len_k.value_or(0));
  detail::SpanRecovery rec = detail::sample_span(g, o, h, rng);
  RunReport report{rec.span.orthogonal(),
                   rec.planned_iterations,
                   rec.iterations,
                   o.query_count() - q0,
                   std::move(rec.measured),
                   false,
                   0.0};
  report.success = report.recovered == o.hidden_for_verification();
  report.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                t0)
          .count();
  return report;
}

RunReport run_exact(const GroupSpec& g, HiddenOracle& o, i64 order_k, Rng& rng,
                    const ExactRunOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  const u64 q0 = o.query_count();
  detail::SpanRecovery rec = detail::exact_span(g, o, order_k, rng, opts);
  RunReport report{rec.span.orthogonal(),
                   rec.planned_iterations,
                   rec.iterations,
                   o.query_count() - q0,
                   std::move(rec.measured),
                   false,
                   0.0};
  report.success = report.recovered == o.hidden_for_verification();
  report.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                t0)
          .count();
  return report;
}

}  // namespace ahsp
