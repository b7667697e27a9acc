#include "ahsp/verify.hpp"

#include <cmath>
#include <mutex>
#include <numbers>

#include "ahsp/centralized.hpp"
#include "ahsp/lattice_enum.hpp"
#include "ahsp/parallel.hpp"

namespace ahsp {

bool all_passed(const std::vector<PropertyResult>& results) {
  for (const auto& r : results)
    if (r.failures != 0) return false;
  return true;
}

namespace {

class Tally {
 public:
  explicit Tally(std::vector<std::string> names) {
    for (auto& n : names) results_.push_back({std::move(n), 0, 0});
  }

  void record(std::size_t property, bool ok, u64 weight = 1) {
    std::lock_guard<std::mutex> lock(mu_);
    results_[property].checked += weight;
    if (!ok) results_[property].failures += weight;
  }

  std::vector<PropertyResult> take() { return results_; }

 private:
  std::mutex mu_;
  std::vector<PropertyResult> results_;
};

bool generates_whole_group(const GroupSpec& g, int samples, Rng& rng) {
  std::vector<GroupElement> gens;
  gens.reserve(samples);
  for (int i = 0; i < samples; ++i)
    gens.emplace_back(g, g.coords_of(static_cast<i64>(rng.below(g.order()))));
  return Subgroup::span(g, gens).is_full();
}

}  // namespace

std::vector<PropertyResult> verify_group_properties(i64 max_order, u64 seed) {
  enum {
    kOrthSweep,
    kDoubleOrth,
    kOrderProduct,
    kLenAdditivity,
    kRankSubadd,
    kLenBoundsRank,
    kOrthRankBound,
    kCrtRoundTrip,
    kOrthComponentwise,
    kGenerationBound,
    kCount
  };
  Tally tally({
      "orthogonal matches element sweep",
      "double orthogonal returns K",
      "|K| * |K^perp| = |G|",
      "chain length additivity",
      "rank subadditivity",
      "chain length bounds rank",
      "orthogonal rank bounded by group rank",
      "component projection round trip",
      "orthogonal decomposes componentwise",
      "random generation frequency bound",
  });

  std::vector<GroupSpec> groups = all_group_specs_up_to(max_order);
  parallel_for(groups.size(), [&](std::size_t gi) {
    const GroupSpec& g = groups[gi];
    auto comps = sylow_decompose(g);
    for (const Subgroup& k : all_subgroups(g)) {
      Subgroup orth = k.orthogonal();
      tally.record(kOrthSweep, orth == orthogonal_by_enumeration(k));
      tally.record(kDoubleOrth, orth.orthogonal() == k);
      tally.record(kOrderProduct,
                   checked_mul(k.order(), orth.order()) == g.order());
      tally.record(kLenAdditivity,
                   g.chain_length() ==
                       k.chain_length() + orth.chain_length());
      tally.record(kRankSubadd, g.rank() <= k.rank() + orth.rank());
      tally.record(kLenBoundsRank, k.chain_length() >= k.rank());
      tally.record(kOrthRankBound, orth.rank() <= g.rank());

      std::vector<Subgroup> parts, orth_parts;
      bool orders_ok = true;
      for (const auto& c : comps) {
        parts.push_back(project_subgroup(k, c));
        orth_parts.push_back(parts.back().orthogonal());
        orders_ok = orders_ok && parts.back().order() ==
                                     gcd_i64(k.order(), c.group.order());
      }
      tally.record(kCrtRoundTrip,
                   orders_ok && direct_sum_subgroups(g, comps, parts) == k);
      tally.record(kOrthComponentwise,
                   direct_sum_subgroups(g, comps, orth_parts) == orth);
    }
  });

  // Uniform samples of size rank(G) + ceil(log2(2/eps)) generate G with
  // frequency at least 1 - eps, up to binomial noise.
  const std::vector<GroupSpec> sample_groups = {
      GroupSpec({2, 2, 2, 2}), GroupSpec({9, 3}), GroupSpec({8})};
  const int trials = 2000;
  for (std::size_t gi = 0; gi < sample_groups.size(); ++gi) {
    const GroupSpec& g = sample_groups[gi];
    for (double eps : {0.5, 0.1}) {
      const int samples = g.rank() + ceil_log2(2.0 / eps);
      Rng rng(derive_seed(seed, gi * 100 + static_cast<u64>(eps * 1000)));
      int ok = 0;
      for (int t = 0; t < trials; ++t)
        if (generates_whole_group(g, samples, rng)) ++ok;
      const double sigma = std::sqrt(eps * (1.0 - eps) / trials);
      tally.record(kGenerationBound, static_cast<double>(ok) / trials >=
                                         1.0 - eps - 3.0 * sigma);
    }
  }
  return tally.take();
}

std::vector<PropertyResult> verify_sim_properties(i64 max_order, u64 seed) {
  enum {
    kUnitarity,
    kFourierRoundTrip,
    kPostASupport,
    kPostAUniform,
    kPostQElimination,
    kPostQUniform,
    kCharacterSums,
    kCount
  };
  Tally tally({
      "operator unitarity within 1e-12",
      "fourier round trip within 1e-12",
      "post-A support equals the orthogonal subgroup",
      "post-A marginal uniform on the orthogonal subgroup",
      "post-Q mass on the span below 1e-10",
      "post-Q complement uniform within 1e-9",
      "character sums vanish off the orthogonal subgroup",
  });

  // Unitarity and round trips on random states over a mixed layout.
  {
    GroupSpec g({4, 3});
    Subgroup k = Subgroup::span(g, {GroupElement(g, {2, 0})});
    HiddenOracle o = build_hidden_function(g, k, seed);
    RegisterLayout layout = RegisterLayout::for_algorithm(g, g);
    Rng rng(derive_seed(seed, 1));
    for (int t = 0; t < 100; ++t) {
      StateVector s{layout, std::vector<cplx>(layout.total())};
      double norm = 0.0;
      for (auto& a : s.amps) {
        a = cplx{rng.uniform() - 0.5, rng.uniform() - 0.5};
        norm += std::norm(a);
      }
      for (auto& a : s.amps) a /= std::sqrt(norm);

      StateVector orig = s;
      switch (t % 6) {
        case 0:
          apply_qft(s, t % 4, (t / 4) % 2 == 0);
          break;
        case 1:
          apply_oracle(s, o, t % 2 == 0);
          break;
        case 2:
          apply_phase_r0(s, 0.1 + t);
          break;
        case 3:
          apply_phase_ra(s, 0.2 + t, k);
          break;
        case 4:
          apply_a(s, o, t % 2 == 0);
          break;
        case 5:
          apply_q(s, o, qaa_phase(5.0 / 6.0), k);
          break;
      }
      tally.record(kUnitarity, std::abs(s.norm_sq() - 1.0) < 1e-12);

      StateVector rt = orig;
      for (std::size_t reg = 0; reg < layout.dims.size(); ++reg)
        apply_qft(rt, reg, false);
      for (std::size_t reg = 0; reg < layout.dims.size(); ++reg)
        apply_qft(rt, reg, true);
      double diff = 0.0;
      for (std::size_t i = 0; i < rt.amps.size(); ++i)
        diff = std::max(diff, std::abs(rt.amps[i] - orig.amps[i]));
      tally.record(kFourierRoundTrip, diff < 1e-12);
    }
  }

  const i64 sim_cap = std::min<i64>(max_order, 64);
  std::vector<GroupSpec> groups = all_group_specs_up_to(sim_cap);
  parallel_for(groups.size(), [&](std::size_t gi) {
    const GroupSpec& g = groups[gi];
    auto subs = all_subgroups(g);
    for (std::size_t ki = 0; ki < subs.size(); ++ki) {
      const Subgroup& k = subs[ki];
      Subgroup orth = k.orthogonal();
      HiddenOracle o = build_hidden_function(g, k, derive_seed(seed, gi * 131071 + ki));

      RegisterLayout layout = RegisterLayout::for_algorithm(g, g);
      StateVector s =
          init_basis(layout, std::vector<i64>(layout.dims.size(), 0));
      apply_a(s, o, false);
      std::vector<double> p = marginal_first(s, g.num_factors());
      bool support_ok = true, uniform_ok = true;
      const double expect = 1.0 / static_cast<double>(orth.order());
      for (i64 a = 0; a < g.order(); ++a) {
        if (orth.contains(GroupElement(g, g.coords_of(a))))
          uniform_ok = uniform_ok && std::abs(p[a] - expect) <= 1e-10;
        else
          support_ok = support_ok && p[a] <= 1e-10;
      }
      tally.record(kPostASupport, support_ok);
      tally.record(kPostAUniform, uniform_ok);

      // One seeded exact run per instance, with per-step instrumentation.
      ExactRunOptions opts;
      opts.probe = [&](const QaaStepView& view) {
        if (view.degenerate) return;
        double marked_mass = 0.0;
        i64 complement = 0;
        double max_dev = 0.0;
        for (i64 a = 0; a < g.order(); ++a) {
          if (view.marked.contains(GroupElement(g, g.coords_of(a))))
            marked_mass += view.marginal[a];
          else if (orth.contains(GroupElement(g, g.coords_of(a))))
            ++complement;
        }
        const double u = complement > 0 ? 1.0 / complement : 0.0;
        for (i64 a = 0; a < g.order(); ++a) {
          GroupElement e(g, g.coords_of(a));
          if (!view.marked.contains(e) && orth.contains(e))
            max_dev = std::max(max_dev, std::abs(view.marginal[a] - u));
        }
        tally.record(kPostQElimination, marked_mass <= 1e-10);
        tally.record(kPostQUniform, max_dev <= 1e-9);
      };
      Rng rng(derive_seed(seed, gi * 524287 + ki));
      RunReport r = run_exact(g, o, k.order(), rng, opts);
      (void)r;

      // Character sums over a single-prime group vanish off the orthogonal.
      if (g.sylow_blocks().size() == 1) {
        bool sums_ok = true;
        auto members = k.elements();
        for (i64 m = 0; m < g.order(); ++m) {
          GroupElement me(g, g.coords_of(m));
          if (orth.contains(me)) continue;
          cplx sum{0.0, 0.0};
          for (const auto& kk : members) {
            Rational01 ip = bilinear(kk, me);
            sum += std::polar(1.0, -2.0 * std::numbers::pi *
                                       static_cast<double>(ip.numerator()) /
                                       static_cast<double>(ip.denominator()));
          }
          sums_ok = sums_ok && std::abs(sum) <= 1e-10;
        }
        tally.record(kCharacterSums, sums_ok);
      }
    }
  });
  return tally.take();
}

}  // namespace ahsp
