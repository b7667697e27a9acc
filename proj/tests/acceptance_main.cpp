// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Corpora are exhaustive subgroup lattices at small orders plus
// seeded samples at larger ones; every tolerance is fixed here.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstring>
#include <iomanip>
#include <iostream>
#include <map>
#include <mutex>
#include <numbers>
#include <set>
#include <sstream>

#include "ahsp/classical.hpp"
#include "ahsp/distributed.hpp"
#include "ahsp/lattice_enum.hpp"
#include "ahsp/parallel.hpp"
#include "ahsp/verify.hpp"

using namespace ahsp;

namespace {

constexpr u64 kMasterSeed = 0x20ac5eedull;

bool g_quick = false;
int g_failures = 0;

struct Timer {
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
  }
};

void report(int criterion, bool pass, const std::string& what,
            const Timer& timer) {
  std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << criterion
            << ": " << what << "  (" << std::fixed << std::setprecision(1)
            << timer.seconds() << " s)\n"
            << std::defaultfloat;
  std::cout.flush();
  if (!pass) ++g_failures;
}

struct InstanceRef {
  GroupSpec group;
  Subgroup hidden;
};

std::vector<InstanceRef> exhaustive_corpus(i64 max_order) {
  std::vector<InstanceRef> out;
  for (const auto& g : all_group_specs_up_to(max_order))
    for (const auto& k : all_subgroups(g)) out.push_back({g, k});
  return out;
}

std::vector<InstanceRef> all_pairs_of(const GroupSpec& g) {
  std::vector<InstanceRef> out;
  for (const auto& k : all_subgroups(g)) out.push_back({g, k});
  return out;
}

// Thread-safe collector for the per-step amplification checks (criterion 3).
class StepStats {
 public:
  void record(double marked_mass, double complement_dev) {
    std::lock_guard<std::mutex> lock(mu_);
    ++steps_;
    max_marked_mass_ = std::max(max_marked_mass_, marked_mass);
    max_complement_dev_ = std::max(max_complement_dev_, complement_dev);
  }
  void record_degenerate(double mass_on_orth) {
    std::lock_guard<std::mutex> lock(mu_);
    ++degenerate_steps_;
    min_orth_mass_ = std::min(min_orth_mass_, mass_on_orth);
  }

  u64 steps() const { return steps_; }
  u64 degenerate_steps() const { return degenerate_steps_; }
  double max_marked_mass() const { return max_marked_mass_; }
  double max_complement_dev() const { return max_complement_dev_; }
  double min_orth_mass() const { return min_orth_mass_; }

 private:
  std::mutex mu_;
  u64 steps_ = 0;
  u64 degenerate_steps_ = 0;
  double max_marked_mass_ = 0.0;
  double max_complement_dev_ = 0.0;
  double min_orth_mass_ = 1.0;
};

// Flat-index view of a subgroup within its group, for fast probe scans.
struct OrthFlats {
  std::vector<i64> flats;  // sorted flat indices of K^perp members
};

OrthFlats orth_flats_of(const Subgroup& orth) {
  return OrthFlats{orth.element_flat_indices()};
}

// Probe body shared by the centralized and per-node exact runs. Both flat
// lists are sorted, so the complement scan is a two-pointer merge.
void scan_step(const QaaStepView& view, const OrthFlats& orth,
               StepStats& stats) {
  if (view.degenerate) {
    double mass = 0.0;
    for (i64 t : orth.flats) mass += view.marginal[t];
    stats.record_degenerate(mass);
    return;
  }
  std::vector<i64> marked_flats = view.marked.element_flat_indices();
  double marked_mass = 0.0;
  for (i64 t : marked_flats) marked_mass += view.marginal[t];

  const i64 complement = static_cast<i64>(orth.flats.size()) -
                         static_cast<i64>(marked_flats.size());
  const double uniform = complement > 0 ? 1.0 / complement : 0.0;
  double dev = 0.0;
  std::size_t mi = 0;
  for (i64 t : orth.flats) {
    while (mi < marked_flats.size() && marked_flats[mi] < t) ++mi;
    if (mi < marked_flats.size() && marked_flats[mi] == t) continue;
    dev = std::max(dev, std::abs(view.marginal[t] - uniform));
  }
  stats.record(marked_mass, dev);
}

// ---------------------------------------------------------------- criterion 1

void criterion_1(StepStats& qaa_stats) {
  Timer timer;
  std::vector<InstanceRef> corpus = exhaustive_corpus(g_quick ? 24 : 64);
  for (const auto& extra :
       {GroupSpec({8, 9}), GroupSpec({4, 3, 25})}) {
    auto pairs = all_pairs_of(extra);
    corpus.insert(corpus.end(), pairs.begin(), pairs.end());
  }
  const int trials = g_quick ? 5 : 50;

  std::atomic<u64> bad{0};
  std::atomic<u64> runs{0};
  parallel_for(corpus.size(), [&](std::size_t idx) {
    const GroupSpec& g = corpus[idx].group;
    const Subgroup& k = corpus[idx].hidden;
    const u64 expect_queries = 3ull * (g.chain_length() - k.chain_length());
    OrthFlats orth = orth_flats_of(k.orthogonal());

    ExactRunOptions opts;
    opts.probe = [&](const QaaStepView& view) {
      scan_step(view, orth, qaa_stats);
    };
    for (int t = 0; t < trials; ++t) {
      HiddenOracle o = build_hidden_function(
          g, k, derive_seed(kMasterSeed, idx * 1000 + 7));
      Rng rng(derive_seed(kMasterSeed ^ 0x11ull, idx * 64 + t));
      RunReport r = run_exact(g, o, k.order(), rng, opts);
      ++runs;
      if (!(r.recovered == k) || r.oracle_queries != expect_queries) ++bad;
    }
  });
  report(1, bad == 0,
         "exact centralized runs: " + std::to_string(corpus.size()) +
             " instances x " + std::to_string(trials) +
             " trials, recovery and the 3(len G - len K) query identity "
             "exact in " +
             std::to_string(runs - bad) + "/" + std::to_string(runs),
         timer);
}

// ---------------------------------------------------------------- criterion 2

std::vector<GroupSpec> multi_prime_corpus() {
  if (g_quick)
    return {GroupSpec({2, 3}), GroupSpec({4, 3}), GroupSpec({2, 2, 3})};
  return {GroupSpec({2, 3}),     GroupSpec({4, 3}),    GroupSpec({2, 2, 3}),
          GroupSpec({8, 9}),     GroupSpec({2, 2, 9}), GroupSpec({16, 3}),
          GroupSpec({4, 9, 5}),  GroupSpec({9, 25}),   GroupSpec({2, 3, 5, 7}),
          GroupSpec({8, 9, 5}),  GroupSpec({4, 3, 25})};
}

void criterion_2(StepStats& qaa_stats) {
  Timer timer;
  std::vector<InstanceRef> corpus;
  for (const auto& g : multi_prime_corpus()) {
    auto pairs = all_pairs_of(g);
    corpus.insert(corpus.end(), pairs.begin(), pairs.end());
  }
  const int trials = g_quick ? 5 : 50;

  // Node probes identify their component by its moduli.
  std::atomic<u64> bad{0};
  std::atomic<u64> runs{0};
  parallel_for(corpus.size(), [&](std::size_t idx) {
    const GroupSpec& g = corpus[idx].group;
    const Subgroup& k = corpus[idx].hidden;
    auto comps = sylow_decompose(g);

    u64 expect_max = 0;
    std::map<std::vector<i64>, OrthFlats> orth_by_moduli;
    for (const auto& c : comps) {
      Subgroup ki = project_subgroup(k, c);
      expect_max = std::max<u64>(
          expect_max, 3ull * (c.group.chain_length() - ki.chain_length()));
      orth_by_moduli.emplace(c.group.moduli(),
                             orth_flats_of(ki.orthogonal()));
    }
    const u64 expect_total = 3ull * (g.chain_length() - k.chain_length());

    QaaProbe probe = [&](const QaaStepView& view) {
      const GroupSpec& domain = view.marked.group();
      scan_step(view, orth_by_moduli.at(domain.moduli()), qaa_stats);
    };

    for (int t = 0; t < trials; ++t) {
      HiddenOracle o = build_hidden_function(
          g, k, derive_seed(kMasterSeed, idx * 1000 + 13));
      std::vector<u64> seeds(comps.size());
      for (std::size_t i = 0; i < seeds.size(); ++i)
        seeds[i] = derive_seed(derive_seed(kMasterSeed ^ 0x22ull,
                                           idx * 64 + t),
                               i);
      DistributedReport r = run_edk(g, o, k.order(), seeds, probe);
      ++runs;
      if (!(r.recovered == k) || r.max_node_queries != expect_max ||
          r.total_queries != expect_total || r.quantum_messages != 0)
        ++bad;
    }
  });
  report(2, bad == 0,
         "distributed exact runs: " + std::to_string(corpus.size()) +
             " instances x " + std::to_string(trials) +
             " trials, recovery, per-node max and total query identities, "
             "zero quantum messages in " +
             std::to_string(runs - bad) + "/" + std::to_string(runs),
         timer);
}

// ---------------------------------------------------------------- criterion 3

void criterion_3(const StepStats& stats) {
  Timer timer;
  std::ostringstream what;
  what << "amplification steps: " << stats.steps() << " probed, max span mass "
       << std::scientific << std::setprecision(2) << stats.max_marked_mass()
       << " (<= 1e-10), max complement deviation "
       << stats.max_complement_dev() << " (<= 1e-9); "
       << stats.degenerate_steps()
       << " degenerate steps kept mass on the orthogonal group (min "
       << stats.min_orth_mass() << ")";
  bool pass = stats.steps() > 0 && stats.max_marked_mass() <= 1e-10 &&
              stats.max_complement_dev() <= 1e-9 &&
              (stats.degenerate_steps() == 0 ||
               stats.min_orth_mass() >= 1.0 - 1e-10);
  report(3, pass, what.str(), timer);
}

// ---------------------------------------------------------------- criterion 4

void criterion_4() {
  Timer timer;
  std::vector<InstanceRef> corpus = exhaustive_corpus(g_quick ? 16 : 64);
  std::size_t exhaustive_count = corpus.size();

  // 64 < |G| <= 256: all groups, seeded subgroup samples per group.
  if (!g_quick) {
    Rng pick(derive_seed(kMasterSeed, 0x44ull));
    for (const auto& g : all_group_specs_up_to(256)) {
      if (g.order() <= 64) continue;
      std::set<IntMat> seen;
      auto add = [&](const Subgroup& s) {
        if (seen.insert(s.basis()).second) corpus.push_back({g, s});
      };
      add(Subgroup::trivial(g));
      add(Subgroup::full(g));
      for (int i = 0; i < 6; ++i) {
        std::vector<GroupElement> gens;
        for (int j = 0; j < 1 + static_cast<int>(pick.below(2)); ++j)
          gens.emplace_back(
              g, g.coords_of(static_cast<i64>(pick.below(g.order()))));
        add(Subgroup::span(g, gens));
      }
    }
  }

  std::atomic<u64> bad{0};
  parallel_for(corpus.size(), [&](std::size_t idx) {
    const GroupSpec& g = corpus[idx].group;
    const Subgroup& k = corpus[idx].hidden;
    HiddenOracle o =
        build_hidden_function(g, k, derive_seed(kMasterSeed, idx + 9));
    RegisterLayout layout = RegisterLayout::for_algorithm(g, g);
    StateVector s = init_basis(layout, std::vector<i64>(layout.dims.size(), 0));
    apply_a(s, o, false);
    std::vector<double> p = marginal_first(s, g.num_factors());

    Subgroup orth = k.orthogonal();
    double outside = 0.0;
    bool uniform_ok = true;
    const double expect = 1.0 / static_cast<double>(orth.order());
    for (i64 a = 0; a < g.order(); ++a) {
      if (orth.contains(GroupElement(g, g.coords_of(a))))
        uniform_ok = uniform_ok && std::abs(p[a] - expect) <= 1e-10;
      else
        outside += p[a];
    }
    if (outside > 1e-10 || !uniform_ok) ++bad;
  });
  report(4, bad == 0,
         "measurement support after the Fourier sandwich equals K^perp "
         "(mass outside <= 1e-10, uniform inside) on " +
             std::to_string(exhaustive_count) + " exhaustive + " +
             std::to_string(corpus.size() - exhaustive_count) +
             " sampled instances up to order 256",
         timer);
}

// ---------------------------------------------------------------- criterion 5

void criterion_5() {
  Timer timer;
  struct Sample {
    GroupSpec g;
    Subgroup k;
  };
  std::vector<Sample> instances;
  auto mk = [](std::vector<i64> moduli,
               std::vector<std::vector<i64>> gens) -> Sample {
    GroupSpec g(std::move(moduli));
    IntMat rows;
    for (auto& r : gens) rows.push_back(std::move(r));
    return {g, Subgroup::span_rows(g, std::move(rows))};
  };
  instances.push_back(mk({4, 3}, {{2, 0}}));
  instances.push_back(mk({2, 2}, {{1, 1}}));
  instances.push_back(mk({8}, {{4}}));
  instances.push_back(mk({9, 3}, {{3, 1}}));
  instances.push_back(mk({2, 3, 5}, {{1, 0, 0}}));
  instances.push_back(mk({16}, {{8}}));
  instances.push_back(mk({2, 2, 3}, {{1, 1, 0}}));
  instances.push_back(mk({25}, {}));
  instances.push_back(mk({27}, {{9}}));
  instances.push_back(mk({4, 9}, {{2, 3}}));

  const int trials = g_quick ? 100 : 500;
  const std::vector<double> epsilons = {0.5, 0.25, 0.1};

  std::atomic<u64> bad{0};
  std::mutex log_mu;
  std::ostringstream log;
  parallel_for(instances.size() * epsilons.size(), [&](std::size_t idx) {
    const Sample& inst = instances[idx / epsilons.size()];
    const double eps = epsilons[idx % epsilons.size()];
    const std::size_t m = sylow_decompose(inst.g).size();

    int ok_standard = 0, ok_dk = 0;
    for (int t = 0; t < trials; ++t) {
      const u64 ts = derive_seed(kMasterSeed ^ 0x55ull, idx * 4096 + t);
      {
        HiddenOracle o = build_hidden_function(inst.g, inst.k, ts);
        Rng rng(derive_seed(ts, 1));
        if (run_standard(inst.g, o, eps, rng).success) ++ok_standard;
      }
      {
        HiddenOracle o = build_hidden_function(inst.g, inst.k, ts);
        std::vector<u64> seeds(m);
        for (std::size_t i = 0; i < m; ++i) seeds[i] = derive_seed(ts, 2 + i);
        if (run_dk_probabilistic(inst.g, o, eps, seeds).success) ++ok_dk;
      }
    }
    const double sigma = std::sqrt(eps * (1.0 - eps) / trials);
    const double bound = 1.0 - eps - 3.0 * sigma;
    if (static_cast<double>(ok_standard) / trials < bound) ++bad;
    if (static_cast<double>(ok_dk) / trials < bound) ++bad;
  });
  report(5, bad == 0,
         "probabilistic success bounds: " + std::to_string(instances.size()) +
             " instances x {0.5,0.25,0.1} x " + std::to_string(trials) +
             " trials for the sampling and distributed-sampling runs, all "
             "empirical rates >= 1-eps-3sigma",
         timer);
}

// ---------------------------------------------------------------- criterion 6

void criterion_6() {
  Timer timer;
  auto results = verify_group_properties(g_quick ? 24 : 64,
                                         derive_seed(kMasterSeed, 0x66ull));
  u64 checked = 0, failures = 0;
  for (const auto& r : results) {
    checked += r.checked;
    failures += r.failures;
  }
  report(6, failures == 0,
         "group identities vs element-sweep oracles (double orthogonal, "
         "order product, chain-length additivity, rank subadditivity, "
         "component round trips): " +
             std::to_string(checked) + " checks, " +
             std::to_string(failures) + " failures",
         timer);
}

// ---------------------------------------------------------------- criterion 7

void criterion_7() {
  Timer timer;
  std::set<std::vector<i64>> seen;
  std::vector<GroupSpec> pgroups;
  auto base = all_group_specs_up_to(g_quick ? 24 : 64);
  base.push_back(GroupSpec({8, 9}));
  base.push_back(GroupSpec({4, 3, 25}));
  for (const auto& g : base)
    for (const auto& c : sylow_decompose(g))
      if (seen.insert(c.group.moduli()).second) pgroups.push_back(c.group);

  std::atomic<u64> checked{0}, bad{0};
  parallel_for(pgroups.size(), [&](std::size_t gi) {
    const GroupSpec& gi_spec = pgroups[gi];
    for (const auto& ki : all_subgroups(gi_spec)) {
      Subgroup orth = ki.orthogonal();
      auto members = ki.elements();
      for (i64 m = 0; m < gi_spec.order(); ++m) {
        GroupElement me(gi_spec, gi_spec.coords_of(m));
        if (orth.contains(me)) continue;
        cplx sum{0.0, 0.0};
        for (const auto& kk : members) {
          Rational01 ip = bilinear(kk, me);
          sum += std::polar(1.0, -2.0 * std::numbers::pi *
                                     static_cast<double>(ip.numerator()) /
                                     static_cast<double>(ip.denominator()));
        }
        ++checked;
        if (std::abs(sum) > 1e-10) ++bad;
      }
    }
  });
  report(7, bad == 0,
         "character sums over K_i vanish (<= 1e-10) for every element off "
         "K_i^perp: " +
             std::to_string(checked.load()) + " sums across " +
             std::to_string(pgroups.size()) + " p-groups",
         timer);
}

// ---------------------------------------------------------------- criterion 8

void criterion_8() {
  Timer timer;
  std::vector<InstanceRef> corpus = exhaustive_corpus(g_quick ? 24 : 64);
  for (const auto& extra : {GroupSpec({8, 9}), GroupSpec({4, 3, 25})}) {
    auto pairs = all_pairs_of(extra);
    corpus.insert(corpus.end(), pairs.begin(), pairs.end());
  }

  std::atomic<u64> bad{0};
  std::mutex ratio_mu;
  double max_ratio = 0.0;
  parallel_for(corpus.size(), [&](std::size_t idx) {
    const GroupSpec& g = corpus[idx].group;
    const Subgroup& k = corpus[idx].hidden;
    auto comps = sylow_decompose(g);

    HiddenOracle o =
        build_hidden_function(g, k, derive_seed(kMasterSeed, idx + 21));
    ClassicalReport r = run_edck(g, o, /*parallel=*/false);

    HiddenOracle ob =
        build_hidden_function(g, k, derive_seed(kMasterSeed, idx + 21));
    Subgroup reference = brute_force_solve(g, ob);

    bool ok = r.recovered == reference && r.recovered == k;
    for (std::size_t i = 0; i < comps.size(); ++i)
      ok = ok && r.queries_per_node[i] <=
                     static_cast<u64>(comps[i].group.order());
    if (!ok) ++bad;

    // Logged metric only: measured constant against the cited bound shape,
    // on instances with every K_i proper.
    bool all_proper = true;
    for (std::size_t i = 0; i < comps.size(); ++i)
      all_proper = all_proper &&
                   gcd_i64(k.order(), comps[i].group.order()) <
                       comps[i].group.order();
    if (all_proper && k.order() > 1) {
      const double ratio =
          static_cast<double>(r.total_queries) /
          (std::sqrt(static_cast<double>(g.order()) /
                     static_cast<double>(k.order()) *
                     std::log2(static_cast<double>(k.order()))) +
           std::log2(static_cast<double>(k.order())));
      std::lock_guard<std::mutex> lock(ratio_mu);
      max_ratio = std::max(max_ratio, ratio);
    }
  });
  std::ostringstream what;
  what << "deterministic per-node solver equals brute force on "
       << corpus.size()
       << " instances with per-node queries <= |G_i|; measured total-query "
          "constant c <= "
       << std::setprecision(3) << max_ratio
       << " against sqrt(|G|/|K| log|K|) + log|K| (logged, not asserted)";
  report(8, bad == 0, what.str(), timer);
}

// ---------------------------------------------------------------- criterion 9

void criterion_9() {
  Timer timer;
  const std::vector<GroupSpec> groups = {GroupSpec({2, 2, 2, 2}),
                                         GroupSpec({9, 3}), GroupSpec({8})};
  const int trials = g_quick ? 400 : 2000;
  u64 bad = 0;
  std::ostringstream what;
  what << "uniform samples of size rank(G)+ceil(log2(2/eps)) generate G: ";
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    const GroupSpec& g = groups[gi];
    for (double eps : {0.5, 0.1}) {
      const int samples = g.rank() + ceil_log2(2.0 / eps);
      Rng rng(derive_seed(kMasterSeed ^ 0x99ull,
                          gi * 10 + static_cast<u64>(eps * 100)));
      int ok = 0;
      for (int t = 0; t < trials; ++t) {
        std::vector<GroupElement> gens;
        for (int i = 0; i < samples; ++i)
          gens.emplace_back(
              g, g.coords_of(static_cast<i64>(rng.below(g.order()))));
        if (Subgroup::span(g, gens).is_full()) ++ok;
      }
      const double sigma = std::sqrt(eps * (1.0 - eps) / trials);
      const double rate = static_cast<double>(ok) / trials;
      if (rate < 1.0 - eps - 3.0 * sigma) ++bad;
      what << g.to_string() << "@" << eps << "=" << std::setprecision(3)
           << rate << " ";
    }
  }
  what << "(each >= 1-eps-3sigma over " << trials << " trials)";
  report(9, bad == 0, what.str(), timer);
}

// --------------------------------------------------------------- criterion 10

void criterion_10() {
  Timer timer;
  GroupSpec g({4, 3});
  Subgroup k = Subgroup::span(g, {GroupElement(g, {2, 0})});
  HiddenOracle o =
      build_hidden_function(g, k, derive_seed(kMasterSeed, 0xAAull));
  RegisterLayout layout = RegisterLayout::for_algorithm(g, g);
  Rng rng(derive_seed(kMasterSeed, 0xABull));

  u64 bad = 0;
  double worst_norm = 0.0, worst_rt = 0.0;
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
        apply_phase_r0(s, 0.37 * t);
        break;
      case 3:
        apply_phase_ra(s, 0.21 * t, k);
        break;
      case 4:
        apply_a(s, o, t % 2 == 0);
        break;
      case 5:
        apply_q(s, o, qaa_phase(5.0 / 6.0), k);
        break;
    }
    worst_norm = std::max(worst_norm, std::abs(s.norm_sq() - 1.0));
    if (std::abs(s.norm_sq() - 1.0) > 1e-12) ++bad;

    StateVector rt = orig;
    for (std::size_t reg = 0; reg < layout.dims.size(); ++reg)
      apply_qft(rt, reg, false);
    for (std::size_t reg = 0; reg < layout.dims.size(); ++reg)
      apply_qft(rt, reg, true);
    double diff = 0.0;
    for (std::size_t i = 0; i < rt.amps.size(); ++i)
      diff = std::max(diff, std::abs(rt.amps[i] - orig.amps[i]));
    worst_rt = std::max(worst_rt, diff);
    if (diff > 1e-12) ++bad;
  }
  std::ostringstream what;
  what << "simulator health on 100 random states: worst norm drift "
       << std::scientific << std::setprecision(2) << worst_norm
       << ", worst Fourier round-trip deviation " << worst_rt
       << " (both <= 1e-12)";
  report(10, bad == 0, what.str(), timer);
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--quick") == 0) g_quick = true;
  if (g_quick) std::cout << "(quick mode: reduced corpora and trials)\n";

  Timer total;
  StepStats qaa_stats;
  criterion_1(qaa_stats);
  criterion_2(qaa_stats);
  criterion_3(qaa_stats);
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();

  std::cout << (g_failures == 0 ? "acceptance: all criteria passed"
                                : "acceptance: FAILURES present")
            << "  (total " << std::fixed << std::setprecision(1)
            << total.seconds() << " s)\n";
  return g_failures == 0 ? 0 : 1;
}
