#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ahsp/classical.hpp"
#include "ahsp/distributed.hpp"
#include "ahsp/instance.hpp"
#include "ahsp/parallel.hpp"
#include "ahsp/report_io.hpp"
#include "ahsp/verify.hpp"

using namespace ahsp;

namespace {

std::vector<i64> parse_int_list(const std::string& text, char sep) {
  std::vector<i64> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (item.empty()) continue;
    out.push_back(std::stoll(item));
  }
  return out;
}

Subgroup parse_subgroup(const GroupSpec& g, const std::string& spec,
                        u64 seed) {
  if (spec == "random") {
    Rng rng(derive_seed(seed, 0x5u));
    auto comps = sylow_decompose(g);
    std::vector<Subgroup> parts;
    for (const auto& c : comps) {
      std::vector<GroupElement> gens;
      u64 count = rng.below(c.group.num_factors() + 1);
      for (u64 i = 0; i < count; ++i)
        gens.emplace_back(c.group, c.group.coords_of(static_cast<i64>(
                                       rng.below(c.group.order()))));
      parts.push_back(Subgroup::span(c.group, gens));
    }
    return direct_sum_subgroups(g, comps, parts);
  }
  IntMat rows;
  std::stringstream ss(spec);
  std::string row;
  while (std::getline(ss, row, ';')) {
    std::vector<i64> coords = parse_int_list(row, ',');
    if (coords.size() != g.num_factors())
      throw std::invalid_argument("subgroup generator arity mismatch: " + row);
    rows.push_back(std::move(coords));
  }
  return Subgroup::span_rows(g, std::move(rows));
}

struct RunConfig {
  std::string algorithm;
  std::optional<double> epsilon;
  int trials = 1;
  u64 master_seed = 0;
};

std::vector<TrialRow> run_trials(const ProblemInstance& inst,
                                 const RunConfig& cfg,
                                 std::vector<std::string>* json_reports) {
  const GroupSpec& g = inst.group;
  const int len_k = inst.hidden.chain_length();
  const bool needs_epsilon =
      cfg.algorithm == "standard" || cfg.algorithm == "dk";
  if (needs_epsilon && !cfg.epsilon)
    throw std::invalid_argument("--epsilon is required for " + cfg.algorithm);

  const std::size_t m = sylow_decompose(g).size();
  std::vector<TrialRow> rows(cfg.trials);
  std::vector<std::string> jsons(cfg.trials);

  parallel_for(static_cast<std::size_t>(cfg.trials), [&](std::size_t t) {
    const u64 trial_seed = derive_seed(cfg.master_seed, t);
    HiddenOracle oracle = inst.make_oracle();
    if (cfg.algorithm == "standard") {
      Rng rng(trial_seed);
      RunReport r = run_standard(g, oracle, *cfg.epsilon, rng);
      rows[t] = row_from_run("standard", g, len_k, r);
      jsons[t] = run_report_to_json(r);
    } else if (cfg.algorithm == "exact") {
      Rng rng(trial_seed);
      RunReport r = run_exact(g, oracle, inst.hidden.order(), rng);
      rows[t] = row_from_run("exact", g, len_k, r);
      jsons[t] = run_report_to_json(r);
    } else if (cfg.algorithm == "dk" || cfg.algorithm == "edk") {
      std::vector<u64> node_seeds(m);
      for (std::size_t i = 0; i < m; ++i)
        node_seeds[i] = derive_seed(trial_seed, i);
      DistributedReport r =
          cfg.algorithm == "dk"
              ? run_dk_probabilistic(g, oracle, *cfg.epsilon, node_seeds)
              : run_edk(g, oracle, inst.hidden.order(), node_seeds);
      rows[t] = row_from_distributed(cfg.algorithm, g, len_k, r);
      jsons[t] = distributed_report_to_json(r);
    } else if (cfg.algorithm == "edck") {
      ClassicalReport r = run_edck(g, oracle, /*parallel=*/true);
      rows[t] = row_from_classical("edck", g, len_k, r);
      jsons[t] = classical_report_to_json(r);
    } else if (cfg.algorithm == "brute") {
      Subgroup rec = brute_force_solve(g, oracle);
      ClassicalReport r;
      r.recovered = rec;
      r.queries_per_node = {oracle.query_count()};
      r.total_queries = oracle.query_count();
      r.max_node_queries = oracle.query_count();
      r.success = rec == inst.hidden;
      rows[t] = row_from_classical("brute", g, len_k, r);
      jsons[t] = classical_report_to_json(r);
    } else {
      throw std::invalid_argument("unknown algorithm: " + cfg.algorithm);
    }
  });

  if (json_reports) *json_reports = std::move(jsons);
  return rows;
}

void emit_csv(std::ostream& out, const std::vector<TrialRow>& rows,
              bool with_header) {
  if (with_header) out << csv_header() << "\n";
  for (const auto& r : rows) out << csv_row(r) << "\n";
  out << csv_row(summary_row(rows)) << "\n";
}

int cmd_run(const std::string& instance_path, const RunConfig& cfg,
            const std::string& format, const std::string& output) {
  ProblemInstance inst = load_instance(instance_path);
  std::vector<std::string> jsons;
  std::vector<TrialRow> rows =
      run_trials(inst, cfg, format == "json" ? &jsons : nullptr);

  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!output.empty()) {
    file.open(output);
    if (!file) throw std::runtime_error("cannot open output: " + output);
    out = &file;
  }
  if (format == "csv") {
    emit_csv(*out, rows, true);
  } else {
    *out << "[\n";
    for (std::size_t i = 0; i < jsons.size(); ++i)
      *out << jsons[i] << (i + 1 < jsons.size() ? ",\n" : "\n");
    *out << "]\n";
  }
  return 0;
}

int cmd_verify(const std::string& scope, i64 max_order, u64 seed) {
  std::vector<PropertyResult> results;
  if (scope == "group" || scope == "all") {
    auto r = verify_group_properties(max_order, seed);
    results.insert(results.end(), r.begin(), r.end());
  }
  if (scope == "sim" || scope == "all") {
    auto r = verify_sim_properties(max_order, seed);
    results.insert(results.end(), r.begin(), r.end());
  }
  bool ok = all_passed(results);
  for (const auto& r : results)
    std::cout << "  [" << (r.failures == 0 ? "ok" : "FAIL") << "] " << r.name
              << ": checked=" << r.checked << " failures=" << r.failures
              << "\n";
  std::cout << (ok ? "verify: all properties hold\n"
                   : "verify: FAILURES detected\n");
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hidden-subgroup toolkit for finite Abelian groups"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a problem instance file");
  std::string gen_moduli, gen_subgroup = "random", gen_out;
  u64 gen_seed = 0;
  std::optional<u64> gen_shift_seed;
  gen->add_option("--moduli", gen_moduli,
                  "Cyclic factor sizes, prime powers (e.g. 4,3)")
      ->required();
  gen->add_option("--subgroup", gen_subgroup,
                  "Generator rows ';'-separated (e.g. 2,0;0,1) or 'random'");
  gen->add_option("--seed", gen_seed, "Seed for random subgroup sampling");
  gen->add_option("--shift-seed", gen_shift_seed,
                  "Oracle label shift seed (default: derived from --seed)");
  gen->add_option("--out", gen_out, "Output instance path")->required();

  // run
  auto* run = app.add_subcommand("run", "Run an algorithm on an instance");
  std::string run_instance, run_alg, run_format = "csv", run_output;
  RunConfig run_cfg;
  double run_eps = 0.0;
  auto* eps_opt = run->add_option("--epsilon", run_eps,
                                  "Failure budget for standard/dk");
  run->add_option("--instance", run_instance, "Instance file")->required();
  run->add_option("--algorithm", run_alg, "standard|exact|dk|edk|edck|brute")
      ->required()
      ->check(CLI::IsMember({"standard", "exact", "dk", "edk", "edck",
                             "brute"}));
  run->add_option("--trials", run_cfg.trials, "Number of seeded trials")
      ->check(CLI::PositiveNumber);
  run->add_option("--master-seed", run_cfg.master_seed, "Master seed");
  run->add_option("--format", run_format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  run->add_option("--output", run_output, "Output path (default stdout)");

  // verify
  auto* verify = app.add_subcommand("verify", "Run the invariant suites");
  std::string verify_scope;
  i64 verify_max_order = 64;
  u64 verify_seed = 2024;
  verify->add_option("--scope", verify_scope, "group|sim|all")
      ->required()
      ->check(CLI::IsMember({"group", "sim", "all"}));
  verify->add_option("--max-order", verify_max_order,
                     "Exhaustive corpus bound");
  verify->add_option("--seed", verify_seed, "Seed for sampled properties");

  // bench
  auto* bench = app.add_subcommand("bench", "Sweep algorithms over instances");
  std::string bench_instances, bench_alg, bench_output;
  RunConfig bench_cfg;
  double bench_eps = 0.0;
  auto* bench_eps_opt =
      bench->add_option("--epsilon", bench_eps, "Failure budget");
  bench->add_option("--instances", bench_instances,
                    "Comma-separated instance files")
      ->required();
  bench->add_option("--algorithm", bench_alg,
                    "standard|exact|dk|edk|edck|brute")
      ->required()
      ->check(CLI::IsMember({"standard", "exact", "dk", "edk", "edck",
                             "brute"}));
  bench->add_option("--trials", bench_cfg.trials, "Trials per instance")
      ->check(CLI::PositiveNumber);
  bench->add_option("--master-seed", bench_cfg.master_seed, "Master seed");
  bench->add_option("--output", bench_output, "Output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      GroupSpec g(parse_int_list(gen_moduli, ','));
      Subgroup k = parse_subgroup(g, gen_subgroup, gen_seed);
      u64 shift = gen_shift_seed.value_or(derive_seed(gen_seed, 0xABCDu));
      save_instance(gen_out, ProblemInstance{g, k, shift});
      std::cout << "wrote " << gen_out << " (|G|=" << g.order()
                << ", |K|=" << k.order() << ")\n";
      return 0;
    }
    if (run->parsed()) {
      if (eps_opt->count() > 0) run_cfg.epsilon = run_eps;
      run_cfg.algorithm = run_alg;
      return cmd_run(run_instance, run_cfg, run_format, run_output);
    }
    if (verify->parsed())
      return cmd_verify(verify_scope, verify_max_order, verify_seed);
    if (bench->parsed()) {
      if (bench_eps_opt->count() > 0) bench_cfg.epsilon = bench_eps;
      bench_cfg.algorithm = bench_alg;
      std::ofstream file;
      std::ostream* out = &std::cout;
      if (!bench_output.empty()) {
        file.open(bench_output);
        if (!file)
          throw std::runtime_error("cannot open output: " + bench_output);
        out = &file;
      }
      *out << csv_header() << "\n";
      std::stringstream ss(bench_instances);
      std::string path;
      while (std::getline(ss, path, ',')) {
        if (path.empty()) continue;
        ProblemInstance inst = load_instance(path);
        std::vector<TrialRow> rows = run_trials(inst, bench_cfg, nullptr);
        for (const auto& r : rows) *out << csv_row(r) << "\n";
        *out << csv_row(summary_row(rows)) << "\n";
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (std::string(e.what()).find("not a prime power") != std::string::npos)
      std::cerr << "hint: write each factor as a prime power, e.g. 6 -> 2,3\n";
    return 1;
  }
  return 0;
}
