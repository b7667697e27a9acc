#include <doctest.h>

#include "ahsp/instance.hpp"
#include "ahsp/report_io.hpp"

using namespace ahsp;

TEST_CASE("instance json round trip") {
  GroupSpec g({4, 3});
  Subgroup k = Subgroup::span(g, {GroupElement(g, {2, 0})});
  ProblemInstance inst{g, k, 77};
  std::string text = instance_to_json(inst);
  ProblemInstance back = instance_from_json(text);
  CHECK(back.group == g);
  CHECK(back.hidden == k);
  CHECK(back.shift_seed == 77);

  // identical instances produce identical oracles
  HiddenOracle a = inst.make_oracle();
  HiddenOracle b = back.make_oracle();
  for (i64 x = 0; x < g.order(); ++x) {
    GroupElement e(g, g.coords_of(x));
    CHECK(a.query(e) == b.query(e));
  }
}

TEST_CASE("group and subgroup json") {
  GroupSpec g({8, 9});
  CHECK(group_from_json(group_to_json(g)) == g);
  Subgroup k = Subgroup::span(g, {GroupElement(g, {4, 3})});
  CHECK(subgroup_from_json(g, subgroup_to_json(k)) == k);
  CHECK(subgroup_to_json(Subgroup::trivial(g)) == "[]");
}

TEST_CASE("csv schema is pinned") {
  CHECK(csv_header() ==
        "algorithm,|G|,len_G,len_K,m,iterations,queries_max_node,"
        "queries_total,classical_bytes,quantum_msgs,success");
}

TEST_CASE("csv rows format integral values without decimals") {
  TrialRow r;
  r.algorithm = "exact";
  r.group_order = 12;
  r.len_g = 3;
  r.len_k = 1;
  r.components = 2;
  r.iterations = 2;
  r.queries_max_node = 6;
  r.queries_total = 6;
  r.success = 1;
  CHECK(csv_row(r) == "exact,12,3,1,2,2,6,6,0,0,1");

  TrialRow s = summary_row({r, r});
  CHECK(s.algorithm == "exact:summary");
  CHECK(csv_row(s) == "exact:summary,12,3,1,2,2,6,6,0,0,1");

  TrialRow half = r;
  half.success = 0;
  TrialRow mixed = summary_row({r, half});
  CHECK(csv_row(mixed) == "exact:summary,12,3,1,2,2,6,6,0,0,0.5");
}

TEST_CASE("report json fields") {
  GroupSpec g({4, 3});
  Subgroup k = Subgroup::span(g, {GroupElement(g, {2, 0})});
  HiddenOracle o = build_hidden_function(g, k, 3);
  Rng rng(1);
  RunReport r = run_exact(g, o, 2, rng);
  std::string j = run_report_to_json(r);
  CHECK(j.find("\"oracle_queries\": 6") != std::string::npos);
  CHECK(j.find("\"success\": true") != std::string::npos);
}
