#pragma once

#include <string>

#include "ahsp/centralized.hpp"
#include "ahsp/classical.hpp"
#include "ahsp/distributed.hpp"

namespace ahsp {

// One CSV row of the shared experiment schema. Numeric fields are doubles so
// that summary rows can carry means; integral values print without decimals.
struct TrialRow {
  std::string algorithm;
  i64 group_order = 0;
  int len_g = 0;
  int len_k = 0;
  int components = 0;
  double iterations = 0;
  double queries_max_node = 0;
  double queries_total = 0;
  double classical_bytes = 0;
  double quantum_msgs = 0;
  double success = 0;
};

std::string csv_header();
std::string csv_row(const TrialRow& row);

TrialRow row_from_run(const std::string& algorithm, const GroupSpec& g,
                      int len_k, const RunReport& r);
TrialRow row_from_distributed(const std::string& algorithm, const GroupSpec& g,
                              int len_k, const DistributedReport& r);
TrialRow row_from_classical(const std::string& algorithm, const GroupSpec& g,
                            int len_k, const ClassicalReport& r);

// Mean of the numeric fields, tagged "<algorithm>:summary".
TrialRow summary_row(const std::vector<TrialRow>& rows);

std::string run_report_to_json(const RunReport& r);
std::string distributed_report_to_json(const DistributedReport& r);
std::string classical_report_to_json(const ClassicalReport& r);

}  // namespace ahsp
