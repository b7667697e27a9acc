#include "ahsp/report_io.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

namespace ahsp {

namespace {

// Integral values print without a decimal point; everything else with six
// significant digits. Keeps CSV output byte-stable for a given config.
std::string format_num(double v) {
  if (std::isfinite(v) && v == std::floor(v) && std::abs(v) < 1e15) {
    std::ostringstream os;
    os << static_cast<long long>(v);
    return os.str();
  }
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

int component_count(const GroupSpec& g) {
  return static_cast<int>(g.sylow_blocks().size());
}

nlohmann::json measured_json(const std::vector<GroupElement>& measured) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& m : measured) arr.push_back(m.coords());
  return arr;
}

nlohmann::json subgroup_json(const Subgroup& s) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& g : s.generators()) rows.push_back(g.coords());
  return rows;
}

}  // namespace

std::string csv_header() {
  return "algorithm,|G|,len_G,len_K,m,iterations,queries_max_node,"
         "queries_total,classical_bytes,quantum_msgs,success";
}

std::string csv_row(const TrialRow& r) {
  std::ostringstream os;
  os << r.algorithm << ',' << r.group_order << ',' << r.len_g << ','
     << r.len_k << ',' << r.components << ',' << format_num(r.iterations)
     << ',' << format_num(r.queries_max_node) << ','
     << format_num(r.queries_total) << ',' << format_num(r.classical_bytes)
     << ',' << format_num(r.quantum_msgs) << ',' << format_num(r.success);
  return os.str();
}

TrialRow row_from_run(const std::string& algorithm, const GroupSpec& g,
                      int len_k, const RunReport& r) {
  TrialRow row;
  row.algorithm = algorithm;
  row.group_order = g.order();
  row.len_g = g.chain_length();
  row.len_k = len_k;
  row.components = component_count(g);
  row.iterations = r.iterations;
  row.queries_max_node = static_cast<double>(r.oracle_queries);
  row.queries_total = static_cast<double>(r.oracle_queries);
  row.classical_bytes = 0;
  row.quantum_msgs = 0;
  row.success = r.success ? 1 : 0;
  return row;
}

TrialRow row_from_distributed(const std::string& algorithm, const GroupSpec& g,
                              int len_k, const DistributedReport& r) {
  TrialRow row;
  row.algorithm = algorithm;
  row.group_order = g.order();
  row.len_g = g.chain_length();
  row.len_k = len_k;
  row.components = static_cast<int>(r.node_reports.size());
  int max_iter = 0;
  for (const auto& n : r.node_reports)
    max_iter = std::max(max_iter, n.iterations);
  row.iterations = max_iter;
  row.queries_max_node = static_cast<double>(r.max_node_queries);
  row.queries_total = static_cast<double>(r.total_queries);
  row.classical_bytes = static_cast<double>(r.classical_bytes);
  row.quantum_msgs = static_cast<double>(r.quantum_messages);
  row.success = r.success ? 1 : 0;
  return row;
}

TrialRow row_from_classical(const std::string& algorithm, const GroupSpec& g,
                            int len_k, const ClassicalReport& r) {
  TrialRow row;
  row.algorithm = algorithm;
  row.group_order = g.order();
  row.len_g = g.chain_length();
  row.len_k = len_k;
  row.components = static_cast<int>(r.queries_per_node.size());
  row.iterations = 0;
  row.queries_max_node = static_cast<double>(r.max_node_queries);
  row.queries_total = static_cast<double>(r.total_queries);
  row.classical_bytes = static_cast<double>(r.classical_bytes);
  row.quantum_msgs = 0;
  row.success = r.success ? 1 : 0;
  return row;
}

TrialRow summary_row(const std::vector<TrialRow>& rows) {
  if (rows.empty()) throw std::invalid_argument("summary_row: no rows");
  TrialRow s = rows.front();
  s.algorithm = rows.front().algorithm + ":summary";
  s.iterations = s.queries_max_node = s.queries_total = 0;
  s.classical_bytes = s.quantum_msgs = s.success = 0;
  for (const auto& r : rows) {
    s.iterations += r.iterations;
    s.queries_max_node += r.queries_max_node;
    s.queries_total += r.queries_total;
    s.classical_bytes += r.classical_bytes;
    s.quantum_msgs += r.quantum_msgs;
    s.success += r.success;
  }
  const double n = static_cast<double>(rows.size());
  s.iterations /= n;
  s.queries_max_node /= n;
  s.queries_total /= n;
  s.classical_bytes /= n;
  s.quantum_msgs /= n;
  s.success /= n;
  return s;
}

std::string run_report_to_json(const RunReport& r) {
  nlohmann::json j;
  j["recovered"] = subgroup_json(r.recovered);
  j["planned_iterations"] = r.planned_iterations;
  j["iterations"] = r.iterations;
  j["oracle_queries"] = r.oracle_queries;
  j["measured"] = measured_json(r.measured);
  j["success"] = r.success;
  j["wall_time_ms"] = r.wall_time_ms;
  return j.dump(2);
}

std::string distributed_report_to_json(const DistributedReport& r) {
  nlohmann::json j;
  j["recovered"] = subgroup_json(r.recovered);
  j["max_node_queries"] = r.max_node_queries;
  j["total_queries"] = r.total_queries;
  j["classical_messages"] = r.classical_messages;
  j["classical_bytes"] = r.classical_bytes;
  j["quantum_messages"] = r.quantum_messages;
  j["success"] = r.success;
  j["wall_time_ms"] = r.wall_time_ms;
  nlohmann::json nodes = nlohmann::json::array();
  for (const auto& n : r.node_reports) {
    nlohmann::json nj;
    nj["node_index"] = n.node_index;
    nj["local_orthogonal"] = subgroup_json(n.local_orthogonal);
    nj["planned_iterations"] = n.planned_iterations;
    nj["iterations"] = n.iterations;
    nj["local_queries"] = n.local_queries;
    nj["seed"] = n.seed;
    nj["state_dim"] = n.state_dim;
    nj["measured"] = measured_json(n.measured);
    nodes.push_back(std::move(nj));
  }
  j["node_reports"] = std::move(nodes);
  return j.dump(2);
}

std::string classical_report_to_json(const ClassicalReport& r) {
  nlohmann::json j;
  j["recovered"] = subgroup_json(r.recovered);
  j["queries_per_node"] = r.queries_per_node;
  j["total_queries"] = r.total_queries;
  j["max_node_queries"] = r.max_node_queries;
  j["classical_bytes"] = r.classical_bytes;
  j["success"] = r.success;
  return j.dump(2);
}

}  // namespace ahsp
