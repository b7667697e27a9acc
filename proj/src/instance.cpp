#include "ahsp/instance.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ahsp {

using nlohmann::json;

namespace {
json subgroup_rows(const Subgroup& s) {
  json rows = json::array();
  for (const auto& g : s.generators()) rows.push_back(g.coords());
  return rows;
}

Subgroup subgroup_from_rows(const GroupSpec& g, const json& rows) {
  IntMat mat;
  for (const auto& row : rows) mat.push_back(row.get<std::vector<i64>>());
  return Subgroup::span_rows(g, std::move(mat));
}
}  // namespace

std::string instance_to_json(const ProblemInstance& inst) {
  json j;
  j["moduli"] = inst.group.moduli();
  j["subgroup_generators"] = subgroup_rows(inst.hidden);
  j["shift_seed"] = inst.shift_seed;
  return j.dump(2) + "\n";
}

ProblemInstance instance_from_json(const std::string& text) {
  json j = json::parse(text);
  GroupSpec g(j.at("moduli").get<std::vector<i64>>());
  Subgroup k = subgroup_from_rows(g, j.at("subgroup_generators"));
  u64 seed = j.value("shift_seed", 0ull);
  return ProblemInstance{std::move(g), std::move(k), seed};
}

ProblemInstance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return instance_from_json(buf.str());
}

void save_instance(const std::string& path, const ProblemInstance& inst) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write instance file: " + path);
  out << instance_to_json(inst);
}

std::string group_to_json(const GroupSpec& g) {
  json j;
  j["moduli"] = g.moduli();
  return j.dump();
}

GroupSpec group_from_json(const std::string& text) {
  json j = json::parse(text);
  return GroupSpec(j.at("moduli").get<std::vector<i64>>());
}

std::string subgroup_to_json(const Subgroup& s) {
  return subgroup_rows(s).dump();
}

Subgroup subgroup_from_json(const GroupSpec& g, const std::string& text) {
  return subgroup_from_rows(g, json::parse(text));
}

}  // namespace ahsp
