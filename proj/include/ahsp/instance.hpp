#pragma once

#include <string>

#include "ahsp/oracle.hpp"

namespace ahsp {

// A concrete problem instance: the group, the hidden subgroup, and the seed
// for the oracle's value shift.
struct ProblemInstance {
  GroupSpec group;
  Subgroup hidden;
  u64 shift_seed = 0;

  HiddenOracle make_oracle() const {
    return build_hidden_function(group, hidden, shift_seed);
  }
};

std::string instance_to_json(const ProblemInstance& inst);
ProblemInstance instance_from_json(const std::string& text);

ProblemInstance load_instance(const std::string& path);
void save_instance(const std::string& path, const ProblemInstance& inst);

std::string group_to_json(const GroupSpec& g);
GroupSpec group_from_json(const std::string& text);

std::string subgroup_to_json(const Subgroup& s);
Subgroup subgroup_from_json(const GroupSpec& g, const std::string& text);

}  // namespace ahsp
