#pragma once

#include <string>
#include <vector>

#include "ahsp/ints.hpp"

namespace ahsp {

struct PropertyResult {
  std::string name;
  u64 checked = 0;
  u64 failures = 0;
};

// Structural identities of subgroups and orthogonal complements, checked
// exhaustively over every subgroup of every Abelian group with order up to
// max_order, against element-sweep oracles. Also runs the random-generation
// frequency bound.
std::vector<PropertyResult> verify_group_properties(i64 max_order, u64 seed);

// Simulator identities: operator unitarity, Fourier round trips, the
// measurement support after the Fourier sandwich, per-step amplitude
// elimination during exact runs, and the character-sum cancellation.
// Instances are swept exhaustively up to max_order.
std::vector<PropertyResult> verify_sim_properties(i64 max_order, u64 seed);

bool all_passed(const std::vector<PropertyResult>& results);

}  // namespace ahsp
