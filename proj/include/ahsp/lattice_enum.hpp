#pragma once

#include <vector>

#include "ahsp/subgroup.hpp"

namespace ahsp {

// Every subgroup of g, found by closing the cyclic subgroups under joins.
// Intended for verification sweeps at small orders.
std::vector<Subgroup> all_subgroups(const GroupSpec& g, i64 max_order = 4096);

// One GroupSpec per isomorphism class of Abelian groups with order in
// [2, max_order], moduli sorted by prime then by size. Includes the trivial
// group when include_trivial is set.
std::vector<GroupSpec> all_group_specs_up_to(i64 max_order,
                                             bool include_trivial = false);

// Brute-force orthogonal complement (element sweep); independent of the
// congruence-solving path.
Subgroup orthogonal_by_enumeration(const Subgroup& k);

}  // namespace ahsp
