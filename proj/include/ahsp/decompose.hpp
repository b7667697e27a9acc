#pragma once

#include <vector>

#include "ahsp/subgroup.hpp"

namespace ahsp {

// One Sylow component of a group: the cyclic factors of a single prime,
// together with the coordinate positions they occupy in the parent group.
struct SylowComponent {
  i64 prime;
  GroupSpec group;
  std::vector<std::size_t> coords;  // parent coordinate of each local factor
};

// Components ordered by ascending prime. The product of component orders is
// the group order.
std::vector<SylowComponent> sylow_decompose(const GroupSpec& g);

// Embeds a local element of component i into the parent group (zeros
// elsewhere).
GroupElement embed(const SylowComponent& comp, const GroupSpec& parent,
                   const GroupElement& local);

// The projection of K onto component i, as a subgroup of that component.
Subgroup project_subgroup(const Subgroup& k, const SylowComponent& comp);

// External direct sum of one subgroup per component, as a subgroup of the
// parent group.
Subgroup direct_sum_subgroups(const GroupSpec& parent,
                              const std::vector<SylowComponent>& comps,
                              const std::vector<Subgroup>& parts);

}  // namespace ahsp
