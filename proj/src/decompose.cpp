#include "ahsp/decompose.hpp"

namespace ahsp {

std::vector<SylowComponent> sylow_decompose(const GroupSpec& g) {
  std::vector<SylowComponent> out;
  for (const auto& [p, idx] : g.sylow_blocks()) {
    std::vector<i64> moduli;
    moduli.reserve(idx.size());
    for (std::size_t j : idx) moduli.push_back(g.modulus(j));
    out.push_back({p, GroupSpec(std::move(moduli)), idx});
  }
  return out;
}

GroupElement embed(const SylowComponent& comp, const GroupSpec& parent,
                   const GroupElement& local) {
  if (local.group() != comp.group)
    throw std::invalid_argument("embed: element not in the component");
  std::vector<i64> coords(parent.num_factors(), 0);
  for (std::size_t j = 0; j < comp.coords.size(); ++j)
    coords[comp.coords[j]] = local.coord(j);
  return GroupElement(parent, std::move(coords));
}

Subgroup project_subgroup(const Subgroup& k, const SylowComponent& comp) {
  IntMat rows;
  for (const auto& row : k.basis()) {
    std::vector<i64> local(comp.coords.size());
    for (std::size_t j = 0; j < comp.coords.size(); ++j)
      local[j] = row[comp.coords[j]];
    rows.push_back(std::move(local));
  }
  return Subgroup::span_rows(comp.group, std::move(rows));
}

Subgroup direct_sum_subgroups(const GroupSpec& parent,
                              const std::vector<SylowComponent>& comps,
                              const std::vector<Subgroup>& parts) {
  if (comps.size() != parts.size())
    throw std::invalid_argument(
        "direct_sum_subgroups: one part per component required");
  IntMat rows;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (parts[i].group() != comps[i].group)
      throw std::invalid_argument(
          "direct_sum_subgroups: part does not match its component");
    for (const auto& row : parts[i].basis()) {
      std::vector<i64> coords(parent.num_factors(), 0);
      for (std::size_t j = 0; j < comps[i].coords.size(); ++j)
        coords[comps[i].coords[j]] = row[j];
      rows.push_back(std::move(coords));
    }
  }
  return Subgroup::span_rows(parent, std::move(rows));
}

}  // namespace ahsp
