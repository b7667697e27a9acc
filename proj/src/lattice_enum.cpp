#include "ahsp/lattice_enum.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ahsp {

std::vector<Subgroup> all_subgroups(const GroupSpec& g, i64 max_order) {
  if (g.order() > max_order)
    throw std::invalid_argument("all_subgroups: group too large");

  std::set<IntMat> seen;
  std::vector<Subgroup> found;
  auto add = [&](Subgroup s) {
    if (seen.insert(s.basis()).second) found.push_back(std::move(s));
  };

  add(Subgroup::trivial(g));
  std::vector<Subgroup> cyclic;
  for (i64 x = 1; x < g.order(); ++x) {
    Subgroup c = Subgroup::span(g, {GroupElement(g, g.coords_of(x))});
    if (seen.insert(c.basis()).second) {
      found.push_back(c);
      cyclic.push_back(std::move(c));
    }
  }

  // Join-closure: every subgroup is a join of cyclic ones, so joining the
  // worklist against cyclic subgroups reaches the whole lattice.
  std::size_t next = 0;
  while (next < found.size()) {
    Subgroup current = found[next++];
    for (const Subgroup& c : cyclic) {
      Subgroup j = current.joined_with(c);
      if (j.basis() != current.basis()) add(std::move(j));
    }
  }
  std::sort(found.begin(), found.end(),
            [](const Subgroup& a, const Subgroup& b) {
              if (a.order() != b.order()) return a.order() < b.order();
              return a.basis() < b.basis();
            });
  return found;
}

namespace {
void extend_spec(std::vector<i64>& current, i64 min_factor, i64 budget,
                 std::vector<std::vector<i64>>& out) {
  if (!current.empty()) out.push_back(current);
  for (i64 n = min_factor; n <= budget; ++n) {
    if (!is_prime_power(n)) continue;
    current.push_back(n);
    extend_spec(current, n, budget / n, out);
    current.pop_back();
  }
}
}  // namespace

std::vector<GroupSpec> all_group_specs_up_to(i64 max_order,
                                             bool include_trivial) {
  std::vector<std::vector<i64>> moduli_sets;
  std::vector<i64> current;
  extend_spec(current, 2, max_order, moduli_sets);

  std::vector<GroupSpec> out;
  if (include_trivial) out.emplace_back();
  std::set<std::vector<i64>> seen;
  for (auto& m : moduli_sets) {
    // Canonical order: by prime ascending, then modulus ascending.
    std::sort(m.begin(), m.end(), [](i64 a, i64 b) {
      auto pa = prime_power_of(a), pb = prime_power_of(b);
      if (pa.prime != pb.prime) return pa.prime < pb.prime;
      return a < b;
    });
    if (seen.insert(m).second) out.emplace_back(m);
  }
  std::sort(out.begin(), out.end(), [](const GroupSpec& a, const GroupSpec& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.moduli() < b.moduli();
  });
  return out;
}

Subgroup orthogonal_by_enumeration(const Subgroup& k) {
  const GroupSpec& g = k.group();
  std::vector<GroupElement> members;
  std::vector<GroupElement> kgens = k.generators();
  for (i64 x = 0; x < g.order(); ++x) {
    GroupElement e(g, g.coords_of(x));
    bool ok = true;
    for (const auto& kg : kgens)
      if (!bilinear(kg, e).is_zero()) {
        ok = false;
        break;
      }
    if (ok) members.push_back(std::move(e));
  }
  return Subgroup::span(g, members);
}

}  // namespace ahsp
