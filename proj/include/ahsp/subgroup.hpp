#pragma once

#include <vector>

#include "ahsp/group.hpp"
#include "ahsp/matrix.hpp"

namespace ahsp {

// A subgroup of a finite Abelian group, held as the canonical Hermite basis
// of the integer lattice it induces (generators plus the relation vectors
// N_j e_j). Two subgroups of the same group are equal iff their basis
// matrices are identical. Immutable after construction.
class Subgroup {
 public:
  Subgroup() : group_(), basis_(), order_(1) {}  // trivial group's subgroup

  static Subgroup trivial(const GroupSpec& g);
  static Subgroup full(const GroupSpec& g);
  static Subgroup span(const GroupSpec& g,
                       const std::vector<GroupElement>& gens);
  static Subgroup span_rows(const GroupSpec& g, IntMat rows);

  const GroupSpec& group() const { return group_; }
  const IntMat& basis() const { return basis_; }
  i64 order() const { return order_; }
  bool is_trivial() const { return order_ == 1; }
  bool is_full() const { return order_ == group_.order(); }

  int chain_length() const;  // sum of prime exponents of the order
  int rank() const;          // largest per-prime count of invariant factors

  bool contains(const GroupElement& x) const;

  // Unique representative of x + K inside the canonical transversal box.
  GroupElement coset_representative(const GroupElement& x) const;

  Subgroup joined_with(const GroupElement& x) const;
  Subgroup joined_with(const Subgroup& other) const;

  // { g : <k, g> == 0 (mod 1) for all k in K }, via the kernel of the
  // scaled congruence system.
  Subgroup orthogonal() const;

  // All |K| elements (coefficient sweep over the canonical basis).
  std::vector<GroupElement> elements() const;

  // The same elements as sorted row-major flat indices; allocation-light,
  // for hot scans.
  std::vector<i64> element_flat_indices() const;

  // Nonzero canonical basis rows reduced modulo the moduli.
  std::vector<GroupElement> generators() const;

  bool operator==(const Subgroup& o) const {
    return group_ == o.group_ && basis_ == o.basis_;
  }
  bool operator!=(const Subgroup& o) const { return !(*this == o); }
  bool operator<(const Subgroup& o) const { return basis_ < o.basis_; }

  std::string to_string() const;

 private:
  Subgroup(GroupSpec g, IntMat basis, i64 order);

  GroupSpec group_;
  IntMat basis_;  // k x k canonical Hermite form
  i64 order_;
};

}  // namespace ahsp
