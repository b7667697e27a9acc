#pragma once

#include <atomic>
#include <memory>
#include <mutex>
#include <vector>

#include "ahsp/decompose.hpp"
#include "ahsp/subgroup.hpp"

namespace ahsp {

// Query-counted black box hiding a subgroup K: f(x) = f(y) iff x - y in K.
// Values are computed as the canonical coset representative of x + K plus a
// seed-derived shift, so f is constant on cosets and injective across them
// without materializing a table.
//
// The restriction of f to a Sylow component (zeros in the other coordinates)
// is again a hiding function, for the projected subgroup; `subfunction`
// returns it with an independent query counter.
class HiddenOracle {
 public:
  HiddenOracle(GroupSpec domain, Subgroup hidden, u64 shift_seed);

  HiddenOracle(HiddenOracle&&) = default;
  HiddenOracle& operator=(HiddenOracle&&) = default;
  HiddenOracle(const HiddenOracle&) = delete;
  HiddenOracle& operator=(const HiddenOracle&) = delete;

  const GroupSpec& domain() const { return domain_; }
  const GroupSpec& codomain() const { return codomain_; }

  // Counted evaluation.
  GroupElement query(const GroupElement& x);

  // One unitary application of U_f (or its inverse) counts as one query.
  void count_unitary_application() { st_->queries.fetch_add(1); }

  u64 query_count() const { return st_->queries.load(); }
  u64 meta_count() const { return st_->meta.load(); }

  HiddenOracle subfunction(const std::vector<SylowComponent>& comps,
                           std::size_t i) const;

  // Ground truth, for test and verification paths only.
  const Subgroup& hidden_for_verification() const { return hidden_; }

  // Cached basis-state permutations of U_f on the (domain, codomain) layout;
  // built once from uncounted evaluations (an application of the unitary is
  // one query, however many basis states it touches).
  const std::vector<i64>& forward_permutation() const;
  const std::vector<i64>& inverse_permutation() const;

 private:
  HiddenOracle(GroupSpec domain, GroupSpec codomain, Subgroup full_hidden,
               Subgroup hidden, GroupElement shift,
               std::vector<std::size_t> embedding);

  GroupElement eval(const GroupElement& x) const;
  void build_permutations() const;

  struct MutableState {
    std::atomic<u64> queries{0};
    std::atomic<u64> meta{0};
    std::once_flag perm_once;
    std::vector<i64> perm_fwd, perm_inv;
  };

  GroupSpec domain_;
  GroupSpec codomain_;
  Subgroup full_hidden_;  // subgroup of the codomain group defining f
  Subgroup hidden_;       // subgroup hidden by this oracle's domain
  GroupElement shift_;
  std::vector<std::size_t> embedding_;  // domain coord -> codomain coord
  std::unique_ptr<MutableState> st_;

  friend bool verify_hiding(const HiddenOracle& o, const Subgroup& k);
};

HiddenOracle build_hidden_function(const GroupSpec& g, const Subgroup& k,
                                   u64 shift_seed);

// Exhaustive check of the hiding property against K (uncounted "meta"
// evaluations). Refuses domains larger than 4096 elements.
bool verify_hiding(const HiddenOracle& o, const Subgroup& k);

}  // namespace ahsp
