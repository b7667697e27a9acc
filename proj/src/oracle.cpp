#include "ahsp/oracle.hpp"

#include <unordered_map>

#include "ahsp/rng.hpp"

namespace ahsp {

namespace {
GroupElement shift_from_seed(const GroupSpec& g, u64 seed) {
  Rng rng(mix64(seed));
  std::vector<i64> coords(g.num_factors());
  for (std::size_t j = 0; j < g.num_factors(); ++j)
    coords[j] = static_cast<i64>(rng.below(static_cast<u64>(g.modulus(j))));
  return GroupElement(g, std::move(coords));
}

std::vector<std::size_t> identity_embedding(std::size_t k) {
  std::vector<std::size_t> e(k);
  for (std::size_t j = 0; j < k; ++j) e[j] = j;
  return e;
}
}  // namespace

HiddenOracle::HiddenOracle(GroupSpec domain, Subgroup hidden, u64 shift_seed)
    : HiddenOracle(domain, domain, hidden, hidden,
                   shift_from_seed(domain, shift_seed),
                   identity_embedding(domain.num_factors())) {
  if (hidden_.group() != domain_)
    throw std::invalid_argument("oracle: subgroup not in the domain group");
}

HiddenOracle::HiddenOracle(GroupSpec domain, GroupSpec codomain,
                           Subgroup full_hidden, Subgroup hidden,
                           GroupElement shift,
                           std::vector<std::size_t> embedding)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      full_hidden_(std::move(full_hidden)),
      hidden_(std::move(hidden)),
      shift_(std::move(shift)),
      embedding_(std::move(embedding)),
      st_(std::make_unique<MutableState>()) {}

GroupElement HiddenOracle::eval(const GroupElement& x) const {
  if (x.group() != domain_)
    throw std::invalid_argument("oracle: element outside the domain");
  std::vector<i64> lifted(codomain_.num_factors(), 0);
  for (std::size_t j = 0; j < embedding_.size(); ++j)
    lifted[embedding_[j]] = x.coord(j);
  GroupElement rep = full_hidden_.coset_representative(
      GroupElement(codomain_, std::move(lifted)));
  return rep + shift_;
}

GroupElement HiddenOracle::query(const GroupElement& x) {
  st_->queries.fetch_add(1);
  return eval(x);
}

HiddenOracle HiddenOracle::subfunction(
    const std::vector<SylowComponent>& comps, std::size_t i) const {
  if (domain_ != codomain_)
    throw std::invalid_argument("subfunction: oracle is already a restriction");
  if (i >= comps.size())
    throw std::invalid_argument("subfunction: component index out of range");
  const SylowComponent& comp = comps[i];
  return HiddenOracle(comp.group, codomain_, full_hidden_,
                      project_subgroup(hidden_, comp), shift_, comp.coords);
}

void HiddenOracle::build_permutations() const {
  const i64 dom = domain_.order();
  const i64 cod = codomain_.order();
  st_->perm_fwd.resize(static_cast<std::size_t>(dom * cod));
  st_->perm_inv.resize(static_cast<std::size_t>(dom * cod));
  for (i64 g = 0; g < dom; ++g) {
    GroupElement fg = eval(GroupElement(domain_, domain_.coords_of(g)));
    for (i64 b = 0; b < cod; ++b) {
      GroupElement be(codomain_, codomain_.coords_of(b));
      i64 plus = codomain_.flat_index((be + fg).coords());
      i64 minus = codomain_.flat_index((be - fg).coords());
      st_->perm_fwd[static_cast<std::size_t>(g * cod + b)] = g * cod + plus;
      st_->perm_inv[static_cast<std::size_t>(g * cod + b)] = g * cod + minus;
    }
  }
}

const std::vector<i64>& HiddenOracle::forward_permutation() const {
  std::call_once(st_->perm_once, [this] { build_permutations(); });
  return st_->perm_fwd;
}

const std::vector<i64>& HiddenOracle::inverse_permutation() const {
  std::call_once(st_->perm_once, [this] { build_permutations(); });
  return st_->perm_inv;
}

HiddenOracle build_hidden_function(const GroupSpec& g, const Subgroup& k,
                                   u64 shift_seed) {
  return HiddenOracle(g, k, shift_seed);
}

bool verify_hiding(const HiddenOracle& o, const Subgroup& k) {
  const i64 n = o.domain().order();
  if (n > 4096)
    throw std::invalid_argument("verify_hiding: domain too large to enumerate");
  if (k.group() != o.domain())
    throw std::invalid_argument("verify_hiding: subgroup group mismatch");
  std::unordered_map<i64, i64> label_to_first;
  std::vector<GroupElement> points;
  points.reserve(static_cast<std::size_t>(n));
  for (i64 x = 0; x < n; ++x)
    points.emplace_back(o.domain(), o.domain().coords_of(x));
  for (i64 x = 0; x < n; ++x) {
    o.st_->meta.fetch_add(1);
    i64 label = o.codomain().flat_index(o.eval(points[x]).coords());
    auto [it, fresh] = label_to_first.emplace(label, x);
    if (fresh) continue;
    if (!k.contains(points[x] - points[it->second])) return false;
  }
  // Same label implies same coset (checked above); counting cosets checks
  // the converse.
  return static_cast<i64>(label_to_first.size()) == n / k.order();
}

}  // namespace ahsp
