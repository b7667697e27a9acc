#include "ahsp/subgroup.hpp"

#include <algorithm>
#include <sstream>

namespace ahsp {

Subgroup::Subgroup(GroupSpec g, IntMat basis, i64 order)
    : group_(std::move(g)), basis_(std::move(basis)), order_(order) {}

Subgroup Subgroup::span_rows(const GroupSpec& g, IntMat rows) {
  IntMat h = hnf_with_relations(std::move(rows), g.moduli());
  i64 det = 1;
  for (std::size_t j = 0; j < h.size(); ++j) det = checked_mul(det, h[j][j]);
  return Subgroup(g, std::move(h), g.order() / det);
}

Subgroup Subgroup::span(const GroupSpec& g,
                        const std::vector<GroupElement>& gens) {
  IntMat rows;
  rows.reserve(gens.size());
  for (const auto& e : gens) {
    if (e.group() != g)
      throw std::invalid_argument("span: generator from a different group");
    rows.push_back(e.coords());
  }
  return span_rows(g, std::move(rows));
}

Subgroup Subgroup::trivial(const GroupSpec& g) { return span_rows(g, {}); }

Subgroup Subgroup::full(const GroupSpec& g) {
  IntMat rows;
  for (std::size_t j = 0; j < g.num_factors(); ++j) {
    std::vector<i64> e(g.num_factors(), 0);
    e[j] = 1;
    rows.push_back(std::move(e));
  }
  return span_rows(g, std::move(rows));
}

int Subgroup::chain_length() const { return exponent_sum(order_); }

int Subgroup::rank() const {
  const std::size_t k = group_.num_factors();
  if (order_ == 1) return 0;
  // Express each relation vector N_j e_j in the basis; the diagonal form of
  // the coefficient matrix gives the invariant factors of the subgroup.
  IntMat coeff(k, std::vector<i64>(k, 0));
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<i64> t(k, 0);
    t[j] = group_.modulus(j);
    for (std::size_t i = 0; i < k; ++i) {
      i64 q = t[i] / basis_[i][i];
      coeff[j][i] = q;
      if (q != 0)
        for (std::size_t c = i; c < k; ++c)
          t[c] -= checked_mul(q, basis_[i][c]);
    }
  }
  std::vector<i64> diag = snf_diagonal(std::move(coeff));
  int best = 0;
  for (const auto& pp : factorize(order_)) {
    int cnt = 0;
    for (i64 d : diag)
      if (d != 0 && d % pp.prime == 0) ++cnt;
    best = std::max(best, cnt);
  }
  return best;
}

bool Subgroup::contains(const GroupElement& x) const {
  if (x.group() != group_)
    throw std::invalid_argument("contains: element from a different group");
  const std::size_t k = group_.num_factors();
  std::vector<i64> t = x.coords();
  for (std::size_t j = 0; j < k; ++j) {
    if (t[j] % basis_[j][j] != 0) return false;
    i64 q = t[j] / basis_[j][j];
    if (q != 0)
      for (std::size_t c = j; c < k; ++c)
        t[c] -= checked_mul(q, basis_[j][c]);
  }
  return true;
}

GroupElement Subgroup::coset_representative(const GroupElement& x) const {
  if (x.group() != group_)
    throw std::invalid_argument("coset_representative: group mismatch");
  const std::size_t k = group_.num_factors();
  std::vector<i64> t = x.coords();
  for (std::size_t j = 0; j < k; ++j) {
    i64 q = floor_div(t[j], basis_[j][j]);
    if (q != 0)
      for (std::size_t c = j; c < k; ++c)
        t[c] -= checked_mul(q, basis_[j][c]);
  }
  return GroupElement(group_, std::move(t));
}

Subgroup Subgroup::joined_with(const GroupElement& x) const {
  if (x.group() != group_)
    throw std::invalid_argument("joined_with: group mismatch");
  IntMat rows = basis_;
  rows.push_back(x.coords());
  return span_rows(group_, std::move(rows));
}

Subgroup Subgroup::joined_with(const Subgroup& other) const {
  if (other.group_ != group_)
    throw std::invalid_argument("joined_with: group mismatch");
  IntMat rows = basis_;
  for (const auto& r : other.basis_) rows.push_back(r);
  return span_rows(group_, std::move(rows));
}

Subgroup Subgroup::orthogonal() const {
  const std::size_t k = group_.num_factors();
  i64 l = 1;
  for (i64 n : group_.moduli()) l = lcm_i64(l, n);
  IntMat m;
  m.reserve(k);
  for (const auto& row : basis_) {
    std::vector<i64> scaled(k);
    for (std::size_t j = 0; j < k; ++j)
      scaled[j] = mod_floor(checked_mul(l / group_.modulus(j), row[j]), l);
    m.push_back(std::move(scaled));
  }
  return span_rows(group_, kernel_mod(std::move(m), k, l));
}

std::vector<GroupElement> Subgroup::elements() const {
  const std::size_t k = group_.num_factors();
  std::vector<i64> reps(k);
  for (std::size_t j = 0; j < k; ++j)
    reps[j] = group_.modulus(j) / basis_[j][j];
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(order_));
  std::vector<i64> c(k, 0);
  for (;;) {
    std::vector<i64> coords(k, 0);
    for (std::size_t j = 0; j < k; ++j) {
      if (c[j] == 0) continue;
      for (std::size_t col = j; col < k; ++col)
        coords[col] += checked_mul(c[j], basis_[j][col]);
    }
    out.emplace_back(group_, std::move(coords));
    std::size_t j = k;
    while (j-- > 0) {
      if (++c[j] < reps[j]) break;
      c[j] = 0;
      if (j == 0) return out;
    }
    if (k == 0) return out;
  }
}

std::vector<i64> Subgroup::element_flat_indices() const {
  const std::size_t k = group_.num_factors();
  std::vector<i64> reps(k);
  for (std::size_t j = 0; j < k; ++j)
    reps[j] = group_.modulus(j) / basis_[j][j];
  std::vector<i64> out;
  out.reserve(static_cast<std::size_t>(order_));
  std::vector<i64> c(k, 0), coords(k, 0);
  for (;;) {
    std::fill(coords.begin(), coords.end(), 0);
    for (std::size_t j = 0; j < k; ++j) {
      if (c[j] == 0) continue;
      for (std::size_t col = j; col < k; ++col)
        coords[col] += c[j] * basis_[j][col];
    }
    i64 flat = 0;
    for (std::size_t j = 0; j < k; ++j)
      flat = flat * group_.modulus(j) + mod_floor(coords[j], group_.modulus(j));
    out.push_back(flat);
    if (k == 0) break;
    std::size_t j = k;
    bool done = true;
    while (j-- > 0) {
      if (++c[j] < reps[j]) {
        done = false;
        break;
      }
      c[j] = 0;
    }
    if (done) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GroupElement> Subgroup::generators() const {
  std::vector<GroupElement> out;
  for (const auto& row : basis_) {
    GroupElement e(group_, row);
    if (!e.is_zero()) out.push_back(std::move(e));
  }
  return out;
}

std::string Subgroup::to_string() const {
  std::ostringstream os;
  os << "<";
  auto gens = generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    os << (i ? "," : "") << gens[i].to_string();
  os << ">";
  return os.str();
}

}  // namespace ahsp
