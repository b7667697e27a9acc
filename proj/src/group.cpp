#include "ahsp/group.hpp"

#include <algorithm>
#include <sstream>

namespace ahsp {

GroupSpec::GroupSpec() : GroupSpec(std::vector<i64>{}) {}

GroupSpec::GroupSpec(std::vector<i64> moduli) {
  auto d = std::make_shared<Data>();
  d->moduli = std::move(moduli);
  d->primes.reserve(d->moduli.size());
  for (std::size_t j = 0; j < d->moduli.size(); ++j) {
    PrimePower pp = prime_power_of(d->moduli[j]);
    d->primes.push_back(pp.prime);
    d->blocks[pp.prime].push_back(j);
    d->order = checked_mul(d->order, d->moduli[j]);
    d->len += pp.exponent;
  }
  for (const auto& [p, idx] : d->blocks)
    d->rank = std::max<int>(d->rank, static_cast<int>(idx.size()));
  d_ = std::move(d);
}

i64 GroupSpec::flat_index(const std::vector<i64>& coords) const {
  if (coords.size() != d_->moduli.size())
    throw std::invalid_argument("flat_index: coordinate count mismatch");
  i64 flat = 0;
  for (std::size_t j = 0; j < coords.size(); ++j) {
    if (coords[j] < 0 || coords[j] >= d_->moduli[j])
      throw std::out_of_range("flat_index: coordinate out of range");
    flat = flat * d_->moduli[j] + coords[j];
  }
  return flat;
}

std::vector<i64> GroupSpec::coords_of(i64 flat) const {
  if (flat < 0 || flat >= d_->order)
    throw std::out_of_range("coords_of: index out of range");
  std::vector<i64> coords(d_->moduli.size());
  for (std::size_t j = d_->moduli.size(); j-- > 0;) {
    coords[j] = flat % d_->moduli[j];
    flat /= d_->moduli[j];
  }
  return coords;
}

std::string GroupSpec::to_string() const {
  std::ostringstream os;
  os << "Z[";
  for (std::size_t j = 0; j < d_->moduli.size(); ++j)
    os << (j ? "," : "") << d_->moduli[j];
  os << "]";
  return os.str();
}

GroupElement::GroupElement(GroupSpec group, std::vector<i64> coords)
    : group_(std::move(group)), coords_(std::move(coords)) {
  if (coords_.size() != group_.num_factors())
    throw std::invalid_argument("element: coordinate count mismatch");
  for (std::size_t j = 0; j < coords_.size(); ++j)
    coords_[j] = mod_floor(coords_[j], group_.modulus(j));
}

GroupElement GroupElement::zero(const GroupSpec& group) {
  return GroupElement(group, std::vector<i64>(group.num_factors(), 0));
}

bool GroupElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](i64 c) { return c == 0; });
}

namespace {
void require_same_group(const GroupElement& a, const GroupElement& b) {
  if (a.group() != b.group())
    throw std::invalid_argument("elements belong to different groups");
}
}  // namespace

GroupElement GroupElement::operator+(const GroupElement& o) const {
  require_same_group(*this, o);
  std::vector<i64> c(coords_.size());
  for (std::size_t j = 0; j < c.size(); ++j)
    c[j] = mod_floor(coords_[j] + o.coords_[j], group_.modulus(j));
  return GroupElement(group_, std::move(c));
}

GroupElement GroupElement::operator-(const GroupElement& o) const {
  require_same_group(*this, o);
  std::vector<i64> c(coords_.size());
  for (std::size_t j = 0; j < c.size(); ++j)
    c[j] = mod_floor(coords_[j] - o.coords_[j], group_.modulus(j));
  return GroupElement(group_, std::move(c));
}

GroupElement GroupElement::operator-() const {
  std::vector<i64> c(coords_.size());
  for (std::size_t j = 0; j < c.size(); ++j)
    c[j] = mod_floor(-coords_[j], group_.modulus(j));
  return GroupElement(group_, std::move(c));
}

GroupElement GroupElement::scaled(i64 m) const {
  std::vector<i64> c(coords_.size());
  for (std::size_t j = 0; j < c.size(); ++j)
    c[j] = mod_floor(checked_mul(mod_floor(m, group_.modulus(j)), coords_[j]),
                     group_.modulus(j));
  return GroupElement(group_, std::move(c));
}

bool GroupElement::operator==(const GroupElement& o) const {
  return group_ == o.group_ && coords_ == o.coords_;
}

std::string GroupElement::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t j = 0; j < coords_.size(); ++j)
    os << (j ? "," : "") << coords_[j];
  os << ")";
  return os.str();
}

Rational01::Rational01(i64 numerator, i64 denominator) {
  if (denominator <= 0)
    throw std::invalid_argument("Rational01: denominator must be positive");
  num_ = mod_floor(numerator, denominator);
  den_ = denominator;
  i64 g = gcd_i64(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
  if (num_ == 0) den_ = 1;
}

Rational01 Rational01::operator+(const Rational01& o) const {
  i64 den = lcm_i64(den_, o.den_);
  i64 num = checked_mul(num_, den / den_) + checked_mul(o.num_, den / o.den_);
  return Rational01(num, den);
}

Rational01 bilinear(const GroupElement& x, const GroupElement& y) {
  if (x.group() != y.group())
    throw std::invalid_argument("bilinear: elements from different groups");
  Rational01 acc;
  for (std::size_t j = 0; j < x.group().num_factors(); ++j)
    acc = acc + Rational01(checked_mul(x.coord(j), y.coord(j)),
                           x.group().modulus(j));
  return acc;
}

int iteration_bound(const GroupSpec& g, double epsilon, int known_len_k) {
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw std::domain_error("iteration_bound: epsilon must lie in (0,1)");
  int by_rank = g.rank() + ceil_log2(2.0 / epsilon);
  int by_len = g.chain_length() - known_len_k + ceil_log2(1.0 / epsilon);
  return std::min(by_rank, by_len);
}

}  // namespace ahsp
