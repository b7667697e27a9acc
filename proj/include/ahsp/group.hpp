#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ahsp/ints.hpp"

namespace ahsp {

// A finite Abelian group presented as an ordered direct sum of cyclic groups
// of prime-power order. Immutable after construction; handles share storage
// and are cheap to copy.
class GroupSpec {
 public:
  GroupSpec();  // trivial group (no cyclic factors)
  explicit GroupSpec(std::vector<i64> moduli);

  const std::vector<i64>& moduli() const { return d_->moduli; }
  std::size_t num_factors() const { return d_->moduli.size(); }
  i64 modulus(std::size_t j) const { return d_->moduli[j]; }
  i64 order() const { return d_->order; }
  i64 prime(std::size_t j) const { return d_->primes[j]; }

  // Indices of the cyclic factors belonging to each prime, keyed by prime.
  const std::map<i64, std::vector<std::size_t>>& sylow_blocks() const {
    return d_->blocks;
  }

  int chain_length() const { return d_->len; }
  int rank() const { return d_->rank; }

  // Row-major flat index over the factor dimensions (last factor fastest).
  i64 flat_index(const std::vector<i64>& coords) const;
  std::vector<i64> coords_of(i64 flat) const;

  bool operator==(const GroupSpec& o) const {
    return d_ == o.d_ || d_->moduli == o.d_->moduli;
  }
  bool operator!=(const GroupSpec& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  struct Data {
    std::vector<i64> moduli;
    std::vector<i64> primes;
    std::map<i64, std::vector<std::size_t>> blocks;
    i64 order = 1;
    int len = 0;
    int rank = 0;
  };
  std::shared_ptr<const Data> d_;
};

class GroupElement {
 public:
  GroupElement(GroupSpec group, std::vector<i64> coords);
  static GroupElement zero(const GroupSpec& group);

  const GroupSpec& group() const { return group_; }
  const std::vector<i64>& coords() const { return coords_; }
  i64 coord(std::size_t j) const { return coords_[j]; }
  bool is_zero() const;

  GroupElement operator+(const GroupElement& o) const;
  GroupElement operator-(const GroupElement& o) const;
  GroupElement operator-() const;
  GroupElement scaled(i64 c) const;

  bool operator==(const GroupElement& o) const;
  bool operator!=(const GroupElement& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  GroupSpec group_;
  std::vector<i64> coords_;
};

// Exact rational residue in [0, 1).
class Rational01 {
 public:
  Rational01() : num_(0), den_(1) {}
  Rational01(i64 numerator, i64 denominator);  // reduced into [0,1)

  i64 numerator() const { return num_; }
  i64 denominator() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  Rational01 operator+(const Rational01& o) const;
  bool operator==(const Rational01& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }

 private:
  i64 num_, den_;
};

// Coordinate-wise pairing sum_j x_j y_j / N_j taken modulo 1, evaluated in
// exact integer arithmetic.
Rational01 bilinear(const GroupElement& x, const GroupElement& y);

// min{ rank(G) + ceil(log2(2/eps)), len(G) - len_K + ceil(log2(1/eps)) },
// with len_K = 0 when the subgroup's chain length is not known in advance.
int iteration_bound(const GroupSpec& g, double epsilon, int known_len_k = 0);

}  // namespace ahsp
