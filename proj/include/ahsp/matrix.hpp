#pragma once

#include <vector>

#include "ahsp/ints.hpp"

namespace ahsp {

using IntMat = std::vector<std::vector<i64>>;

// Hermite normal form of the integer lattice spanned by `rows` together with
// the relation vectors N_j * e_j. The lattice always has full rank k, so the
// result is a k x k upper-triangular matrix with positive diagonal entries
// dividing the moduli and entries above each pivot reduced into [0, pivot).
// This matrix is the unique canonical representation of the sublattice, and
// hence of the subgroup it induces modulo the relations.
IntMat hnf_with_relations(IntMat rows, const std::vector<i64>& moduli);

// Diagonal of a diagonalization of A under unimodular row/column operations
// (no divisibility normalization; entries are returned non-negative).
std::vector<i64> snf_diagonal(IntMat a);

// Generators of { x in Z^k : M x == 0 (mod modulus) }. Entries of M are only
// meaningful modulo `modulus`. Returns k integer row vectors spanning the
// solution lattice together with modulus * Z^k.
IntMat kernel_mod(IntMat m, std::size_t k, i64 modulus);

}  // namespace ahsp
