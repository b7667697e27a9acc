#pragma once

#include <complex>
#include <vector>

#include "ahsp/oracle.hpp"
#include "ahsp/rng.hpp"
#include "ahsp/subgroup.hpp"

namespace ahsp {

using cplx = std::complex<double>;

// Mixed-radix register layout: a list of qudit dimensions, flattened
// row-major (last dimension fastest).
struct RegisterLayout {
  std::vector<i64> dims;

  i64 total() const {
    i64 t = 1;
    for (i64 d : dims) t = checked_mul(t, d);
    return t;
  }

  static RegisterLayout for_algorithm(const GroupSpec& domain,
                                      const GroupSpec& codomain);
};

// Dense state vector over a register layout. Exclusively owned by one task
// while being mutated.
struct StateVector {
  RegisterLayout layout;
  std::vector<cplx> amps;

  double norm_sq() const;
};

StateVector init_basis(const RegisterLayout& layout,
                       const std::vector<i64>& multi_index);

// N-dimensional Fourier transform on register j: kernel
// exp(+-2*pi*i*x*y/N)/sqrt(N).
void apply_qft(StateVector& s, std::size_t reg, bool inverse);

// U_f |g>|b> = |g>|b + f(g)>  (or b - f(g) for the inverse); the layout must
// be the oracle's domain dims followed by its codomain dims. Counts one query.
void apply_oracle(StateVector& s, HiddenOracle& o, bool inverse);

// Multiplies the all-zeros basis amplitude by exp(i*phi).
void apply_phase_r0(StateVector& s, double phi);

// Multiplies amplitudes whose first-register index lies outside `marked` by
// exp(i*phi); acts as the identity on the second register.
void apply_phase_ra(StateVector& s, double phi, const Subgroup& marked);

// Fourier sandwich around the oracle: QFTs on the first register, U_f, then
// inverse QFTs. `inverse` applies the adjoint (same sandwich, inverse
// oracle). Exactly one oracle count.
void apply_a(StateVector& s, HiddenOracle& o, bool inverse);

// Parameters of one exact-amplification step.
struct PhaseParams {
  double b = 0.0;
  double phi = 0.0;
};

// Q = A R0(phi) A^dagger (R_A(phi, marked) (x) I); two oracle counts.
void apply_q(StateVector& s, HiddenOracle& o, const PhaseParams& params,
             const Subgroup& marked);

// First-register marginal probabilities (size = product of the first
// `first_regs` dims).
std::vector<double> marginal_first(const StateVector& s,
                                   std::size_t first_regs);

// Samples the first-register marginal; the state is not mutated (algorithms
// re-prepare the state each iteration). Fails if the norm drifted beyond
// 1e-8.
GroupElement measure_first(const StateVector& s, const GroupSpec& first_group,
                           Rng& rng);

// First-register indices with marginal probability above tol.
std::vector<GroupElement> support_first(const StateVector& s,
                                        const GroupSpec& first_group,
                                        double tol);

// Debug dump: dimension count and dims, then (re, im) doubles per amplitude.
void dump_state(const StateVector& s, const std::string& path);
StateVector load_state(const std::string& path);

}  // namespace ahsp
