#include "ahsp/sim.hpp"

#include <cmath>
#include <fstream>
#include <numbers>

namespace ahsp {

RegisterLayout RegisterLayout::for_algorithm(const GroupSpec& domain,
                                             const GroupSpec& codomain) {
  RegisterLayout l;
  l.dims = domain.moduli();
  for (i64 n : codomain.moduli()) l.dims.push_back(n);
  return l;
}

double StateVector::norm_sq() const {
  double s = 0.0;
  for (const cplx& a : amps) s += std::norm(a);
  return s;
}

StateVector init_basis(const RegisterLayout& layout,
                       const std::vector<i64>& multi_index) {
  if (multi_index.size() != layout.dims.size())
    throw std::invalid_argument("init_basis: index arity mismatch");
  i64 flat = 0;
  for (std::size_t j = 0; j < layout.dims.size(); ++j) {
    if (multi_index[j] < 0 || multi_index[j] >= layout.dims[j])
      throw std::out_of_range("init_basis: index out of range");
    flat = flat * layout.dims[j] + multi_index[j];
  }
  StateVector s{layout, std::vector<cplx>(layout.total(), cplx{0.0, 0.0})};
  s.amps[static_cast<std::size_t>(flat)] = cplx{1.0, 0.0};
  return s;
}

void apply_qft(StateVector& s, std::size_t reg, bool inverse) {
  if (reg >= s.layout.dims.size())
    throw std::invalid_argument("apply_qft: register out of range");
  const i64 n = s.layout.dims[reg];
  i64 stride = 1;
  for (std::size_t j = reg + 1; j < s.layout.dims.size(); ++j)
    stride *= s.layout.dims[j];
  const i64 total = static_cast<i64>(s.amps.size());
  const i64 block = n * stride;

  if (n == 2) {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (i64 base = 0; base < total; base += block) {
      cplx* a0 = s.amps.data() + base;
      cplx* a1 = a0 + stride;
      for (i64 off = 0; off < stride; ++off) {
        cplx u = a0[off], v = a1[off];
        a0[off] = (u + v) * inv_sqrt2;
        a1[off] = (u - v) * inv_sqrt2;
      }
    }
    return;
  }

  const double sign = inverse ? -1.0 : 1.0;
  thread_local std::vector<cplx> twiddle, in, out;
  twiddle.resize(static_cast<std::size_t>(n));
  in.resize(static_cast<std::size_t>(n));
  out.resize(static_cast<std::size_t>(n));
  for (i64 m = 0; m < n; ++m)
    twiddle[static_cast<std::size_t>(m)] = std::polar(
        1.0, sign * 2.0 * std::numbers::pi * static_cast<double>(m) /
                 static_cast<double>(n));
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (i64 base = 0; base < total; base += block) {
    for (i64 off = 0; off < stride; ++off) {
      cplx* slot = s.amps.data() + base + off;
      for (i64 x = 0; x < n; ++x) in[static_cast<std::size_t>(x)] = slot[x * stride];
      for (i64 y = 0; y < n; ++y) {
        cplx acc{0.0, 0.0};
        i64 idx = 0;
        for (i64 x = 0; x < n; ++x) {
          acc += twiddle[static_cast<std::size_t>(idx)] *
                 in[static_cast<std::size_t>(x)];
          idx += y;
          if (idx >= n) idx -= n;
        }
        out[static_cast<std::size_t>(y)] = acc * scale;
      }
      for (i64 y = 0; y < n; ++y) slot[y * stride] = out[static_cast<std::size_t>(y)];
    }
  }
}

namespace {
void check_oracle_layout(const StateVector& s, const HiddenOracle& o) {
  std::vector<i64> expect = o.domain().moduli();
  for (i64 n : o.codomain().moduli()) expect.push_back(n);
  if (s.layout.dims != expect)
    throw std::invalid_argument("apply_oracle: layout does not match oracle");
}
}  // namespace

void apply_oracle(StateVector& s, HiddenOracle& o, bool inverse) {
  check_oracle_layout(s, o);
  const std::vector<i64>& perm =
      inverse ? o.inverse_permutation() : o.forward_permutation();
  thread_local std::vector<cplx> scratch;
  scratch.resize(s.amps.size());
  for (std::size_t i = 0; i < s.amps.size(); ++i)
    scratch[static_cast<std::size_t>(perm[i])] = s.amps[i];
  s.amps.swap(scratch);
  o.count_unitary_application();
}

void apply_phase_r0(StateVector& s, double phi) {
  s.amps[0] *= std::polar(1.0, phi);
}

void apply_phase_ra(StateVector& s, double phi, const Subgroup& marked) {
  const GroupSpec& g = marked.group();
  const std::size_t first_regs = g.num_factors();
  if (first_regs > s.layout.dims.size())
    throw std::invalid_argument("apply_phase_ra: group larger than layout");
  i64 first_total = 1;
  for (std::size_t j = 0; j < first_regs; ++j) {
    if (s.layout.dims[j] != g.modulus(j))
      throw std::invalid_argument("apply_phase_ra: first register mismatch");
    first_total *= s.layout.dims[j];
  }
  const i64 rest = static_cast<i64>(s.amps.size()) / first_total;
  const cplx phase = std::polar(1.0, phi);
  for (i64 a = 0; a < first_total; ++a) {
    if (marked.contains(GroupElement(g, g.coords_of(a)))) continue;
    cplx* block = s.amps.data() + a * rest;
    for (i64 b = 0; b < rest; ++b) block[b] *= phase;
  }
}

void apply_a(StateVector& s, HiddenOracle& o, bool inverse) {
  const std::size_t first_regs = o.domain().num_factors();
  for (std::size_t j = 0; j < first_regs; ++j) apply_qft(s, j, false);
  apply_oracle(s, o, inverse);
  for (std::size_t j = 0; j < first_regs; ++j) apply_qft(s, j, true);
}

void apply_q(StateVector& s, HiddenOracle& o, const PhaseParams& params,
             const Subgroup& marked) {
  apply_phase_ra(s, params.phi, marked);
  apply_a(s, o, true);
  apply_phase_r0(s, params.phi);
  apply_a(s, o, false);
}

std::vector<double> marginal_first(const StateVector& s,
                                   std::size_t first_regs) {
  if (first_regs > s.layout.dims.size())
    throw std::invalid_argument("marginal_first: register count too large");
  i64 first_total = 1;
  for (std::size_t j = 0; j < first_regs; ++j) first_total *= s.layout.dims[j];
  const i64 rest = static_cast<i64>(s.amps.size()) / first_total;
  std::vector<double> p(static_cast<std::size_t>(first_total), 0.0);
  for (i64 a = 0; a < first_total; ++a) {
    const cplx* block = s.amps.data() + a * rest;
    double acc = 0.0;
    for (i64 b = 0; b < rest; ++b) acc += std::norm(block[b]);
    p[static_cast<std::size_t>(a)] = acc;
  }
  return p;
}

GroupElement measure_first(const StateVector& s, const GroupSpec& first_group,
                           Rng& rng) {
  std::vector<double> p = marginal_first(s, first_group.num_factors());
  if (static_cast<i64>(p.size()) != first_group.order())
    throw std::invalid_argument("measure_first: group/layout mismatch");
  double total = 0.0;
  for (double v : p) total += v;
  if (std::abs(total - 1.0) > 1e-8)
    throw std::runtime_error("measure_first: state norm drifted beyond 1e-8");
  double u = rng.uniform() * total;
  double acc = 0.0;
  i64 pick = static_cast<i64>(p.size()) - 1;
  for (std::size_t a = 0; a < p.size(); ++a) {
    acc += p[a];
    if (u < acc) {
      pick = static_cast<i64>(a);
      break;
    }
  }
  return GroupElement(first_group, first_group.coords_of(pick));
}

void dump_state(const StateVector& s, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("dump_state: cannot open " + path);
  u64 ndims = s.layout.dims.size();
  out.write(reinterpret_cast<const char*>(&ndims), sizeof(ndims));
  out.write(reinterpret_cast<const char*>(s.layout.dims.data()),
            static_cast<std::streamsize>(ndims * sizeof(i64)));
  for (const cplx& a : s.amps) {
    double re = a.real(), im = a.imag();
    out.write(reinterpret_cast<const char*>(&re), sizeof(re));
    out.write(reinterpret_cast<const char*>(&im), sizeof(im));
  }
}

StateVector load_state(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("load_state: cannot open " + path);
  u64 ndims = 0;
  in.read(reinterpret_cast<char*>(&ndims), sizeof(ndims));
  RegisterLayout layout;
  layout.dims.resize(ndims);
  in.read(reinterpret_cast<char*>(layout.dims.data()),
          static_cast<std::streamsize>(ndims * sizeof(i64)));
  StateVector s{layout, std::vector<cplx>(layout.total())};
  for (cplx& a : s.amps) {
    double re = 0, im = 0;
    in.read(reinterpret_cast<char*>(&re), sizeof(re));
    in.read(reinterpret_cast<char*>(&im), sizeof(im));
    a = cplx{re, im};
  }
  if (!in) throw std::runtime_error("load_state: truncated file " + path);
  return s;
}

std::vector<GroupElement> support_first(const StateVector& s,
                                        const GroupSpec& first_group,
                                        double tol) {
  std::vector<double> p = marginal_first(s, first_group.num_factors());
  std::vector<GroupElement> out;
  for (std::size_t a = 0; a < p.size(); ++a)
    if (p[a] > tol)
      out.emplace_back(first_group, first_group.coords_of(static_cast<i64>(a)));
  return out;
}

}  // namespace ahsp
