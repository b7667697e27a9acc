#include "ahsp/matrix.hpp"

#include <algorithm>
#include <cstdlib>

namespace ahsp {

namespace {

// Reduces every entry of a row into [0, N_c). Valid whenever the relation
// vectors N_c * e_c belong to the lattice being manipulated.
void reduce_row_mod_relations(std::vector<i64>& row,
                              const std::vector<i64>& moduli) {
  for (std::size_t c = 0; c < moduli.size(); ++c)
    row[c] = mod_floor(row[c], moduli[c]);
}

void row_axpy(std::vector<i64>& dst, const std::vector<i64>& src, i64 q) {
  for (std::size_t c = 0; c < dst.size(); ++c)
    dst[c] -= checked_mul(q, src[c]);
}

}  // namespace

IntMat hnf_with_relations(IntMat rows, const std::vector<i64>& moduli) {
  const std::size_t k = moduli.size();
  for (auto& r : rows) {
    if (r.size() != k) throw std::invalid_argument("hnf: row width mismatch");
    reduce_row_mod_relations(r, moduli);
  }
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<i64> rel(k, 0);
    rel[j] = moduli[j];
    rows.push_back(std::move(rel));
  }

  // Column-by-column elimination; the relation rows guarantee a pivot in
  // every column.
  for (std::size_t j = 0; j < k; ++j) {
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = j; i < rows.size(); ++i) {
        if (rows[i][j] != 0 &&
            (best == rows.size() ||
             std::llabs(rows[i][j]) < std::llabs(rows[best][j])))
          best = i;
      }
      if (best == rows.size())
        throw std::logic_error("hnf: missing pivot column");
      if (best != j) std::swap(rows[j], rows[best]);
      bool clean = true;
      for (std::size_t i = j + 1; i < rows.size(); ++i) {
        if (rows[i][j] == 0) continue;
        i64 q = floor_div(rows[i][j], rows[j][j]);
        row_axpy(rows[i], rows[j], q);
        reduce_row_mod_relations(rows[i], moduli);
        if (rows[i][j] != 0) clean = false;
      }
      if (clean) break;
    }
    if (rows[j][j] < 0)
      for (auto& v : rows[j]) v = -v;
  }
  rows.resize(k);

  // Reduce entries above each pivot into [0, pivot).
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      i64 q = floor_div(rows[i][j], rows[j][j]);
      if (q != 0) row_axpy(rows[i], rows[j], q);
    }
  }
  return rows;
}

std::vector<i64> snf_diagonal(IntMat a) {
  const std::size_t r = a.size();
  const std::size_t k = r == 0 ? 0 : a[0].size();
  std::vector<i64> diag;
  const std::size_t steps = std::min(r, k);
  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      std::size_t pi = r, pj = k;
      for (std::size_t i = t; i < r; ++i)
        for (std::size_t j = t; j < k; ++j)
          if (a[i][j] != 0 &&
              (pi == r || std::llabs(a[i][j]) < std::llabs(a[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == r) {
        diag.push_back(0);
        break;
      }
      std::swap(a[t], a[pi]);
      if (pj != t)
        for (std::size_t i = 0; i < r; ++i) std::swap(a[i][t], a[i][pj]);
      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (a[i][t] == 0) continue;
        i64 q = floor_div(a[i][t], a[t][t]);
        row_axpy(a[i], a[t], q);
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < k; ++j) {
        if (a[t][j] == 0) continue;
        i64 q = floor_div(a[t][j], a[t][t]);
        for (std::size_t i = 0; i < r; ++i)
          a[i][j] -= checked_mul(q, a[i][t]);
        if (a[t][j] != 0) clean = false;
      }
      if (clean) {
        diag.push_back(std::llabs(a[t][t]));
        break;
      }
    }
  }
  return diag;
}

IntMat kernel_mod(IntMat m, std::size_t k, i64 modulus) {
  if (modulus <= 0) throw std::invalid_argument("kernel_mod: bad modulus");
  for (auto& row : m) {
    if (row.size() != k)
      throw std::invalid_argument("kernel_mod: row width mismatch");
    for (auto& v : row) v = mod_floor(v, modulus);
  }
  const std::size_t r = m.size();

  // Column-operation tracker: solutions are x = V z.
  IntMat v(k, std::vector<i64>(k, 0));
  for (std::size_t i = 0; i < k; ++i) v[i][i] = 1;

  std::vector<i64> diag(k, 0);
  const std::size_t steps = std::min(r, k);
  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      std::size_t pi = r, pj = k;
      for (std::size_t i = t; i < r; ++i)
        for (std::size_t j = t; j < k; ++j)
          if (m[i][j] != 0 &&
              (pi == r || m[i][j] < m[pi][pj])) {
            pi = i;
            pj = j;
          }
      if (pi == r) break;  // all-zero tail, remaining coordinates free
      std::swap(m[t], m[pi]);
      if (pj != t) {
        for (std::size_t i = 0; i < r; ++i) std::swap(m[i][t], m[i][pj]);
        for (std::size_t i = 0; i < k; ++i) std::swap(v[i][t], v[i][pj]);
      }
      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (m[i][t] == 0) continue;
        i64 q = floor_div(m[i][t], m[t][t]);
        for (std::size_t c = 0; c < k; ++c)
          m[i][c] = mod_floor(m[i][c] - checked_mul(q, m[t][c]), modulus);
        if (m[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < k; ++j) {
        if (m[t][j] == 0) continue;
        i64 q = floor_div(m[t][j], m[t][t]);
        for (std::size_t i = 0; i < r; ++i)
          m[i][j] = mod_floor(m[i][j] - checked_mul(q, m[i][t]), modulus);
        for (std::size_t i = 0; i < k; ++i)
          v[i][j] -= checked_mul(q, v[i][t]);
        if (m[t][j] != 0) clean = false;
      }
      if (clean) {
        diag[t] = m[t][t];
        break;
      }
    }
    if (diag[t] == 0) break;
  }

  IntMat gens;
  gens.reserve(k);
  for (std::size_t t = 0; t < k; ++t) {
    i64 scale = modulus / gcd_i64(diag[t], modulus);  // gcd(0, L) = L
    std::vector<i64> g(k);
    for (std::size_t i = 0; i < k; ++i) g[i] = checked_mul(scale, v[i][t]);
    gens.push_back(std::move(g));
  }
  return gens;
}

}  // namespace ahsp
