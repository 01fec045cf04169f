#pragma once

// Dense matrices over GF(p^e): row reduction, rank, kernel, and inner
// products with an optional conjugation exponent on the second argument.

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qvariety/galois.hpp"

namespace qvariety {

struct gf_matrix {
  const field* F = nullptr;
  std::size_t ncols = 0;
  std::vector<std::vector<gf_elem>> rows;

  gf_matrix() = default;
  gf_matrix(const field& f, std::size_t cols) : F(&f), ncols(cols) {}

  std::size_t nrows() const { return rows.size(); }

  void append_row(std::vector<gf_elem> r) {
    if (r.size() != ncols) throw std::invalid_argument("matrix: row width mismatch");
    rows.push_back(std::move(r));
  }
};

// In-place reduced row echelon form; returns the rank. Pivoting is
// deterministic: first nonzero entry in column order, rows swapped upward.
inline std::size_t row_reduce(gf_matrix& m) {
  const field& F = *m.F;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.ncols && rank < m.nrows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.nrows() && m.rows[pivot][col] == 0) ++pivot;
    if (pivot == m.nrows()) continue;
    std::swap(m.rows[rank], m.rows[pivot]);
    gf_elem s = F.inv(m.rows[rank][col]);
    for (std::size_t c = col; c < m.ncols; ++c)
      m.rows[rank][c] = F.mul(m.rows[rank][c], s);
    for (std::size_t r = 0; r < m.nrows(); ++r) {
      if (r == rank || m.rows[r][col] == 0) continue;
      gf_elem f = m.rows[r][col];
      for (std::size_t c = col; c < m.ncols; ++c)
        m.rows[r][c] = F.sub(m.rows[r][c], F.mul(f, m.rows[rank][c]));
    }
    ++rank;
  }
  m.rows.resize(rank);
  return rank;
}

inline std::size_t rank_of(gf_matrix m) { return row_reduce(m); }

// Basis of the right kernel {x : m x = 0}, one kernel vector per row.
inline gf_matrix kernel(gf_matrix m) {
  const field& F = *m.F;
  std::size_t rank = row_reduce(m);
  std::vector<std::size_t> pivot_col(rank);
  std::vector<bool> is_pivot(m.ncols, false);
  for (std::size_t r = 0; r < rank; ++r) {
    std::size_t c = 0;
    while (m.rows[r][c] == 0) ++c;
    pivot_col[r] = c;
    is_pivot[c] = true;
  }
  gf_matrix ker(F, m.ncols);
  for (std::size_t free_c = 0; free_c < m.ncols; ++free_c) {
    if (is_pivot[free_c]) continue;
    std::vector<gf_elem> v(m.ncols, 0);
    v[free_c] = 1;
    for (std::size_t r = 0; r < rank; ++r)
      v[pivot_col[r]] = F.neg(m.rows[r][free_c]);
    ker.append_row(std::move(v));
  }
  return ker;
}

// Inner product sum_c a[c] * b[c]^conj_power (conj_power 1 = plain product).
inline gf_elem inner_product(const field& F, const std::vector<gf_elem>& a,
                             const std::vector<gf_elem>& b, long conj_power = 1) {
  if (a.size() != b.size()) throw std::invalid_argument("matrix: length mismatch");
  gf_elem acc = 0;
  for (std::size_t c = 0; c < a.size(); ++c) {
    gf_elem rhs = conj_power == 1 ? b[c] : F.pow(b[c], conj_power);
    acc = F.add(acc, F.mul(a[c], rhs));
  }
  return acc;
}

// Gram matrix of a.rows against b.rows under the given conjugation power.
inline gf_matrix gram(const gf_matrix& a, const gf_matrix& b, long conj_power = 1) {
  if (a.F != b.F || a.ncols != b.ncols)
    throw std::invalid_argument("matrix: gram shape mismatch");
  const field& F = *a.F;
  // Conjugate b's rows once up front.
  std::vector<std::vector<gf_elem>> bc = b.rows;
  if (conj_power != 1)
    for (auto& row : bc)
      for (auto& x : row) x = F.pow(x, conj_power);
  gf_matrix g(F, b.nrows());
  for (std::size_t i = 0; i < a.nrows(); ++i) {
    std::vector<gf_elem> out(b.nrows(), 0);
    for (std::size_t j = 0; j < b.nrows(); ++j) {
      gf_elem acc = 0;
      for (std::size_t c = 0; c < a.ncols; ++c)
        acc = F.add(acc, F.mul(a.rows[i][c], bc[j][c]));
      out[j] = acc;
    }
    g.append_row(std::move(out));
  }
  return g;
}

inline bool is_zero(const gf_matrix& m) {
  for (const auto& row : m.rows)
    for (gf_elem x : row)
      if (x != 0) return false;
  return true;
}

inline gf_matrix stacked(const gf_matrix& a, const gf_matrix& b) {
  if (a.F != b.F || a.ncols != b.ncols)
    throw std::invalid_argument("matrix: stack shape mismatch");
  gf_matrix out(*a.F, a.ncols);
  out.rows = a.rows;
  out.rows.insert(out.rows.end(), b.rows.begin(), b.rows.end());
  return out;
}

}  // namespace qvariety
