#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lpdec/field.hpp"

namespace lpdec {

/// Dense row-major matrix over F_q.
struct MatFq {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint64_t> a;  // rows * cols entries in [0, q)

  MatFq() = default;
  MatFq(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}

  std::uint64_t& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  std::uint64_t at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

/// Gaussian elimination kernel solve: returns some nonzero v with A v = 0,
/// or nullopt when the kernel is trivial. Deterministic: first nonzero
/// pivot per column, first free column set to 1.
inline std::optional<std::vector<std::uint64_t>> solve_nullspace(const Field& f, MatFq A) {
  const std::uint64_t q = f.q();
  const std::size_t n = A.cols;
  if (n == 0) return std::nullopt;
  if (A.rows == 0) {
    std::vector<std::uint64_t> v(n, 0);
    v[0] = 1;
    return v;
  }

  std::vector<std::size_t> pivot_col_of_row;
  std::vector<long> row_of_pivot_col(n, -1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < A.rows; ++c) {
    std::size_t sel = r;
    while (sel < A.rows && A.at(sel, c) == 0) ++sel;
    if (sel == A.rows) continue;
    if (sel != r)
      for (std::size_t j = c; j < n; ++j) std::swap(A.at(r, j), A.at(sel, j));
    // scale pivot row to 1
    std::uint64_t inv = f.inv(A.at(r, c));
    for (std::size_t j = c; j < n; ++j) A.at(r, j) = f.mul(A.at(r, j), inv);
    for (std::size_t i = 0; i < A.rows; ++i) {
      if (i == r) continue;
      std::uint64_t factor = A.at(i, c);
      if (factor == 0) continue;
      std::uint64_t neg = f.neg(factor);
      std::uint64_t* ri = &A.a[i * n];
      const std::uint64_t* rp = &A.a[r * n];
      for (std::size_t j = c; j < n; ++j) ri[j] = (ri[j] + neg * rp[j]) % q;
    }
    row_of_pivot_col[c] = static_cast<long>(r);
    pivot_col_of_row.push_back(c);
    ++r;
  }

  long free_col = -1;
  for (std::size_t c = 0; c < n; ++c)
    if (row_of_pivot_col[c] < 0) { free_col = static_cast<long>(c); break; }
  if (free_col < 0) return std::nullopt;

  std::vector<std::uint64_t> v(n, 0);
  v[static_cast<std::size_t>(free_col)] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    long rr = row_of_pivot_col[c];
    if (rr < 0) continue;
    // pivot row is reduced: x_c = -sum_{j>c non-pivot} a_rj x_j; only free_col is nonzero.
    std::uint64_t s = A.at(static_cast<std::size_t>(rr), static_cast<std::size_t>(free_col));
    v[c] = f.neg(s);
  }
  return v;
}

/// Multiplies A v over F_q; test oracle for nullspace solutions.
inline std::vector<std::uint64_t> mat_vec(const Field& f, const MatFq& A, const std::vector<std::uint64_t>& v) {
  std::vector<std::uint64_t> out(A.rows, 0);
  for (std::size_t i = 0; i < A.rows; ++i) {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < A.cols; ++j) acc = f.add(acc, f.mul(A.at(i, j), v[j]));
    out[i] = acc;
  }
  return out;
}

}  // namespace lpdec
