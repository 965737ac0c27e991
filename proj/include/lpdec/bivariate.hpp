#pragma once

#include <cstdint>
#include <vector>

#include "lpdec/field.hpp"
#include "lpdec/poly.hpp"

namespace lpdec {

/// Dense bivariate polynomial over F_q, coefficients indexed by (i, j)
/// for X^i Y^j. Sized by the (1, k-1)-weighted-degree budget of the
/// interpolation step, which stays small at the scales this library targets.
class BivariatePoly {
 public:
  BivariatePoly() = default;
  BivariatePoly(std::size_t x_dim, std::size_t y_dim)
      : xd_(x_dim), yd_(y_dim), c_(x_dim * y_dim, 0) {}

  std::size_t x_dim() const { return xd_; }
  std::size_t y_dim() const { return yd_; }

  std::uint64_t coeff(std::size_t i, std::size_t j) const {
    return (i < xd_ && j < yd_) ? c_[i * yd_ + j] : 0;
  }
  void set_coeff(std::size_t i, std::size_t j, std::uint64_t v) { c_[i * yd_ + j] = v; }

  bool is_zero() const {
    for (auto v : c_)
      if (v) return false;
    return true;
  }

  /// Substitutes Y = g(X) and returns the univariate result; zero iff
  /// (Y - g) divides this polynomial when g is a Y-root candidate.
  Poly eval_y(const Field& f, const Poly& g) const {
    Poly acc;  // Horner in Y
    for (std::size_t j = yd_; j-- > 0;) {
      Poly row;
      for (std::size_t i = 0; i < xd_; ++i) row.set_coeff(i, coeff(i, j));
      row.normalize(f);
      acc = acc.times(f, g).plus(f, row);
    }
    return acc;
  }

  std::uint64_t eval(const Field& f, std::uint64_t x, std::uint64_t y) const {
    std::uint64_t acc = 0;
    for (std::size_t j = yd_; j-- > 0;) {
      std::uint64_t row = 0;
      for (std::size_t i = xd_; i-- > 0;) row = f.add(f.mul(row, x), coeff(i, j));
      acc = f.add(f.mul(acc, y), row);
    }
    return acc;
  }

  /// Hasse derivative D^{(u,v)} Q evaluated at (x, y):
  ///   sum_{i>=u, j>=v} C(i,u) C(j,v) q_{ij} x^{i-u} y^{j-v}.
  std::uint64_t hasse_eval(const Field& f, std::size_t u, std::size_t v, std::uint64_t x,
                           std::uint64_t y, const std::vector<std::vector<std::uint64_t>>& binom) const {
    std::uint64_t acc = 0;
    std::vector<std::uint64_t> xpow(xd_ > u ? xd_ - u : 0), ypow(yd_ > v ? yd_ - v : 0);
    for (std::size_t t = 0; t < xpow.size(); ++t) xpow[t] = t == 0 ? 1 : f.mul(xpow[t - 1], x);
    for (std::size_t t = 0; t < ypow.size(); ++t) ypow[t] = t == 0 ? 1 : f.mul(ypow[t - 1], y);
    for (std::size_t i = u; i < xd_; ++i)
      for (std::size_t j = v; j < yd_; ++j) {
        std::uint64_t q = coeff(i, j);
        if (!q) continue;
        std::uint64_t term = f.mul(f.mul(binom[i][u], binom[j][v]), q);
        term = f.mul(term, f.mul(xpow[i - u], ypow[j - v]));
        acc = f.add(acc, term);
      }
    return acc;
  }

  /// Largest power of X dividing every coefficient column; q_(x) shift
  /// used by the root-finding recursion.
  std::size_t x_valuation() const {
    for (std::size_t i = 0; i < xd_; ++i)
      for (std::size_t j = 0; j < yd_; ++j)
        if (coeff(i, j)) return i;
    return xd_;  // zero polynomial
  }

  BivariatePoly shifted_down_x(std::size_t r) const {
    BivariatePoly out(xd_ - r, yd_);
    for (std::size_t i = r; i < xd_; ++i)
      for (std::size_t j = 0; j < yd_; ++j) out.set_coeff(i - r, j, coeff(i, j));
    return out;
  }

  /// Q(X, X*Y + gamma), the Roth-Ruckenstein descent step.
  BivariatePoly substitute_xy_shift(const Field& f, std::uint64_t gamma,
                                    const std::vector<std::vector<std::uint64_t>>& binom) const {
    BivariatePoly out(xd_ + yd_, yd_);
    // (X Y + gamma)^j = sum_t C(j,t) gamma^{j-t} X^t Y^t
    std::vector<std::uint64_t> gpow(yd_ + 1);
    gpow[0] = 1;
    for (std::size_t t = 1; t <= yd_; ++t) gpow[t] = f.mul(gpow[t - 1], gamma % f.q());
    for (std::size_t i = 0; i < xd_; ++i)
      for (std::size_t j = 0; j < yd_; ++j) {
        std::uint64_t q = coeff(i, j);
        if (!q) continue;
        for (std::size_t t = 0; t <= j; ++t) {
          std::uint64_t term = f.mul(q, f.mul(binom[j][t], gpow[j - t]));
          out.set_coeff(i + t, t, f.add(out.coeff(i + t, t), term));
        }
      }
    return out;
  }

  /// Q(0, Y) as a univariate polynomial in Y.
  Poly at_x0(const Field& f) const {
    Poly p;
    for (std::size_t j = 0; j < yd_; ++j) p.set_coeff(j, coeff(0, j));
    p.normalize(f);
    return p;
  }

 private:
  std::size_t xd_ = 0, yd_ = 0;
  std::vector<std::uint64_t> c_;
};

/// Pascal triangle mod q up to n rows.
inline std::vector<std::vector<std::uint64_t>> binomial_table(const Field& f, std::size_t n) {
  std::vector<std::vector<std::uint64_t>> b(n);
  for (std::size_t i = 0; i < n; ++i) {
    b[i].assign(i + 1, 1);
    for (std::size_t j = 1; j < i; ++j) b[i][j] = f.add(b[i - 1][j - 1], b[i - 1][j]);
  }
  return b;
}

}  // namespace lpdec
