#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "lpdec/grs.hpp"
#include "lpdec/lp.hpp"
#include "lpdec/theta.hpp"

namespace lpdec {

struct ZeroWeightVector : Error {
  ZeroWeightVector() : Error("weight vector has zero norm") {}
};
struct EmptySubset : Error {
  EmptySubset() : Error("coordinate subset must be nonempty") {}
};

/// A word received over the reals mod q: residues in [0, q) with the
/// zero-centered lift available per coordinate.
struct ReceivedWord {
  double q = 0.0;
  std::vector<double> residues;

  ReceivedWord() = default;
  ReceivedWord(double q_, std::vector<double> r) : q(q_), residues(std::move(r)) {
    for (auto& v : residues) v = reduce_mod(v, q);
  }

  std::size_t size() const { return residues.size(); }
  double lift(std::size_t i) const { return lift_mod(residues[i], q); }
};

/// n blocks of q per-symbol weights, block i indexed by Z_q. Entries come
/// from coset sums and are not normalized per block; they may marginally
/// exceed one for large scales, which is tracked (not clamped) via
/// max_entry.
struct WeightVector {
  std::size_t n = 0;
  std::size_t q = 0;
  std::vector<double> w;  // n * q entries, block-major
  double max_entry = 0.0;

  WeightVector() = default;
  WeightVector(std::size_t n_, std::size_t q_) : n(n_), q(q_), w(n_ * q_, 0.0) {}

  double at(std::size_t i, std::size_t x) const { return w[i * q + x]; }
  double& at(std::size_t i, std::size_t x) { return w[i * q + x]; }

  void refresh_max() {
    max_entry = 0.0;
    for (double v : w) max_entry = std::max(max_entry, v);
  }

  double norm() const {
    KahanSum acc;
    for (double v : w) acc.add(v * v);
    return std::sqrt(acc.value());
  }

  double sum() const {
    KahanSum acc;
    for (double v : w) acc.add(v);
    return acc.value();
  }
};

/// W_{s,y}: entry (i, x) = f_s(y_i - x + qZ).
inline WeightVector build_weights(const ReceivedWord& y, const LpParams& par, double tol = 1e-12) {
  std::size_t q = static_cast<std::size_t>(y.q);
  WeightVector W(y.size(), q);
  for (std::size_t i = 0; i < y.size(); ++i)
    for (std::size_t x = 0; x < q; ++x)
      W.at(i, x) = coset_sum(par, y.residues[i] - static_cast<double>(x), y.q, tol);
  W.refresh_max();
  return W;
}

/// [c]: the binary indicator weight vector of a word; Euclidean norm sqrt(n).
inline WeightVector indicator(const Codeword& c, std::size_t q) {
  WeightVector W(c.symbols.size(), q);
  for (std::size_t i = 0; i < c.symbols.size(); ++i) W.at(i, c.symbols[i] % q) = 1.0;
  W.max_entry = c.symbols.empty() ? 0.0 : 1.0;
  return W;
}

/// corr(W, c) = <W, [c]> / (||W|| sqrt(n)).
inline double correlation(const WeightVector& W, const Codeword& c) {
  double nrm = W.norm();
  if (nrm == 0.0) throw ZeroWeightVector();
  KahanSum ip;
  for (std::size_t i = 0; i < W.n; ++i) ip.add(W.at(i, c.symbols[i] % W.q));
  return ip.value() / (nrm * std::sqrt(static_cast<double>(W.n)));
}

/// Correlation lower bounds from the lifted error vector: the arithmetic
/// mean Avg_i[f_s(lift(y_i - c_i))] and geometric mean f_s(y-c)^{1/n}, both
/// over sqrt(f_s(L_q)). Satisfies arith >= geom (AM-GM).
struct CorrBounds {
  double arith = 0.0;
  double geom = 0.0;
};

inline CorrBounds corr_lower_bound(const ReceivedWord& y, const Codeword& c, const LpParams& par,
                                   double tol = 1e-12) {
  std::size_t n = y.size();
  std::uint64_t q = static_cast<std::uint64_t>(y.q);
  double denom = std::sqrt(lattice_sum(par, q, tol).value);
  KahanSum mean;
  double log_geom = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double e = lift_mod(y.residues[i] - static_cast<double>(c.symbols[i] % q), y.q);
    mean.add(f_point(par, e));
    double a = std::fabs(e) / par.s;
    log_geom -= (par.p == 2.0) ? M_PI * a * a
               : (par.p == 1.0) ? 2.0 * a
                                : std::pow(par.c_p * a, par.p);
  }
  double nn = static_cast<double>(n);
  return {mean.value() / nn / denom, std::exp(log_geom / nn) / denom};
}

/// Restriction to a subset G of "good" coordinates:
///   (g/n) * f_s(y_G - c_G)^{1/g} / sqrt(f_s(L_q)).
inline double restricted_bound(const ReceivedWord& y, const Codeword& c,
                               const std::vector<std::size_t>& G, const LpParams& par,
                               double tol = 1e-12) {
  if (G.empty()) throw EmptySubset();
  std::uint64_t q = static_cast<std::uint64_t>(y.q);
  double denom = std::sqrt(lattice_sum(par, q, tol).value);
  double log_geom = 0.0;
  for (std::size_t i : G) {
    double e = lift_mod(y.residues[i] - static_cast<double>(c.symbols[i] % q), y.q);
    double a = std::fabs(e) / par.s;
    log_geom -= (par.p == 2.0) ? M_PI * a * a
               : (par.p == 1.0) ? 2.0 * a
                                : std::pow(par.c_p * a, par.p);
  }
  double g = static_cast<double>(G.size()), n = static_cast<double>(y.size());
  return (g / n) * std::exp(log_geom / g) / denom;
}

}  // namespace lpdec
