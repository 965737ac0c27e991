#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "lpdec/field.hpp"
#include "lpdec/lp.hpp"
#include "lpdec/poly.hpp"

namespace lpdec {

struct LengthTooLarge : Error {
  LengthTooLarge() : Error("block length exceeds the number of available evaluation points") {}
};
struct InvalidDimension : Error {
  InvalidDimension() : Error("dimension k must satisfy 1 <= k <= n") {}
};

/// A generalized Reed-Solomon code: evaluations of degree-<k polynomials at
/// distinct points alpha, scaled coordinate-wise by nonzero twist factors.
struct CodeSpec {
  Field field;
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<std::uint64_t> alpha;
  std::vector<std::uint64_t> twist;

  CodeSpec(Field f, std::size_t n_, std::size_t k_, std::vector<std::uint64_t> a,
           std::vector<std::uint64_t> t)
      : field(f), n(n_), k(k_), alpha(std::move(a)), twist(std::move(t)) {
    if (n > field.q()) throw LengthTooLarge();
    if (k > n) throw InvalidDimension();
    if (alpha.size() != n || twist.size() != n) throw Error("alpha/twist length mismatch");
    for (auto& v : alpha) v %= field.q();
    for (auto& v : twist) {
      v %= field.q();
      if (v == 0) throw Error("twist factors must be nonzero");
    }
    auto sorted = alpha;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw Error("evaluation points must be distinct");
  }

  /// Plain RS code with alpha = (0, 1, ..., n-1), trivial twists.
  static CodeSpec reed_solomon(std::uint64_t q, std::size_t n, std::size_t k) {
    Field f(q);
    std::vector<std::uint64_t> a(n), t(n, 1);
    for (std::size_t i = 0; i < n; ++i) a[i] = i;
    return CodeSpec(f, n, k, std::move(a), std::move(t));
  }

  double rate() const { return static_cast<double>(k) / static_cast<double>(n); }
  /// Adjusted rate R* = (k-1)/n, the quantity in the soft-decision guarantee.
  double adjusted_rate() const { return (static_cast<double>(k) - 1.0) / static_cast<double>(n); }
};

struct Codeword {
  std::vector<std::uint64_t> symbols;
  bool operator==(const Codeword& o) const = default;
};

inline Codeword encode(const CodeSpec& code, const Poly& message) {
  if (message.degree() >= static_cast<long>(code.k)) throw DegreeTooLarge();
  Codeword c;
  c.symbols.resize(code.n);
  for (std::size_t i = 0; i < code.n; ++i)
    c.symbols[i] = code.field.mul(code.twist[i], message.eval(code.field, code.alpha[i]));
  return c;
}

/// The GRS(alpha, alpha) subclass: twist factors equal to the (nonzero)
/// evaluation points, default ordering 1, 2, ..., n.
inline CodeSpec subclass_alpha_alpha(std::uint64_t q, std::size_t n, std::size_t k) {
  if (n > q - 1) throw LengthTooLarge();
  Field f(q);
  std::vector<std::uint64_t> a(n);
  for (std::size_t i = 0; i < n; ++i) a[i] = i + 1;
  return CodeSpec(f, n, k, a, a);
}

/// Minimum-distance lower bounds for GRS(alpha, alpha); the (n+1)-form,
/// which is the tighter of the two stated shapes. For p=2 the returned
/// value is an l2 distance (square root of the squared-distance bound).
inline double min_dist_lower_bound(int p, std::size_t n, std::size_t k) {
  if (k < 1 || k > n) throw InvalidDimension();
  double nn = static_cast<double>(n), kk = static_cast<double>(k);
  double m = (nn + 1.0) * (nn + 1.0) - kk * kk;
  if (p == 2) return std::sqrt(m * (nn + 1.0) / (12.0 * kk * kk));
  if (p == 1) return m / (4.0 * kk);
  throw UnsupportedExponent("min_dist_lower_bound defined for p in {1, 2}");
}

/// The strictly weaker rate-form bounds, exposed for plotting.
inline double min_dist_lower_bound_rate_form(int p, std::size_t n, std::size_t k) {
  if (k < 1 || k > n) throw InvalidDimension();
  double R = static_cast<double>(k) / static_cast<double>(n);
  if (p == 2) return std::sqrt((1.0 - R * R) / (12.0 * R * R) * static_cast<double>(n));
  if (p == 1) return (1.0 - R * R) / (4.0 * R) * static_cast<double>(n);
  throw UnsupportedExponent("min_dist_lower_bound defined for p in {1, 2}");
}

/// Rate below which decoding GRS(alpha, alpha) to relative distance delta
/// is unique: 1/sqrt(48 delta^2 + 1) for l2, -4 delta + sqrt(16 delta^2 + 1)
/// for l1.
inline double r_uniq(int p, double delta) {
  if (delta < 0.0) throw OutOfDomain("r_uniq requires delta >= 0");
  if (p == 2) return 1.0 / std::sqrt(48.0 * delta * delta + 1.0);
  if (p == 1) return -4.0 * delta + std::sqrt(16.0 * delta * delta + 1.0);
  throw UnsupportedExponent("r_uniq defined for p in {1, 2}");
}

/// Calls fn for every codeword (message iterated over all q^k coefficient
/// vectors); exhaustive-search helper for minimum-distance checks and the
/// decoder oracle. Message coefficients iterate low-degree-first.
inline void for_each_codeword(const CodeSpec& code,
                              const std::function<void(const Poly&, const Codeword&)>& fn) {
  const std::uint64_t q = code.field.q();
  std::vector<std::uint64_t> coeffs(code.k, 0);
  while (true) {
    Poly msg;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      if (coeffs[i]) msg.set_coeff(i, coeffs[i]);
    msg.normalize(code.field);
    fn(msg, encode(code, msg));
    std::size_t pos = 0;
    while (pos < coeffs.size()) {
      if (++coeffs[pos] < q) break;
      coeffs[pos++] = 0;
    }
    if (pos == coeffs.size()) break;
  }
}

/// Exhaustive lifted minimum over nonzero codewords: ||c||_1 for p=1, and
/// ||c||_2^2 for p=2 (squared, matching the lemma's statement).
inline double exhaustive_min_dist(const CodeSpec& code, int p) {
  double best = std::numeric_limits<double>::infinity();
  const Field& f = code.field;
  for_each_codeword(code, [&](const Poly& msg, const Codeword& c) {
    if (msg.is_zero()) return;
    double acc = 0.0;
    for (auto s : c.symbols) {
      double l = f.lift(s);
      acc += (p == 1) ? std::fabs(l) : l * l;
    }
    best = std::min(best, acc);
  });
  return best;
}

}  // namespace lpdec
