#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "lpdec/lp.hpp"

namespace lpdec {

struct ToleranceUnreachable : Error {
  using Error::Error;
};

/// Result of a truncated lattice/coset summation. `value` is within
/// `error_bound` of the infinite sum, and error_bound <= the requested
/// tolerance.
struct LatticeSumResult {
  double value = 0.0;
  double truncation_radius = 0.0;
  double error_bound = 0.0;
};

namespace detail {

constexpr double kTermCap = 6.0e7;  // per-sum enumeration budget

/// Upper bound on sum of f_s over points of absolute value >= T spaced at
/// least `step` apart, by doubling blocks [2^j T, 2^{j+1} T): each block
/// holds at most 2^j T/step + 1 points per sign at value <= f(2^j T).
/// Valid for any p > 0 since f decreases in |x|.
inline double tail_bound_1d(const LpParams& par, double T, double step) {
  double bound = 0.0;
  double R = T;
  for (int j = 0; j < 64; ++j) {
    double count = R / step + 1.0;
    double term = 2.0 * count * f_point(par, R);
    bound += term;
    if (term < 1e-300 * std::max(1.0, bound)) break;
    R *= 2.0;
  }
  return bound;
}

/// Same doubling-block construction for the 2-D lattice L_q: points with
/// max-norm in [R, 2R) number at most (4R+1)(4R/q + 2) and contribute at
/// most f(R) each (one coordinate exceeds R, the other factor is <= 1).
inline double tail_bound_lq(const LpParams& par, std::uint64_t q, double T) {
  double bound = 0.0;
  double R = T;
  for (int j = 0; j < 64; ++j) {
    double count = (4.0 * R + 1.0) * (4.0 * R / static_cast<double>(q) + 2.0);
    double term = count * f_point(par, R);
    bound += term;
    if (term < 1e-300 * std::max(1.0, bound)) break;
    R *= 2.0;
  }
  return bound;
}

}  // namespace detail

/// Smallest integer t such that the Banaszczyk tail ratio
/// 2 exp(-pi t^2/s^2) / (1 - 2 exp(-pi t^2/s^2)) is below tol; truncating a
/// Gaussian sum over a unit-spaced lattice at |z| <= t then has relative
/// error < tol.
inline int banaszczyk_radius(double s, double tol) {
  if (!(tol > 0.0) || tol >= 1.0) throw OutOfDomain("banaszczyk_radius needs tol in (0,1)");
  double t0 = s * std::sqrt(std::log(2.0 * (1.0 + 1.0 / tol)) / M_PI);
  int t = std::max(1, static_cast<int>(std::floor(t0)));
  auto ok = [&](int tt) {
    double m = 2.0 * std::exp(-M_PI * static_cast<double>(tt) * tt / (s * s));
    return m < 0.5 && m / (1.0 - m) < tol;
  };
  while (!ok(t)) ++t;
  while (t > 1 && ok(t - 1)) --t;
  return t;
}

/// f_s(Z) by truncated summation (any 0 < p <= 2).
inline LatticeSumResult theta_Z(const LpParams& par, double tol) {
  if (!(tol > 0.0)) throw OutOfDomain("tol must be positive");
  double T = std::max(1.0, par.s);
  while (detail::tail_bound_1d(par, T, 1.0) >= tol) {
    T *= 2.0;
    if (T > detail::kTermCap) throw ToleranceUnreachable("theta_Z: radius beyond cap");
  }
  KahanSum acc;
  acc.add(1.0);
  for (double z = 1.0; z <= T; z += 1.0) acc.add(2.0 * f_point(par, z));
  return {acc.value(), T, detail::tail_bound_1d(par, T, 1.0)};
}

/// f_s(y + qZ), the per-symbol coset weight. Exact geometric closed form
/// for p = 1; rigorously truncated series otherwise (or when forced).
inline double coset_sum(const LpParams& par, double y, double q, double tol,
                        bool force_series = false) {
  if (!(tol > 0.0)) throw OutOfDomain("tol must be positive");
  double x = reduce_mod(y, q);
  if (par.p == 1.0 && !force_series) {
    double e2q = std::exp(-2.0 * q / par.s);
    return (std::exp(-2.0 * x / par.s) + std::exp(-2.0 * (q - x) / par.s)) / (1.0 - e2q);
  }
  double T = std::max(q, par.s);
  while (detail::tail_bound_1d(par, T, q) >= tol) {
    T *= 2.0;
    if (T / q > detail::kTermCap) throw ToleranceUnreachable("coset_sum: radius beyond cap");
  }
  KahanSum acc;
  long zlo = static_cast<long>(std::ceil((-T - x) / q));
  long zhi = static_cast<long>(std::floor((T - x) / q));
  for (long z = zlo; z <= zhi; ++z) acc.add(f_point(par, x + q * static_cast<double>(z)));
  return acc.value();
}

/// f_s(L_q) where L_q = { (u,v) in Z^2 : u = v mod q }. Exact closed form
/// for p = 1 (product of coth factors plus the cross term); banded
/// enumeration with doubling-block tail control otherwise.
inline LatticeSumResult lattice_sum(const LpParams& par, std::uint64_t q, double tol,
                                    bool force_series = false) {
  if (!(tol > 0.0)) throw OutOfDomain("tol must be positive");
  double qd = static_cast<double>(q);
  if (par.p == 1.0 && !force_series) {
    double s = par.s;
    auto coth = [](double x) {
      double e = std::exp(-2.0 * x);
      return (1.0 + e) / (1.0 - e);
    };
    double e2q = std::exp(-2.0 * qd / s);
    double cross = 2.0 * qd * e2q / ((1.0 - e2q) * (1.0 - e2q));
    return {coth(2.0 / s) * coth(qd / s) + cross, 0.0, 0.0};
  }
  double T = std::max(qd, par.s);
  while (detail::tail_bound_lq(par, q, T) >= tol) {
    T *= 2.0;
    double bands = 2.0 * T / qd + 1.0;
    if ((2.0 * T + 1.0) * bands > 64.0 * detail::kTermCap)
      throw ToleranceUnreachable("lattice_sum: enumeration beyond cap");
  }
  long M = static_cast<long>(std::floor(2.0 * T / qd));
  // Terms dropped by the pruning below are each under this cutoff; there
  // are at most (2T+1)(2M+1) of them, keeping the dropped mass under tol/8.
  double cutoff = tol / (8.0 * (2.0 * T + 1.0) * (2.0 * static_cast<double>(M) + 1.0));
  double G = -std::log(cutoff);  // term >= cutoff needs exponent sum <= G
  auto expo = [&](double x) {  // (c_p |x| / s)^p
    double a = std::fabs(x) / par.s;
    if (par.p == 2.0) return M_PI * a * a;
    if (par.p == 1.0) return 2.0 * a;
    return std::pow(par.c_p * a, par.p);
  };
  double u_single = par.s * std::pow(G, 1.0 / par.p) / par.c_p;       // one factor alone
  double u_half = par.s * std::pow(G / 2.0, 1.0 / par.p) / par.c_p;   // both factors equal
  struct Band {
    double shift, lo, hi;
  };
  std::vector<Band> bands;
  double total_terms = 0.0;
  auto push = [&](double shift, double lo, double hi) {
    lo = std::max({lo, -T, -shift - T});
    hi = std::min({hi, T, -shift + T});
    if (lo > hi) return;
    bands.push_back({shift, lo, hi});
    total_terms += hi - lo + 1.0;
    if (total_terms > detail::kTermCap)
      throw ToleranceUnreachable("lattice_sum: enumeration beyond cap");
  };
  for (long m = -M; m <= M; ++m) {
    double shift = qd * static_cast<double>(m);
    // Cheapest achievable exponent in this band sits at an endpoint (p < 1)
    // or the midpoint (p >= 1); if even that exceeds G, nothing survives.
    double best = std::min(expo(shift), 2.0 * expo(shift / 2.0));
    if (best > G) continue;
    if (m == 0) {
      push(0.0, -u_half, u_half);
      continue;
    }
    // Any surviving point lies within w of one of the band's two atoms at
    // u = 0 and u = -shift: its other factor costs at least expo(shift/2),
    // leaving G - expo(shift/2) of exponent budget for the near factor.
    double budget = G - expo(shift / 2.0);
    double w = budget > 0.0 ? std::min(u_single, par.s * std::pow(budget, 1.0 / par.p) / par.c_p)
                            : -1.0;
    if (w < 0.0) continue;
    if (shift > 0 ? (-shift + w >= -w - 1.0) : (w >= -shift - w - 1.0)) {
      push(shift, std::min(-w, -shift - w), std::max(w, -shift + w));  // windows merged
    } else {
      push(shift, -w, w);
      push(shift, -shift - w, -shift + w);
    }
  }
  KahanSum acc;
  for (const auto& band : bands)
    for (double u = std::ceil(band.lo); u <= band.hi; u += 1.0)
      acc.add(f_point(par, u) * f_point(par, u + band.shift));
  return {acc.value(), T, detail::tail_bound_lq(par, q, T) + tol / 8.0};
}

enum class RoughnessKind { Z_SCALED, LQ_DIAGONAL };

/// Gaussian roughness quantities (p = 2 only, where the Fourier transform
/// is again Gaussian):
///   Z_SCALED    -> eps_{Z, q/(s sqrt 2)} = f_{s sqrt2 / q}(Z) - 1
///   LQ_DIAGONAL -> eps_{L_q, s}(H), H = span(1,1), via the dual basis
///                  (0,1), (1,-1)/q; equals f_{1/s}(L_q^*)/f_{1/s}(L_q^* cap H-perp) - 1.
inline double roughness(const LpParams& par, std::uint64_t q, RoughnessKind which, double tol) {
  if (par.p != 2.0) throw UnsupportedExponent("roughness requires p = 2");
  if (!(tol > 0.0)) throw OutOfDomain("tol must be positive");
  double s = par.s;
  double qd = static_cast<double>(q);
  if (which == RoughnessKind::Z_SCALED) {
    double w = s * std::sqrt(2.0) / qd;  // f_w is Gaussian of width w on Z
    LpParams g(2.0, w);
    return theta_Z(g, tol).value - 1.0;
  }
  // Dual sums with Gaussian f_{1/s}(v) = exp(-pi s^2 |v|^2).
  double w = 1.0 / s;
  double t = w * std::sqrt(std::log(4.0 * (1.0 + 1.0 / tol)) / M_PI);  // two-slab Banaszczyk cut
  KahanSum num, den;
  long bmax = static_cast<long>(std::ceil(qd * t));
  if (static_cast<double>(bmax) * (2.0 * t + 2.0) > detail::kTermCap)
    throw ToleranceUnreachable("roughness: dual enumeration beyond cap");
  for (long b = -bmax; b <= bmax; ++b) {
    double v1 = static_cast<double>(b) / qd;
    if (std::fabs(v1) > t) continue;
    double rem = std::sqrt(std::max(0.0, t * t - v1 * v1));
    long alo = static_cast<long>(std::ceil(v1 - rem));
    long ahi = static_cast<long>(std::floor(v1 + rem));
    for (long a = alo; a <= ahi; ++a) {
      double v2 = static_cast<double>(a) - v1;
      double val = std::exp(-M_PI * s * s * (v1 * v1 + v2 * v2));
      num.add(val);
      if (a == 0) den.add(val);
    }
  }
  return num.value() / den.value() - 1.0;
}

/// Exact p=2 factorization f_s(L_q) = (s/sqrt2)(1+eps')(1+eps~); the
/// second, independent evaluation route for the lattice sum.
inline double lattice_sum_factored(const LpParams& par, std::uint64_t q, double tol) {
  if (par.p != 2.0) throw UnsupportedExponent("factored lattice sum requires p = 2");
  double ep = roughness(par, q, RoughnessKind::Z_SCALED, tol);
  double et = roughness(par, q, RoughnessKind::LQ_DIAGONAL, tol);
  return par.s / std::sqrt(2.0) * (1.0 + ep) * (1.0 + et);
}

/// Residual |f_s(Z) - s * f_{1/s}(Z)| of the Poisson summation identity,
/// both sides independently truncated (p = 2, self-dual profile).
inline double psf_check(double s, double tol) {
  LpParams a(2.0, s), b(2.0, 1.0 / s);
  double lhs = theta_Z(a, tol).value;
  double rhs = s * theta_Z(b, tol).value;
  return std::fabs(lhs - rhs);
}

/// Fudge factors quantifying how close a theta sum is to its dominant term.
/// p = 2: E(r) = 1 - 2 exp(-pi r^2 / 2), defined for r >= r0 = sqrt(ln4/pi).
/// p = 1: E(x) = 1 / (coth x + x / sinh^2 x), defined for x > 0.
inline double fudge_r0() { return std::sqrt(std::log(4.0) / M_PI); }

inline double fudge_E(int p, double arg) {
  if (p == 2) {
    if (arg < fudge_r0() - 1e-15) throw OutOfDomain("fudge_E(p=2) requires arg >= r0");
    return 1.0 - 2.0 * std::exp(-M_PI * arg * arg / 2.0);
  }
  if (p == 1) {
    if (!(arg > 0.0)) throw OutOfDomain("fudge_E(p=1) requires arg > 0");
    if (arg > 350.0) return 1.0;  // both corrections underflow
    double coth = 1.0 / std::tanh(arg);
    double sh = std::sinh(arg);
    return 1.0 / (coth + arg / (sh * sh));
  }
  throw UnsupportedExponent("fudge_E defined for p in {1, 2}");
}

/// E_q(s) = sqrt(E(q/s) * E(s)) for p = 2.
inline double fudge_Eq(double q, double s) {
  return std::sqrt(fudge_E(2, q / s) * fudge_E(2, s));
}

}  // namespace lpdec
