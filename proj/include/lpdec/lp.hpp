#pragma once

#include <cmath>
#include <vector>

#include "lpdec/field.hpp"

namespace lpdec {

struct OutOfDomain : Error {
  using Error::Error;
};
struct UnsupportedExponent : Error {
  using Error::Error;
};

/// Metric family parameters: exponent p in (0,2], scale s > 0, and the
/// normalizer c_p = 2*Gamma(1 + 1/p) that makes the base profile integrate
/// to one. Exact constants are substituted at p = 1 (c = 2) and p = 2
/// (c = sqrt(pi)).
struct LpParams {
  double p = 2.0;
  double s = 1.0;
  double c_p = 0.0;

  LpParams(double p_, double s_) : p(p_), s(s_), c_p(normalizer(p_)) {
    if (!(p > 0.0) || p > 2.0) throw OutOfDomain("p must lie in (0, 2]");
    if (!(s > 0.0)) throw OutOfDomain("scale s must be positive");
  }

  static double normalizer(double p) {
    if (p == 1.0) return 2.0;
    if (p == 2.0) return std::sqrt(M_PI);
    return 2.0 * std::tgamma(1.0 + 1.0 / p);
  }
};

/// f_s(x) = exp(-(c_p |x| / s)^p); the point profile every weight and
/// theta sum is built from. f_s(0) = 1.
inline double f_point(const LpParams& par, double x) {
  double a = std::fabs(x) / par.s;
  if (a == 0.0) return 1.0;
  if (par.p == 2.0) return std::exp(-M_PI * a * a);
  if (par.p == 1.0) return std::exp(-2.0 * a);
  double b = par.c_p * a;
  if (par.p == 0.5) return std::exp(-std::sqrt(b));
  if (par.p == 1.5) return std::exp(-b * std::sqrt(b));
  return std::exp(-std::pow(b, par.p));
}

/// Zero-centered representative of x + qZ in [-q/2, q/2).
inline double lift_mod(double x, double q) {
  double r = std::fmod(x, q);
  if (r < 0) r += q;
  if (r >= q / 2.0) r -= q;
  return r;
}

/// Representative of x + qZ in [0, q).
inline double reduce_mod(double x, double q) {
  double r = std::fmod(x, q);
  if (r < 0) r += q;
  if (r >= q) r -= q;  // fmod can land exactly on q after the correction
  return r;
}

inline double lp_norm(const std::vector<double>& v, double p) {
  double acc = 0.0;
  for (double x : v) acc += std::pow(std::fabs(x), p);
  return std::pow(acc, 1.0 / p);
}

/// Compensated (Kahan) accumulator; the weight inner products sum n*q
/// terms with a wide dynamic range.
struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double x) {
    double y = x - carry;
    double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  double value() const { return sum; }
};

}  // namespace lpdec
