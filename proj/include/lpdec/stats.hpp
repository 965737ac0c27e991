#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "lpdec/field.hpp"

namespace lpdec {
namespace stats {

/// Regularized lower incomplete gamma P(a, x), series/continued-fraction
/// split at x = a + 1.
inline double gamma_p(double a, double x) {
  if (x < 0.0 || a <= 0.0) throw Error("gamma_p domain");
  if (x == 0.0) return 0.0;
  double gln = std::lgamma(a);
  if (x < a + 1.0) {
    double ap = a, sum = 1.0 / a, del = sum;
    for (int i = 0; i < 500; ++i) {
      ap += 1.0;
      del *= x / ap;
      sum += del;
      if (std::fabs(del) < std::fabs(sum) * 1e-15) break;
    }
    return sum * std::exp(-x + a * std::log(x) - gln);
  }
  // Lentz continued fraction for Q(a, x)
  double b = x + 1.0 - a, c = 1e308, d = 1.0 / b, h = d;
  for (int i = 1; i <= 500; ++i) {
    double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < 1e-300) d = 1e-300;
    c = b + an / c;
    if (std::fabs(c) < 1e-300) c = 1e-300;
    d = 1.0 / d;
    double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < 1e-15) break;
  }
  double q = std::exp(-x + a * std::log(x) - gln) * h;
  return 1.0 - q;
}

/// Upper tail of the chi-square distribution with dof degrees of freedom.
inline double chi_square_pvalue(double statistic, int dof) {
  return 1.0 - gamma_p(static_cast<double>(dof) / 2.0, statistic / 2.0);
}

/// Pearson statistic against expected counts; bins with expectation below
/// min_expected must be merged by the caller.
inline double pearson_statistic(const std::vector<double>& observed,
                                const std::vector<double>& expected) {
  double stat = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    double d = observed[i] - expected[i];
    stat += d * d / expected[i];
  }
  return stat;
}

}  // namespace stats
}  // namespace lpdec
