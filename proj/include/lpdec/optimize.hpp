#pragma once

#include <cmath>
#include <functional>
#include <vector>

namespace lpdec {

struct ScalarMax {
  double x = 0.0;
  double value = 0.0;
};

/// Maximizes f on [lo, hi]: coarse log-ish grid scan (with caller-supplied
/// seed points inserted) to bracket the best sample, then golden-section
/// refinement of that bracket. Deterministic; robust for the smooth
/// unimodal-near-optimum objectives the planner feeds it.
inline ScalarMax maximize_scalar(const std::function<double(double)>& f, double lo, double hi,
                                 const std::vector<double>& seeds = {}, int grid = 48,
                                 double tol = 1e-7) {
  std::vector<double> xs;
  for (int i = 0; i <= grid; ++i)
    xs.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(grid));
  for (double s : seeds)
    if (s > lo && s < hi) xs.push_back(s);
  std::sort(xs.begin(), xs.end());

  std::size_t best = 0;
  std::vector<double> vals(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    vals[i] = f(xs[i]);
    if (vals[i] > vals[best]) best = i;
  }
  double a = best == 0 ? xs[0] : xs[best - 1];
  double b = best + 1 == xs.size() ? xs.back() : xs[best + 1];

  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - gr * (b - a), d = a + gr * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol * std::max(1.0, std::fabs(a) + std::fabs(b))) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = f(d);
    }
  }
  double xm = (a + b) / 2.0, fm = f(xm);
  if (vals[best] > fm) return {xs[best], vals[best]};
  return {xm, fm};
}

}  // namespace lpdec
