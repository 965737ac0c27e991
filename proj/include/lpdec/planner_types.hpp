#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

namespace lpdec {

enum class PlanMode { WC, AC };

/// Output of the rate planner: the optimized scale, the achievable
/// adjusted-rate bound, and the closed-form/fudge diagnostics that back it.
struct RatePlan {
  double p = 2.0;
  std::uint64_t q = 0;
  PlanMode mode = PlanMode::WC;
  double delta = 0.0;  // relative distance (WC mode)
  double r = 0.0;      // channel width (AC mode)
  double s_star = 1.0;
  double rate_bound = 0.0;
  double closed_form_bound = std::numeric_limits<double>::quiet_NaN();
  double fudge_near = std::numeric_limits<double>::quiet_NaN();  // E(s*) or E-like at s*
  double fudge_far = std::numeric_limits<double>::quiet_NaN();   // E(q/s*)
  double tau_suggestion = std::numeric_limits<double>::quiet_NaN();
};

/// Margin-splitting tolerance suggestion once the code's adjusted rate is
/// known: half the gap between the bound and sqrt(R*).
inline double plan_tau(const RatePlan& plan, double adjusted_rate) {
  return (std::sqrt(plan.rate_bound) - std::sqrt(adjusted_rate)) / 2.0;
}

}  // namespace lpdec
