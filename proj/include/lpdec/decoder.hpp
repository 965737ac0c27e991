#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lpdec/bivariate.hpp"
#include "lpdec/grs.hpp"
#include "lpdec/linalg.hpp"
#include "lpdec/planner_types.hpp"
#include "lpdec/weights.hpp"

namespace lpdec {

struct AllZero : Error {
  AllZero() : Error("multiplicity assignment produced no positive entry") {}
};
struct NullspaceEmpty : Error {
  NullspaceEmpty() : Error("interpolation system has trivial kernel") {}
};
struct BudgetExceeded : Error {
  explicit BudgetExceeded(const std::string& diag) : Error("decoder budget exceeded: " + diag) {}
};
struct RateTooHigh : Error {
  RateTooHigh() : Error("adjusted rate is not below the planned rate bound") {}
};

/// Interpolation multiplicities: n x q nonnegative integers; cost is the
/// number of linear constraints they induce.
struct MultiplicityMatrix {
  std::size_t n = 0;
  std::size_t q = 0;
  std::vector<std::uint32_t> m;

  MultiplicityMatrix() = default;
  MultiplicityMatrix(std::size_t n_, std::size_t q_) : n(n_), q(q_), m(n_ * q_, 0) {}

  std::uint32_t at(std::size_t i, std::size_t x) const { return m[i * q + x]; }
  std::uint32_t& at(std::size_t i, std::size_t x) { return m[i * q + x]; }

  std::uint64_t cost() const {
    std::uint64_t c = 0;
    for (auto v : m) c += static_cast<std::uint64_t>(v) * (v + 1) / 2;
    return c;
  }
  bool any_positive() const {
    for (auto v : m)
      if (v) return true;
    return false;
  }
};

/// m_{i,x} = floor(lambda * W_i(x)).
inline MultiplicityMatrix assign_multiplicities(const WeightVector& W, double lambda) {
  if (!(lambda > 0.0)) throw OutOfDomain("lambda must be positive");
  MultiplicityMatrix M(W.n, W.q);
  for (std::size_t i = 0; i < W.w.size(); ++i)
    M.m[i] = static_cast<std::uint32_t>(std::floor(lambda * W.w[i]));
  if (!M.any_positive()) throw AllZero();
  return M;
}

struct Candidate {
  Poly message;
  Codeword codeword;
  double correlation = 0.0;
};

struct DecodeDiagnostics {
  double lambda = 0.0;
  std::uint64_t cost = 0;
  long wdeg = 0;
  std::size_t constraint_rows = 0;
  std::size_t monomials = 0;
  bool certified = false;
  std::string certificate;
};

struct DecodeResult {
  std::vector<Candidate> candidates;
  double threshold = 0.0;  // sqrt(R*) + tau
  DecodeDiagnostics diagnostics;

  bool contains(const Codeword& c) const {
    for (const auto& cand : candidates)
      if (cand.codeword == c) return true;
    return false;
  }
};

namespace gs {

/// Number of monomials X^a Y^b with a + (k-1) b <= D (b unrestricted when
/// k = 1 is avoided by the caller; see soft_decode's constant special case).
inline std::uint64_t monomial_count(long D, std::size_t k) {
  if (D < 0) return 0;
  long wy = std::max<long>(1, static_cast<long>(k) - 1);
  std::uint64_t total = 0;
  for (long b = 0; b * wy <= D; ++b) total += static_cast<std::uint64_t>(D - b * wy + 1);
  return total;
}

/// Least weighted degree whose monomial count exceeds the constraint cost.
inline long degree_budget(std::uint64_t cost, std::size_t k) {
  long wy = std::max<long>(1, static_cast<long>(k) - 1);
  long D = static_cast<long>(std::sqrt(2.0 * static_cast<double>(wy) * (static_cast<double>(cost) + 1.0)));
  D = std::max<long>(0, D - 2);
  while (monomial_count(D, k) <= cost) ++D;
  return D;
}

/// Interpolation step: nonzero Q with (1, k-1)-weighted degree <= the
/// budget, vanishing at (alpha_i, x) with multiplicity m_{i,x}. The
/// multiplicity matrix is interpreted in the untwisted (plain RS) domain.
inline BivariatePoly interpolate(const CodeSpec& code, const MultiplicityMatrix& M) {
  const Field& f = code.field;
  std::uint64_t cost = M.cost();
  long D = degree_budget(cost, code.k);
  long wy = std::max<long>(1, static_cast<long>(code.k) - 1);
  long ymax = D / wy;

  // monomial list ordered by weighted degree, then lexicographic in (a, b)
  std::vector<std::pair<long, long>> mono;
  for (long a = 0; a <= D; ++a)
    for (long b = 0; a + b * wy <= D; ++b) mono.push_back({a, b});
  std::stable_sort(mono.begin(), mono.end(), [&](auto& u, auto& v) {
    long wu = u.first + u.second * wy, wv = v.first + v.second * wy;
    if (wu != wv) return wu < wv;
    return u < v;
  });

  auto binom = binomial_table(f, static_cast<std::size_t>(D + ymax) + 2);

  MatFq A(static_cast<std::size_t>(cost), mono.size());
  std::size_t row = 0;
  std::vector<std::uint64_t> xpow(static_cast<std::size_t>(D) + 1), ypow(static_cast<std::size_t>(ymax) + 1);
  for (std::size_t i = 0; i < M.n; ++i) {
    for (std::size_t x = 0; x < M.q; ++x) {
      std::uint32_t mult = M.at(i, x);
      if (!mult) continue;
      std::uint64_t xi = code.alpha[i] % f.q(), yi = x % f.q();
      xpow[0] = 1;
      for (std::size_t t = 1; t < xpow.size(); ++t) xpow[t] = f.mul(xpow[t - 1], xi);
      ypow[0] = 1;
      for (std::size_t t = 1; t < ypow.size(); ++t) ypow[t] = f.mul(ypow[t - 1], yi);
      for (std::uint32_t u = 0; u < mult; ++u) {
        for (std::uint32_t v = 0; v + u < mult; ++v) {
          for (std::size_t j = 0; j < mono.size(); ++j) {
            long a = mono[j].first, b = mono[j].second;
            if (a < static_cast<long>(u) || b < static_cast<long>(v)) continue;
            std::uint64_t coef = f.mul(binom[static_cast<std::size_t>(a)][u],
                                       binom[static_cast<std::size_t>(b)][v]);
            coef = f.mul(coef, f.mul(xpow[static_cast<std::size_t>(a - u)],
                                     ypow[static_cast<std::size_t>(b - v)]));
            A.at(row, j) = coef;
          }
          ++row;
        }
      }
    }
  }

  auto kern = solve_nullspace(f, std::move(A));
  if (!kern) throw NullspaceEmpty();  // impossible by the counting bound
  BivariatePoly Q(static_cast<std::size_t>(D) + 1, static_cast<std::size_t>(ymax) + 1);
  for (std::size_t j = 0; j < mono.size(); ++j)
    if ((*kern)[j]) Q.set_coeff(static_cast<std::size_t>(mono[j].first),
                                static_cast<std::size_t>(mono[j].second), (*kern)[j]);
  return Q;
}

namespace detail {

inline void roth_ruckenstein(const Field& f, const BivariatePoly& Q, std::size_t k,
                             std::vector<std::uint64_t>& prefix, std::size_t depth,
                             const std::vector<std::vector<std::uint64_t>>& binom,
                             std::vector<Poly>& out) {
  if (Q.is_zero()) return;
  BivariatePoly R = Q;
  std::size_t r = R.x_valuation();
  if (r > 0 && r < R.x_dim()) R = R.shifted_down_x(r);
  Poly u = R.at_x0(f);  // R(0, Y), nonzero after stripping
  for (std::uint64_t gamma = 0; gamma < f.q(); ++gamma) {
    if (u.eval(f, gamma) != 0) continue;
    prefix.push_back(gamma);
    if (depth + 1 == k) {
      Poly cand;
      for (std::size_t i = 0; i < prefix.size(); ++i)
        if (prefix[i]) cand.set_coeff(i, prefix[i]);
      cand.normalize(f);
      out.push_back(cand);
    } else {
      roth_ruckenstein(f, R.substitute_xy_shift(f, gamma, binom), k, prefix, depth + 1, binom, out);
    }
    prefix.pop_back();
  }
}

}  // namespace detail

/// All f with deg f < k and (Y - f(X)) | Q, by Roth-Ruckenstein descent
/// with a final divisibility verification (so the output is exactly the
/// root set even on degenerate inputs).
inline std::vector<Poly> y_roots(const Field& f, const BivariatePoly& Q, std::size_t k) {
  std::vector<Poly> raw;
  if (Q.is_zero() || k == 0) return raw;
  auto binom = binomial_table(f, Q.x_dim() + Q.y_dim() * (k + 2) + 2);
  std::vector<std::uint64_t> prefix;
  detail::roth_ruckenstein(f, Q, k, prefix, 0, binom, raw);
  std::vector<Poly> verified;
  for (const auto& cand : raw) {
    if (!Q.eval_y(f, cand).is_zero()) continue;
    if (std::find(verified.begin(), verified.end(), cand) == verified.end())
      verified.push_back(cand);
  }
  return verified;
}

/// Minimum achievable score over words meeting a per-coordinate budget
/// constraint; shared knapsack core of both decoding certificates.
/// `need_at_least` selects the direction: sum of contributions >= grid
/// (threshold certificate) or <= grid (ball certificate).
inline std::uint64_t min_score_dp(const MultiplicityMatrix& M,
                                  const std::vector<std::uint32_t>& contrib, std::size_t grid,
                                  bool need_at_least) {
  constexpr std::uint64_t INF = ~0ull >> 1;
  std::vector<std::uint64_t> dp(grid + 1, INF), next(grid + 1, INF);
  dp[need_at_least ? grid : 0] = 0;  // remaining requirement / spent budget
  for (std::size_t i = 0; i < M.n; ++i) {
    std::fill(next.begin(), next.end(), INF);
    for (std::size_t b = 0; b <= grid; ++b) {
      if (dp[b] == INF) continue;
      for (std::size_t x = 0; x < M.q; ++x) {
        std::uint32_t c = contrib[i * M.q + x];
        std::size_t nb;
        if (need_at_least) {
          nb = c >= b ? 0 : b - c;  // requirement satisfied so far
        } else {
          if (b + c > grid) continue;  // budget blown
          nb = b + c;
        }
        std::uint64_t sc = dp[b] + M.at(i, x);
        if (sc < next[nb]) next[nb] = sc;
      }
    }
    dp.swap(next);
  }
  if (need_at_least) return dp[0];
  std::uint64_t best = INF;
  for (auto v : dp) best = std::min(best, v);
  return best;
}

}  // namespace gs

using gs::interpolate;
using gs::y_roots;

enum class CertifyMode { THRESHOLD, BALL, NONE };

struct DecodeOptions {
  CertifyMode certify = CertifyMode::THRESHOLD;
  double lambda_start = 0.0;       // 0 = auto
  double lambda_cap = 1048576.0;   // 2^20
  std::uint64_t cost_cap = 5000;   // keeps the dense interpolation solve tractable
  double tol = 1e-12;
  std::size_t dp_grid = 4096;
};

namespace gs {

/// Certificate for the threshold guarantee: every word x with
/// sum_i W_i(x_i) >= B := theta ||W|| sqrt(n) has multiplicity score > D.
/// Contributions are rounded up and the requirement grid is reached by any
/// such word, so a positive answer is conservative.
inline bool threshold_certificate(const WeightVector& W, const MultiplicityMatrix& M, double theta,
                                  long D, std::size_t grid) {
  double B = theta * W.norm() * std::sqrt(static_cast<double>(W.n));
  if (!(B > 0.0)) return false;
  std::vector<std::uint32_t> contrib(W.w.size());
  double scale = static_cast<double>(grid) / B;
  for (std::size_t i = 0; i < W.w.size(); ++i) {
    double c = std::ceil(W.w[i] * scale);
    contrib[i] = static_cast<std::uint32_t>(std::min(c, static_cast<double>(grid)));
  }
  std::uint64_t smin = min_score_dp(M, contrib, grid, /*need_at_least=*/true);
  return smin > static_cast<std::uint64_t>(D);
}

/// Certificate for the ball guarantee around a received word: every word
/// within lp distance d of y scores above D. Costs are rounded down
/// (adversary-favoring), so a positive answer is conservative.
inline bool ball_certificate(const ReceivedWord& y, const LpParams& par,
                             const MultiplicityMatrix& M, double dist, long D, std::size_t grid) {
  double budget = std::pow(dist, par.p);
  if (!(budget > 0.0)) budget = 1e-300;
  std::vector<std::uint32_t> cost(M.n * M.q);
  double scale = static_cast<double>(grid) / budget;
  for (std::size_t i = 0; i < M.n; ++i)
    for (std::size_t x = 0; x < M.q; ++x) {
      double e = std::fabs(lift_mod(y.residues[i] - static_cast<double>(x), y.q));
      double c = std::floor(std::pow(e, par.p) * scale);
      cost[i * M.q + x] = static_cast<std::uint32_t>(std::min(c, static_cast<double>(grid) + 1.0));
    }
  std::uint64_t smin = min_score_dp(M, cost, grid, /*need_at_least=*/false);
  return smin > static_cast<std::uint64_t>(D);
}

}  // namespace gs

namespace detail {

/// Re-index block i by x -> t_i * x, mapping GRS weights onto the
/// underlying RS code (twists are nonzero, so this is a bijection).
inline WeightVector untwist(const WeightVector& W, const CodeSpec& code) {
  WeightVector U(W.n, W.q);
  for (std::size_t i = 0; i < W.n; ++i) {
    std::uint64_t t = code.twist[i];
    for (std::size_t x = 0; x < W.q; ++x)
      U.at(i, x) = W.at(i, code.field.mul(t, x));
  }
  U.max_entry = W.max_entry;
  return U;
}

inline void collect_candidates(const CodeSpec& code, const std::vector<Poly>& roots,
                               const WeightVector& W, double threshold,
                               std::vector<Candidate>& out) {
  for (const auto& fpoly : roots) {
    Codeword c = encode(code, fpoly);
    double corr = correlation(W, c);
    if (corr < threshold - 1e-9) continue;
    bool dup = false;
    for (const auto& cand : out)
      if (cand.message == fpoly) { dup = true; break; }
    if (!dup) out.push_back({fpoly, c, corr});
  }
  std::sort(out.begin(), out.end(),
            [](const Candidate& a, const Candidate& b) { return a.message.coeffs() < b.message.coeffs(); });
}

}  // namespace detail

/// Soft-decision list decoder: returns every codeword with
/// corr(W, c) >= sqrt(R*) + tau. The multiplicity parameter escalates in
/// powers of two until the knapsack certificate proves the threshold
/// guarantee for the current assignment (or a budget cap trips).
inline DecodeResult soft_decode(const CodeSpec& code, const WeightVector& W, double tau,
                                const DecodeOptions& opts = {}) {
  if (!(tau > 0.0)) throw OutOfDomain("tau must be positive");
  if (code.k < 1) throw InvalidDimension();
  double nrm = W.norm();
  if (nrm == 0.0) throw ZeroWeightVector();
  double threshold = std::sqrt(code.adjusted_rate()) + tau;

  DecodeResult result;
  result.threshold = threshold;

  if (code.k == 1) {
    // Constant messages: score arguments degenerate, but the candidate set
    // is small enough to scan outright.
    for (std::uint64_t v = 0; v < code.field.q(); ++v) {
      Poly msg = Poly::constant(v, code.field);
      Codeword c = encode(code, msg);
      double corr = correlation(W, c);
      if (corr >= threshold - 1e-9) result.candidates.push_back({msg, c, corr});
    }
    result.diagnostics.certified = true;
    result.diagnostics.certificate = "exhaustive constant scan";
    return result;
  }

  WeightVector U = detail::untwist(W, code);
  CodeSpec rs(code.field, code.n, code.k, code.alpha, std::vector<std::uint64_t>(code.n, 1));

  double lambda = opts.lambda_start > 0.0
                      ? opts.lambda_start
                      : std::max(1.0, std::ceil(1.0 / std::max(W.max_entry, 1e-9)));
  for (; lambda <= opts.lambda_cap; lambda *= 2.0) {
    MultiplicityMatrix M(U.n, U.q);
    for (std::size_t i = 0; i < U.w.size(); ++i)
      M.m[i] = static_cast<std::uint32_t>(std::floor(lambda * U.w[i]));
    if (!M.any_positive()) continue;
    std::uint64_t cost = M.cost();
    long D = gs::degree_budget(cost, code.k);

    bool certified = opts.certify == CertifyMode::NONE ||
                     gs::threshold_certificate(U, M, threshold, D, opts.dp_grid);
    if (!certified) continue;
    if (cost > opts.cost_cap)
      throw BudgetExceeded("certified lambda=" + std::to_string(lambda) +
                           " needs cost=" + std::to_string(cost) + " > cap");

    BivariatePoly Q = gs::interpolate(rs, M);
    auto roots = y_roots(code.field, Q, code.k);
    detail::collect_candidates(code, roots, W, threshold, result.candidates);
    result.diagnostics = {lambda, cost, D, static_cast<std::size_t>(cost),
                          gs::monomial_count(D, code.k), opts.certify != CertifyMode::NONE,
                          opts.certify == CertifyMode::NONE ? "uncertified single shot"
                                                            : "threshold knapsack"};
    return result;
  }
  throw BudgetExceeded("threshold certificate unreachable below lambda cap");
}

/// Worst-case lp decoding: builds weights at the plan's optimized scale,
/// sets tau from the plan's rate bound, and escalates until the knapsack
/// ball certificate proves every codeword within lp distance
/// delta n^{1/p} of y lands in the list.
inline DecodeResult decode_lp(const CodeSpec& code, const ReceivedWord& y, double p,
                              const RatePlan& plan, const DecodeOptions& opts = {}) {
  if (plan.mode != PlanMode::WC || plan.p != p || plan.q != code.field.q())
    throw OutOfDomain("decode_lp needs a worst-case plan matching the code and exponent");
  double rstar = code.adjusted_rate();
  if (rstar >= plan.rate_bound) throw RateTooHigh();
  LpParams par(p, plan.s_star);
  double tau = std::sqrt(plan.rate_bound) - std::sqrt(rstar);
  double threshold = std::sqrt(rstar) + tau;
  double dist = plan.delta * std::pow(static_cast<double>(code.n), 1.0 / p);

  WeightVector W = build_weights(y, par, opts.tol);
  DecodeResult result;
  result.threshold = threshold;

  if (code.k == 1) {
    for (std::uint64_t v = 0; v < code.field.q(); ++v) {
      Poly msg = Poly::constant(v, code.field);
      Codeword c = encode(code, msg);
      double corr = correlation(W, c);
      if (corr >= threshold - 1e-9) result.candidates.push_back({msg, c, corr});
    }
    result.diagnostics.certified = true;
    result.diagnostics.certificate = "exhaustive constant scan";
    return result;
  }

  WeightVector U = detail::untwist(W, code);
  CodeSpec rs(code.field, code.n, code.k, code.alpha, std::vector<std::uint64_t>(code.n, 1));

  // The ball constraint lives in the original symbol domain; permute the
  // cost table through the twist by certifying against the untwisted
  // multiplicities with the twisted received word mapped per block.
  double lambda = opts.lambda_start > 0.0
                      ? opts.lambda_start
                      : std::max(1.0, std::ceil(1.0 / std::max(W.max_entry, 1e-9)));
  for (; lambda <= opts.lambda_cap; lambda *= 2.0) {
    MultiplicityMatrix M(U.n, U.q);
    for (std::size_t i = 0; i < U.w.size(); ++i)
      M.m[i] = static_cast<std::uint32_t>(std::floor(lambda * U.w[i]));
    if (!M.any_positive()) continue;
    std::uint64_t cost = M.cost();
    long D = gs::degree_budget(cost, code.k);

    // Score of word x under twisted multiplicities equals the untwisted
    // score of the untwisted word; run the DP in the original domain.
    MultiplicityMatrix Morig(W.n, W.q);
    for (std::size_t i = 0; i < W.n; ++i)
      for (std::size_t x = 0; x < W.q; ++x)
        Morig.at(i, x) = static_cast<std::uint32_t>(std::floor(lambda * W.at(i, x)));
    bool certified = opts.certify == CertifyMode::NONE ||
                     gs::ball_certificate(y, par, Morig, dist, D, opts.dp_grid);
    if (!certified) continue;
    if (cost > opts.cost_cap)
      throw BudgetExceeded("certified lambda=" + std::to_string(lambda) +
                           " needs cost=" + std::to_string(cost) + " > cap");

    BivariatePoly Q = gs::interpolate(rs, M);
    auto roots = y_roots(code.field, Q, code.k);
    detail::collect_candidates(code, roots, W, threshold, result.candidates);
    result.diagnostics = {lambda, cost, D, static_cast<std::size_t>(cost),
                          gs::monomial_count(D, code.k), opts.certify != CertifyMode::NONE,
                          opts.certify == CertifyMode::NONE ? "uncertified single shot"
                                                            : "ball knapsack"};
    return result;
  }
  throw BudgetExceeded("ball certificate unreachable below lambda cap");
}

}  // namespace lpdec
