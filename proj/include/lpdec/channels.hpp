#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <thread>
#include <vector>

#include "lpdec/decoder.hpp"
#include "lpdec/grs.hpp"
#include "lpdec/planner.hpp"
#include "lpdec/rng.hpp"
#include "lpdec/weights.hpp"

namespace lpdec {

struct BudgetInfeasible : Error {
  BudgetInfeasible() : Error("per-coordinate error magnitude would exceed the lift range q/2") {}
};

enum class ChannelKind { CONTINUOUS, DISCRETE, ADVERSARIAL };
enum class AdversaryStrategy { SPREAD, CONCENTRATED, RANDOM_SPHERE };

/// Memoryless additive channel (continuous or discrete, proportional to
/// f_r) or an adversarial bounded-lp error source. The seed fully
/// determines the output. `bad_coords`, when positive, overlays uniform
/// residues on that many coordinates (the mixed-channel variant).
struct ChannelSpec {
  double p = 2.0;
  double r = 1.0;        // width for random kinds
  ChannelKind kind = ChannelKind::CONTINUOUS;
  double delta = 0.0;    // relative distance for adversarial kind
  AdversaryStrategy strategy = AdversaryStrategy::SPREAD;
  std::uint64_t seed = 0;
  std::size_t bad_coords = 0;
};

namespace detail {

/// Inverse-CDF table for the discrete distribution f_r(z)/f_r(Z) over Z,
/// truncated where the remaining tail mass drops below 1e-15.
struct DiscreteTable {
  std::vector<double> pmf_abs;  // pmf at |z| = 0, 1, 2, ...
  int zmax = 0;

  DiscreteTable(double p, double r) {
    LpParams par(p, r);
    double total = theta_Z(par, 1e-16).value;
    double mass = 1.0 / total;
    pmf_abs.push_back(mass);
    double acc = mass;
    for (int z = 1; acc < 1.0 - 1e-15 && z < 100000000; ++z) {
      double m = f_point(par, static_cast<double>(z)) / total;
      pmf_abs.push_back(m);
      acc += 2.0 * m;
      zmax = z;
    }
  }

  double sample(RngStream& rng) const {
    double u = rng.uniform01();
    double acc = pmf_abs[0];
    if (u < acc) return 0.0;
    for (int z = 1; z <= zmax; ++z) {
      acc += 2.0 * pmf_abs[static_cast<std::size_t>(z)];
      if (u < acc) {
        // split the two signs evenly with one more draw
        return rng.uniform01() < 0.5 ? static_cast<double>(z) : -static_cast<double>(z);
      }
    }
    return rng.uniform01() < 0.5 ? static_cast<double>(zmax) : -static_cast<double>(zmax);
  }
};

}  // namespace detail

/// n independent channel draws (raw error values, not reduced mod q).
/// Continuous: Laplace of scale r/2 (p=1) or Gaussian of standard
/// deviation r/sqrt(2 pi) (p=2). Discrete: pmf f_r(z)/f_r(Z).
inline std::vector<double> sample_error(const ChannelSpec& spec, std::size_t n, std::uint64_t q) {
  (void)q;
  if (spec.kind == ChannelKind::ADVERSARIAL)
    throw Error("sample_error expects a random channel kind");
  if (spec.p != 1.0 && spec.p != 2.0)
    throw UnsupportedExponent("random channels support p in {1, 2} only");
  std::vector<double> e(n);
  if (spec.kind == ChannelKind::CONTINUOUS) {
    for (std::size_t i = 0; i < n; ++i) {
      RngStream rng = RngStream::keyed(spec.seed, 1, i);
      e[i] = spec.p == 1.0 ? (spec.r / 2.0) * rng.laplace_unit()
                           : (spec.r / std::sqrt(2.0 * M_PI)) * rng.gaussian();
    }
  } else {
    detail::DiscreteTable table(spec.p, spec.r);
    for (std::size_t i = 0; i < n; ++i) {
      RngStream rng = RngStream::keyed(spec.seed, 2, i);
      e[i] = table.sample(rng);
    }
  }
  return e;
}

/// Error vector with ||e||_p = delta * n^{1/p} exactly (to float
/// precision). SPREAD: magnitude delta everywhere, random signs.
/// CONCENTRATED: the budget on ceil(n min(1, (2 delta/q)^p)) coordinates,
/// capped at q/2 each. RANDOM_SPHERE: uniform direction on the lp sphere
/// via normalized generalized-Gaussian magnitudes.
inline std::vector<double> adversarial_error(double p, double delta, std::size_t n,
                                             std::uint64_t q, AdversaryStrategy strategy,
                                             std::uint64_t seed) {
  double qd = static_cast<double>(q);
  if (delta > qd / 2.0) throw BudgetInfeasible();
  std::vector<double> e(n, 0.0);
  if (delta == 0.0) return e;
  double d = delta * std::pow(static_cast<double>(n), 1.0 / p);
  RngStream rng = RngStream::keyed(seed, 3);
  switch (strategy) {
    case AdversaryStrategy::SPREAD: {
      for (std::size_t i = 0; i < n; ++i)
        e[i] = (rng.uniform01() < 0.5 ? -1.0 : 1.0) * delta;
      break;
    }
    case AdversaryStrategy::CONCENTRATED: {
      double frac = std::min(1.0, std::pow(2.0 * delta / qd, p));
      std::size_t count = static_cast<std::size_t>(std::ceil(static_cast<double>(n) * frac));
      count = std::max<std::size_t>(1, std::min(count, n));
      double mag = d / std::pow(static_cast<double>(count), 1.0 / p);
      if (mag > qd / 2.0 + 1e-12) throw BudgetInfeasible();
      std::vector<std::size_t> idx(n);
      for (std::size_t i = 0; i < n; ++i) idx[i] = i;
      for (std::size_t i = 0; i < count; ++i) {  // partial Fisher-Yates
        std::size_t j = i + static_cast<std::size_t>(rng.uniform_below(n - i));
        std::swap(idx[i], idx[j]);
        e[idx[i]] = (rng.uniform01() < 0.5 ? -1.0 : 1.0) * mag;
      }
      break;
    }
    case AdversaryStrategy::RANDOM_SPHERE: {
      std::vector<double> g(n);
      double norm_p = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        // |g|^p ~ Gamma(1/p) gives the p-generalized Gaussian magnitude
        double mag = std::pow(rng.gamma(1.0 / p), 1.0 / p);
        g[i] = (rng.uniform01() < 0.5 ? -1.0 : 1.0) * mag;
        norm_p += std::pow(std::fabs(g[i]), p);
      }
      double scale = d / std::pow(norm_p, 1.0 / p);
      for (std::size_t i = 0; i < n; ++i) e[i] = g[i] * scale;
      break;
    }
  }
  return e;
}

struct TrialRecord {
  bool success = false;
  bool decoder_error = false;
  std::size_t list_size = 0;
  double corr_transmitted = 0.0;
};

struct TrialReport {
  std::size_t trials = 0;
  std::size_t successes = 0;
  std::size_t decoder_errors = 0;
  double mean_list_size = 0.0;
  std::vector<double> corr_quantiles;  // 5/25/50/75/95th percentiles
  double bound = 1.0;                  // failure_prob at the configured alpha
  double alpha = 0.9;
  std::uint64_t seed = 0;

  double failure_rate() const {
    return trials ? 1.0 - static_cast<double>(successes) / static_cast<double>(trials) : 0.0;
  }
};

struct ExperimentConfig {
  double alpha = 0.9;
  double s = 0.0;          // 0 = use the rate_ac optimizer's s*
  double lambda = 4.0;     // fixed multiplicity parameter per trial
  std::uint64_t cost_cap = 5000;
  double tol = 1e-12;
};

/// Monte Carlo harness: per trial encodes a random message, adds channel
/// error, decodes, and records whether the transmitted codeword made the
/// list. Deterministic for a given seed at any parallelism degree.
inline TrialReport run_experiment(const CodeSpec& code, const ChannelSpec& channel,
                                  const LpParams& params, std::size_t trials,
                                  std::size_t parallelism = 1,
                                  const ExperimentConfig& cfg = {}) {
  if (trials < 1) throw OutOfDomain("trials must be at least 1");
  const std::uint64_t q = code.field.q();
  const double qd = static_cast<double>(q);

  double rstar = code.adjusted_rate();
  double threshold;
  double bound = 1.0;
  if (channel.kind == ChannelKind::ADVERSARIAL) {
    threshold = std::sqrt(rstar) + 1e-6;
  } else {
    LatticeSumResult f = lattice_sum(params, q, cfg.tol);
    double A = mu(params.p, channel.r, params.s, MuKind::CONTINUOUS) / std::sqrt(f.value);
    if (A > std::sqrt(rstar)) {
      threshold = A - cfg.alpha * (A - std::sqrt(rstar));
      bound = failure_prob(params.p, q, channel.r, params.s, cfg.alpha, code.n, rstar, cfg.tol);
    } else {
      // out-of-guarantee regime: still run and report, with a vacuous bound
      threshold = std::sqrt(rstar) + 1e-6;
      bound = 1.0;
    }
  }
  double tau = threshold - std::sqrt(rstar);

  std::vector<TrialRecord> records(trials);
  auto run_trial = [&](std::size_t t) {
    RngStream msg_rng = RngStream::keyed(channel.seed, 100, t);
    Poly msg;
    for (std::size_t i = 0; i < code.k; ++i) {
      std::uint64_t c = msg_rng.uniform_below(q);
      if (c) msg.set_coeff(i, c);
    }
    msg.normalize(code.field);
    Codeword cw = encode(code, msg);

    ChannelSpec ch = channel;
    ch.seed = RngStream::keyed(channel.seed, 200, t).next();
    std::vector<double> err;
    if (ch.kind == ChannelKind::ADVERSARIAL)
      err = adversarial_error(params.p, ch.delta, code.n, q, ch.strategy, ch.seed);
    else
      err = sample_error(ch, code.n, q);
    if (channel.bad_coords > 0) {
      RngStream bad = RngStream::keyed(channel.seed, 300, t);
      for (std::size_t j = 0; j < std::min(channel.bad_coords, code.n); ++j)
        err[j] = bad.uniform01() * qd;  // arbitrary residues on the bad set
    }

    std::vector<double> y(code.n);
    for (std::size_t i = 0; i < code.n; ++i)
      y[i] = reduce_mod(static_cast<double>(cw.symbols[i]) + err[i], qd);
    ReceivedWord rw(qd, std::move(y));

    TrialRecord rec;
    try {
      WeightVector W = build_weights(rw, params, cfg.tol);
      DecodeOptions opts;
      opts.certify = CertifyMode::NONE;
      opts.lambda_start = cfg.lambda;
      opts.cost_cap = cfg.cost_cap;
      DecodeResult res = soft_decode(code, W, tau, opts);
      rec.success = res.contains(cw);
      rec.list_size = res.candidates.size();
      rec.corr_transmitted = correlation(W, cw);
    } catch (const std::exception&) {
      rec.decoder_error = true;
    }
    records[t] = rec;
  };

  if (parallelism <= 1) {
    for (std::size_t t = 0; t < trials; ++t) run_trial(t);
  } else {
    std::vector<std::thread> pool;
    std::size_t workers = std::min(parallelism, trials);
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t t = w; t < trials; t += workers) run_trial(t);
      });
    for (auto& th : pool) th.join();
  }

  TrialReport rep;
  rep.trials = trials;
  rep.seed = channel.seed;
  rep.alpha = cfg.alpha;
  rep.bound = bound;
  double ls = 0.0;
  std::vector<double> corrs;
  corrs.reserve(trials);
  for (const auto& rec : records) {
    rep.successes += rec.success ? 1 : 0;
    rep.decoder_errors += rec.decoder_error ? 1 : 0;
    ls += static_cast<double>(rec.list_size);
    corrs.push_back(rec.corr_transmitted);
  }
  rep.mean_list_size = ls / static_cast<double>(trials);
  std::sort(corrs.begin(), corrs.end());
  for (double pq : {0.05, 0.25, 0.5, 0.75, 0.95}) {
    std::size_t idx = static_cast<std::size_t>(pq * static_cast<double>(trials - 1) + 0.5);
    rep.corr_quantiles.push_back(corrs[idx]);
  }
  return rep;
}

}  // namespace lpdec
