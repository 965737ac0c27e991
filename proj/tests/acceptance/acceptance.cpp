// Acceptance suite: end-to-end checks of the library's quantitative
// guarantees, one line of output per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lpdec/lpdec.hpp"

using namespace lpdec;

namespace {

struct Criterion {
  int id;
  std::string name;
  std::function<bool(std::string&)> run;
};

// ---------------------------------------------------------------- C1
bool c1_lattice_closed_form(std::string& detail) {
  double worst = 0.0;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 17ull}) {
    for (double s : {0.5, 1.0, 2.0, 4.0}) {
      LpParams par(1.0, s);
      double closed = lattice_sum(par, q, 1e-12).value;
      // brute-force enumeration; radius R makes the geometric tail
      // (4R+2)^2/q * e^{-2R/s} fall below 1e-12
      long R = 8;
      while ((4.0 * R + 2.0) * (4.0 * R + 2.0) / static_cast<double>(q) *
                 std::exp(-2.0 * static_cast<double>(R) / s) >=
             1e-12)
        R *= 2;
      double brute = 0.0;
      for (long u = -R; u <= R; ++u)
        for (long v = -R; v <= R; ++v)
          if ((u - v) % static_cast<long>(q) == 0)
            brute += f_point(par, static_cast<double>(u)) * f_point(par, static_cast<double>(v));
      worst = std::max(worst, std::fabs(closed - brute));
    }
  }
  std::ostringstream os;
  os << "max |closed - brute| = " << worst;
  detail = os.str();
  return worst < 1e-9;
}

// ---------------------------------------------------------------- C2
bool c2_psf(std::string& detail) {
  double worst = 0.0;
  for (double s : {0.5, 1.0, 2.0, 4.0}) worst = std::max(worst, psf_check(s, 1e-12));
  std::ostringstream os;
  os << "max residual = " << worst;
  detail = os.str();
  return worst < 1e-10;
}

// ---------------------------------------------------------------- C3
bool c3_corr_bound(std::string& detail) {
  int trials = 0, violations = 0;
  double worst_slack = 1.0;
  RngStream rng = RngStream::keyed(301, 0);
  while (trials < 1000) {
    for (std::uint64_t q : {5ull, 17ull})
      for (std::size_t n : {2ull, 8ull})
        for (double p : {1.0, 2.0})
          for (double s : {0.5, 1.0, 2.0}) {
            ++trials;
            LpParams par(p, s);
            std::vector<double> ys(n);
            Codeword c;
            for (std::size_t i = 0; i < n; ++i) {
              c.symbols.push_back(rng.uniform_below(q));
              ys[i] = rng.uniform01() * static_cast<double>(q);
            }
            ReceivedWord y(static_cast<double>(q), ys);
            auto W = build_weights(y, par);
            auto b = corr_lower_bound(y, c, par);
            double corr = correlation(W, c);
            worst_slack = std::min({worst_slack, corr - b.arith, b.arith - b.geom});
            if (corr < b.arith - 1e-9 || b.arith < b.geom - 1e-9) ++violations;
          }
  }
  std::ostringstream os;
  os << trials << " instances, min slack = " << worst_slack;
  detail = os.str();
  return violations == 0;
}

// ---------------------------------------------------------------- C4
bool c4_ww_sandwich(std::string& detail) {
  std::uint64_t q = 17;
  int violations = 0;
  double eq_err = 0.0;
  for (double s : {1.0, 2.0}) {
    LpParams par(2.0, s);
    double f = lattice_sum(par, q, 1e-13).value;
    double eps = roughness(par, q, RoughnessKind::LQ_DIAGONAL, 1e-13);
    RngStream rng = RngStream::keyed(302, static_cast<std::uint64_t>(s));
    for (int t = 0; t < 100; ++t) {
      std::size_t n = 1 + t % 6;
      std::vector<double> ys(n);
      for (auto& v : ys) v = rng.uniform01() * static_cast<double>(q);
      auto W = build_weights(ReceivedWord(static_cast<double>(q), ys), par, 1e-13);
      double ratio = W.norm() * W.norm() / static_cast<double>(n);
      if (ratio > f * (1.0 + 1e-9) || ratio < f * (1.0 - eps) / (1.0 + eps) - 1e-9) ++violations;
    }
    auto W0 = build_weights(ReceivedWord(static_cast<double>(q), std::vector<double>(4, 0.0)), par,
                            1e-13);
    eq_err = std::max(eq_err, std::fabs(W0.norm() * W0.norm() / 4.0 - f));
  }
  std::ostringstream os;
  os << "200 samples, boundary error at y=0: " << eq_err;
  detail = os.str();
  return violations == 0 && eq_err < 1e-9;
}

// ---------------------------------------------------------------- C5
bool c5_decoder_oracle(std::string& detail) {
  int missed = 0, spurious = 0, decoded = 0;
  std::size_t nonempty = 0;
  for (auto [q, n, k] : {std::tuple<std::uint64_t, std::size_t, std::size_t>{5, 4, 2},
                         {5, 5, 2},
                         {7, 6, 2}}) {
    CodeSpec code = CodeSpec::reed_solomon(q, n, k);
    RngStream rng = RngStream::keyed(303, q, n);
    for (int trial = 0; trial < 50; ++trial) {
      WeightVector W(n, q);
      if (trial % 2) {
        for (auto& v : W.w) v = rng.uniform01();
      } else {
        Codeword planted;
        for (std::size_t i = 0; i < n; ++i) planted.symbols.push_back(rng.uniform_below(q));
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t x = 0; x < q; ++x)
            W.at(i, x) = 0.2 * rng.uniform01() + (planted.symbols[i] == x ? 0.75 : 0.0);
      }
      W.refresh_max();
      auto res = soft_decode(code, W, 0.2);
      ++decoded;
      nonempty += !res.candidates.empty();
      std::set<std::vector<std::uint64_t>> got;
      for (const auto& cand : res.candidates) {
        got.insert(cand.message.coeffs());
        if (cand.correlation < res.threshold - 1e-9) ++spurious;
      }
      for_each_codeword(code, [&](const Poly& msg, const Codeword& c) {
        if (correlation(W, c) >= res.threshold && !got.count(msg.coeffs())) ++missed;
      });
    }
  }
  std::ostringstream os;
  os << decoded << " decodes (" << nonempty << " nonempty), missed = " << missed
     << ", spurious = " << spurious;
  detail = os.str();
  return missed == 0 && spurious == 0;
}

// ---------------------------------------------------------------- C6
bool c6_worst_case_decode(std::string& detail) {
  CodeSpec code = subclass_alpha_alpha(17, 16, 2);  // R* = 1/16
  double rstar = code.adjusted_rate();
  double delta = 1.0;
  int failures = 0, trials = 0;
  std::ostringstream os;
  for (double p : {1.0, 2.0}) {
    RatePlan plan = rate_wc(p, 17, delta);
    if (!(plan.rate_bound > 1.2 * rstar)) {
      detail = "margin requirement violated";
      return false;
    }
    RngStream msg_rng = RngStream::keyed(304, static_cast<std::uint64_t>(p));
    for (auto strategy : {AdversaryStrategy::SPREAD, AdversaryStrategy::CONCENTRATED,
                          AdversaryStrategy::RANDOM_SPHERE}) {
      for (int t = 0; t < 200; ++t) {
        Poly msg;
        msg.set_coeff(0, msg_rng.uniform_below(17));
        msg.set_coeff(1, msg_rng.uniform_below(17));
        msg.normalize(code.field);
        Codeword c = encode(code, msg);
        auto err = adversarial_error(p, delta, 16, 17, strategy, msg_rng.next());
        std::vector<double> ys(16);
        for (std::size_t i = 0; i < 16; ++i)
          ys[i] = reduce_mod(static_cast<double>(c.symbols[i]) + err[i], 17.0);
        auto res = decode_lp(code, ReceivedWord(17.0, ys), p, plan);
        ++trials;
        if (!res.contains(c)) ++failures;
      }
    }
    os << "p=" << p << " bound=" << plan.rate_bound << " ";
  }
  os << trials << " decodes, misses = " << failures;
  detail = os.str();
  return failures == 0;
}

// ---------------------------------------------------------------- C7
bool c7_rate_curves(std::string& detail) {
  double d2 = crossover_delta(2, 10007, 0.45, 0.6);
  double r2 = rate_wc(2.0, 10007, d2).rate_bound;
  double d1 = crossover_delta(1, 10007, 0.7, 0.9);
  double r1 = rate_wc(1.0, 10007, d1).rate_bound;
  double small = rate_wc(2.0, 10007, 1e-3).rate_bound;
  std::ostringstream os;
  os << "l2 crossover (" << d2 << ", " << r2 << "), l1 crossover (" << d1 << ", " << r1
     << "), small-delta l2 " << small;
  detail = os.str();
  return std::fabs(d2 - 0.51797) < 1e-3 && std::fabs(r2 - 0.46342) < 1e-3 &&
         std::fabs(d1 - 0.78988) < 1e-3 && std::fabs(r1 - 0.21012) < 1e-3 &&
         std::fabs(small - 0.93700) < 2e-3;
}

// ---------------------------------------------------------------- C8
bool c8_asymptotics(std::string& detail) {
  double v2 = rate_wc(2.0, 1000000, 1000.0).rate_bound * 1000.0;
  double v1 = rate_wc(1.0, 10000000, 1000.0).rate_bound * 1000.0;

  auto solve_delta = [](double p, double lo, double hi, double target) {
    for (int it = 0; it < 50; ++it) {
      double mid = (lo + hi) / 2.0;
      if (rate_wc(p, 10000000, mid).rate_bound > target) lo = mid;
      else hi = mid;
    }
    return (lo + hi) / 2.0;
  };
  double R = 1e-3;
  double dec2 = solve_delta(2.0, 150.0, 400.0, R);
  double uniq2 = std::sqrt((1.0 / (R * R) - 1.0) / 48.0);
  double ratio2 = dec2 / uniq2;
  double dec1 = solve_delta(1.0, 120.0, 300.0, R);
  double uniq1 = (1.0 - R * R) / (8.0 * R);
  double ratio1 = dec1 / uniq1;

  std::ostringstream os;
  os << "delta*R: l2 " << v2 << " l1 " << v1 << "; uniq multiples " << ratio2 << ", " << ratio1;
  detail = os.str();
  return std::fabs(v2 - 1.0 / std::sqrt(2.0 * M_PI * M_E)) < 1e-3 &&
         std::fabs(v1 - 1.0 / (2.0 * M_E)) < 1e-3 &&
         std::fabs(ratio2 - 4.0 * std::sqrt(3.0) / std::sqrt(2.0 * M_PI * M_E)) < 1e-3 &&
         std::fabs(ratio1 - 4.0 / M_E) < 1e-3;
}

// ---------------------------------------------------------------- C9
bool c9_min_dist(std::string& detail) {
  int violations = 0, cases = 0;
  for (std::uint64_t q : {5ull, 7ull, 11ull, 13ull}) {
    std::size_t n = q - 1;
    for (std::size_t k = 1; k <= 3; ++k) {
      CodeSpec code = subclass_alpha_alpha(q, n, k);
      ++cases;
      double l1 = exhaustive_min_dist(code, 1);
      double l2sq = exhaustive_min_dist(code, 2);
      double b1 = min_dist_lower_bound(1, n, k);
      double b2 = min_dist_lower_bound(2, n, k);
      if (l1 < b1 - 1e-9 || l2sq < b2 * b2 - 1e-9) ++violations;
    }
  }
  std::ostringstream os;
  os << cases << " (q,k) pairs enumerated exhaustively";
  detail = os.str();
  return violations == 0;
}

// ---------------------------------------------------------------- C10
bool c10_average_case(std::string& detail) {
  CodeSpec code = CodeSpec::reed_solomon(97, 96, 6);
  ChannelSpec ch;
  ch.p = 2.0;
  ch.r = 2.0;
  ch.kind = ChannelKind::CONTINUOUS;
  ch.seed = 20260810;
  RatePlan plan = rate_ac(2.0, 97, 2.0);
  LpParams par(2.0, plan.s_star);
  ExperimentConfig cfg;
  cfg.alpha = 0.9;
  cfg.lambda = 2.0;

  TrialReport rep1 = run_experiment(code, ch, par, 500, 1, cfg);
  TrialReport rep8 = run_experiment(code, ch, par, 500, 8, cfg);
  bool identical = trial_report_to_json(rep1).dump() == trial_report_to_json(rep8).dump();

  double phat = rep1.failure_rate();
  double se = std::sqrt(phat * (1.0 - phat) / static_cast<double>(rep1.trials));
  bool within = phat <= rep1.bound + 3.0 * se;

  std::ostringstream os;
  os << "failure rate " << phat << " vs bound " << rep1.bound
     << ", identical bytes: " << (identical ? "yes" : "no");
  detail = os.str();
  return identical && within && rep1.decoder_errors == 0;
}

// ---------------------------------------------------------------- C11
bool c11_sampler_calibration(std::string& detail) {
  // discrete pmf chi-square on 1e5 draws
  ChannelSpec ch;
  ch.p = 1.0;
  ch.r = 1.0;
  ch.kind = ChannelKind::DISCRETE;
  ch.seed = 271828;
  std::size_t N = 100000;
  auto e = sample_error(ch, N, 97);
  LpParams par(1.0, 1.0);
  double total = theta_Z(par, 1e-14).value;
  int Z = 1;
  while (f_point(par, Z + 1) / total * static_cast<double>(N) >= 5.0) ++Z;
  std::vector<double> obs(2 * Z + 3, 0.0), exp_counts(2 * Z + 3, 0.0);
  for (double v : e) {
    int z = static_cast<int>(v);
    int idx = z < -Z ? 0 : z > Z ? 2 * Z + 2 : z + Z + 1;
    obs[static_cast<std::size_t>(idx)] += 1.0;
  }
  for (int z = -Z; z <= Z; ++z)
    exp_counts[static_cast<std::size_t>(z + Z + 1)] =
        f_point(par, z) / total * static_cast<double>(N);
  double tail = 0.0;
  for (int z = Z + 1; z < Z + 300; ++z) tail += f_point(par, z) / total * static_cast<double>(N);
  exp_counts[0] = exp_counts[2 * Z + 2] = tail;
  double pval = stats::chi_square_pvalue(stats::pearson_statistic(obs, exp_counts), 2 * Z + 2);

  // continuous E[f_s(e)] against the exact continuous mu
  ChannelSpec cc;
  cc.p = 1.0;
  cc.r = 1.0;
  cc.kind = ChannelKind::CONTINUOUS;
  cc.seed = 314159;
  auto ec = sample_error(cc, N, 97);
  LpParams ps(1.0, 1.0);
  double m1 = 0.0, m2 = 0.0;
  for (double v : ec) {
    double f = f_point(ps, v);
    m1 += f;
    m2 += f * f;
  }
  m1 /= static_cast<double>(N);
  m2 /= static_cast<double>(N);
  double se = std::sqrt((m2 - m1 * m1) / static_cast<double>(N));
  double target = mu(1.0, 1.0, 1.0, MuKind::CONTINUOUS);
  bool mu_ok = std::fabs(m1 - target) < 4.0 * se;

  // strict discrete > continuous at r = s = 1, p = 1
  double disc = mu(1.0, 1.0, 1.0, MuKind::DISCRETE);
  bool strict = disc > target;

  std::ostringstream os;
  os << "chi-square p = " << pval << ", E[f_s(e)] = " << m1 << " vs " << target
     << ", discrete mu = " << disc;
  detail = os.str();
  return pval > 0.01 && mu_ok && strict;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "closed-form lattice sum vs brute enumeration", c1_lattice_closed_form},
      {2, "Poisson summation identity (p=2)", c2_psf},
      {3, "correlation lower bound on random instances", c3_corr_bound},
      {4, "weight-norm sandwich with boundary equality", c4_ww_sandwich},
      {5, "decoder completeness vs exhaustive oracle", c5_decoder_oracle},
      {6, "worst-case adversarial decode guarantee", c6_worst_case_decode},
      {7, "rate-curve crossovers and small-delta anchor", c7_rate_curves},
      {8, "asymptotic rate limits and unique-decoding multiples", c8_asymptotics},
      {9, "minimum-distance bounds by exhaustive search", c9_min_dist},
      {10, "average-case decoding consistency and determinism", c10_average_case},
      {11, "channel sampler calibration", c11_sampler_calibration},
  };

  int failures = 0;
  for (auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s  C%02d %s (%s) [%.2fs]\n", ok ? "PASS" : "FAIL", c.id, c.name.c_str(),
                detail.c_str(), secs);
    std::fflush(stdout);
    failures += ok ? 0 : 1;
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  else std::printf("all %zu criteria passed\n", criteria.size());
  return failures == 0 ? 0 : 1;
}
