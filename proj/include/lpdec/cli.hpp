#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lpdec/channels.hpp"
#include "lpdec/decoder.hpp"
#include "lpdec/grs.hpp"
#include "lpdec/planner.hpp"
#include "lpdec/serialize.hpp"
#include "lpdec/stats.hpp"

namespace lpdec {
namespace cli {

// exit codes: 0 success, 1 empty result / failed check, 2 usage or
// validation error, 3 rate guard tripped
constexpr int kOk = 0;
constexpr int kEmpty = 1;
constexpr int kUsage = 2;
constexpr int kRateGuard = 3;

namespace detail {

struct CodeArgs {
  std::uint64_t q = 0;
  std::size_t n = 0;
  std::size_t k = 0;
  std::string alpha_csv, twist_csv;
  bool alpha_alpha = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--q", q, "prime field size")->required();
    cmd->add_option("--n", n, "block length")->required();
    cmd->add_option("--k", k, "code dimension")->required();
    cmd->add_option("--alpha", alpha_csv, "evaluation points (comma separated)");
    cmd->add_option("--twist", twist_csv, "twist factors (comma separated)");
    cmd->add_flag("--alpha-alpha", alpha_alpha, "GRS(alpha,alpha) subclass with alpha = 1..n");
  }

  CodeSpec build() const {
    if (alpha_alpha) return subclass_alpha_alpha(q, n, k);
    if (alpha_csv.empty()) return CodeSpec::reed_solomon(q, n, k);
    auto a = parse_csv_u64(alpha_csv);
    auto t = twist_csv.empty() ? std::vector<std::uint64_t>(a.size(), 1) : parse_csv_u64(twist_csv);
    return CodeSpec(Field(q), n, k, a, t);
  }
};

inline std::vector<double> parse_grid(const std::string& spec) {
  // "start:step:stop" inclusive of stop up to float slack
  auto c1 = spec.find(':');
  auto c2 = spec.rfind(':');
  if (c1 == std::string::npos || c2 == c1) throw Error("grid must be start:step:stop");
  double start = std::stod(spec.substr(0, c1));
  double step = std::stod(spec.substr(c1 + 1, c2 - c1 - 1));
  double stop = std::stod(spec.substr(c2 + 1));
  if (!(step > 0.0)) throw Error("grid step must be positive");
  std::vector<double> grid;
  for (double v = start; v <= stop + step * 1e-9; v += step) grid.push_back(v);
  return grid;
}

inline void emit(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty() || path == "-") out << content;
  else write_file(path, content);
}

}  // namespace detail

inline int cmd_encode(const detail::CodeArgs& ca, const std::string& message_csv, bool random_msg,
                      std::uint64_t seed, const std::string& out_path, std::ostream& out) {
  CodeSpec code = ca.build();
  Poly msg;
  if (random_msg) {
    RngStream rng = RngStream::keyed(seed, 7);
    for (std::size_t i = 0; i < code.k; ++i) {
      auto c = rng.uniform_below(code.field.q());
      if (c) msg.set_coeff(i, c);
    }
  } else {
    auto coeffs = parse_csv_u64(message_csv);
    if (coeffs.size() > code.k) throw DegreeTooLarge();
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      if (coeffs[i] % code.field.q()) msg.set_coeff(i, coeffs[i] % code.field.q());
  }
  msg.normalize(code.field);
  Codeword c = encode(code, msg);
  detail::emit(out_path, codeword_to_csv(c) + "\n", out);
  if (!out_path.empty() && out_path != "-") {
    Json sidecar{{"message_coeffs", msg.coeffs()}, {"code", code_to_json(code)}};
    write_file(out_path + ".json", sidecar.dump(2) + "\n");
  }
  return kOk;
}

inline int cmd_corrupt(const std::string& in_path, std::uint64_t q, double p, double delta,
                       const std::string& strategy, double r, const std::string& kind,
                       std::uint64_t seed, const std::string& out_path, std::ostream& out) {
  auto symbols = parse_csv_u64(first_line(read_file(in_path)));
  std::size_t n = symbols.size();
  std::vector<double> err;
  if (kind == "adversarial") {
    AdversaryStrategy st = strategy == "concentrated" ? AdversaryStrategy::CONCENTRATED
                           : strategy == "sphere"     ? AdversaryStrategy::RANDOM_SPHERE
                                                      : AdversaryStrategy::SPREAD;
    err = adversarial_error(p, delta, n, q, st, seed);
  } else {
    ChannelSpec ch;
    ch.p = p;
    ch.r = r;
    ch.kind = kind == "discrete" ? ChannelKind::DISCRETE : ChannelKind::CONTINUOUS;
    ch.seed = seed;
    err = sample_error(ch, n, q);
  }
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i)
    y[i] = reduce_mod(static_cast<double>(symbols[i]) + err[i], static_cast<double>(q));
  detail::emit(out_path, received_to_csv(ReceivedWord(static_cast<double>(q), y)) + "\n", out);
  return kOk;
}

inline int cmd_decode(const detail::CodeArgs& ca, const std::string& in_path, double p,
                      double delta, double s_override, bool seed_s, bool force, double tol,
                      const std::string& dump_weights, const std::string& out_path,
                      std::ostream& out, std::ostream& err) {
  CodeSpec code = ca.build();
  ReceivedWord y(static_cast<double>(code.field.q()),
                 parse_csv_doubles(first_line(read_file(in_path))));
  if (y.size() != code.n) throw Error("received word length does not match the code");

  RatePlan plan;
  if (s_override > 0.0 || seed_s) {
    double s = s_override > 0.0 ? s_override
               : p == 2.0       ? delta * std::sqrt(4.0 * M_PI)
               : p == 1.0       ? 4.0 / std::log(D_of_delta(delta))
                                : std::pow(2.0 * p, 1.0 / p) * LpParams::normalizer(p) * delta;
    plan.p = p;
    plan.q = code.field.q();
    plan.mode = PlanMode::WC;
    plan.delta = delta;
    plan.s_star = s;
    double w = W_bound(p, code.field.q(), delta, s, tol);
    plan.rate_bound = w * w;
  } else {
    plan = rate_wc(p, code.field.q(), delta, tol);
  }
  plan.tau_suggestion = plan_tau(plan, code.adjusted_rate());

  if (!dump_weights.empty()) {
    LpParams par(p, plan.s_star);
    write_file(dump_weights, weights_to_csv(build_weights(y, par, tol)));
  }

  DecodeResult res;
  try {
    res = decode_lp(code, y, p, plan, DecodeOptions{});
  } catch (const RateTooHigh&) {
    if (!force) {
      err << "rate guard: R* = " << code.adjusted_rate() << " >= bound " << plan.rate_bound
          << " (use --force to decode anyway)\n";
      return kRateGuard;
    }
    LpParams par(p, plan.s_star);
    WeightVector W = build_weights(y, par, tol);
    DecodeOptions opts;
    opts.certify = CertifyMode::NONE;
    opts.lambda_start = std::max(1.0, std::ceil(4.0 / std::max(W.max_entry, 1e-9)));
    res = soft_decode(code, W, 1e-6, opts);
  }
  detail::emit(out_path, decode_result_to_json(res).dump(2) + "\n", out);
  return res.candidates.empty() ? kEmpty : kOk;
}

inline int cmd_rates(double p, std::uint64_t q, double delta, double r, std::size_t n,
                     std::size_t k, double tol, const std::string& out_path, std::ostream& out) {
  RatePlan plan = r > 0.0 ? rate_ac(p, q, r, tol) : rate_wc(p, q, delta, tol);
  if (n > 0 && k > 0) {
    double rstar = (static_cast<double>(k) - 1.0) / static_cast<double>(n);
    if (plan.rate_bound > rstar) plan.tau_suggestion = plan_tau(plan, rstar);
  }
  detail::emit(out_path, plan_to_json(plan).dump(2) + "\n", out);
  return kOk;
}

inline int cmd_curves(int p, std::uint64_t q, const std::string& grid_spec, const std::string& mode,
                      const std::string& format, double tol, const std::string& out_path,
                      std::ostream& out, std::ostream& err) {
  auto grid = detail::parse_grid(grid_spec);
  if (grid.empty()) {
    err << "empty grid\n";
    return kUsage;
  }
  if (mode == "ac") {
    std::ostringstream os;
    if (format == "json") {
      Json arr = Json::array();
      for (double r : grid) {
        RatePlan plan = rate_ac(p, q, r, tol);
        Json row{{"r", r}, {"rate_ac_opt", plan.rate_bound}};
        if (std::isfinite(plan.closed_form_bound)) row["rate_ac_closed"] = plan.closed_form_bound;
        arr.push_back(row);
      }
      os << arr.dump(2) << "\n";
    } else {
      os << "r,rate_ac_opt,rate_ac_closed\n";
      for (double r : grid) {
        RatePlan plan = rate_ac(p, q, r, tol);
        os << fmt12(r) << ',' << fmt12(plan.rate_bound) << ','
           << (std::isfinite(plan.closed_form_bound) ? fmt12(plan.closed_form_bound) : "nan")
           << '\n';
      }
    }
    detail::emit(out_path, os.str(), out);
    return kOk;
  }
  auto rows = comparison_curves(p, q, grid, tol);
  detail::emit(out_path,
               format == "json" ? curves_to_json(rows).dump(2) + "\n" : curves_to_csv(rows), out);
  return kOk;
}

inline int cmd_mindist(int p, std::uint64_t q, std::size_t n, std::size_t k, bool exhaustive,
                       const std::string& format, const std::string& out_path, std::ostream& out) {
  double bound = min_dist_lower_bound(p, n, k);
  std::optional<double> observed;
  if (exhaustive) {
    CodeSpec code = subclass_alpha_alpha(q, n, k);
    double raw = exhaustive_min_dist(code, p);
    observed = p == 2 ? std::sqrt(raw) : raw;
  }
  std::ostringstream os;
  if (format == "json") {
    Json j{{"q", q}, {"n", n}, {"k", k}, {"p", p}, {"bound", bound}};
    if (observed) j["observed"] = *observed;
    os << j.dump(2) << "\n";
  } else {
    os << "q,n,k,p,bound,observed\n"
       << q << ',' << n << ',' << k << ',' << p << ',' << fmt12(bound) << ','
       << (observed ? fmt12(*observed) : "") << '\n';
  }
  detail::emit(out_path, os.str(), out);
  return kOk;
}

inline int cmd_theta(double p, std::uint64_t q, const std::string& grid_spec, double tol,
                     const std::string& out_path, std::ostream& out) {
  auto grid = detail::parse_grid(grid_spec);
  std::ostringstream os;
  os << "q,s,lattice_sum,fudge_near,fudge_far\n";
  for (double s : grid) {
    LpParams par(p, s);
    auto ls = lattice_sum(par, q, tol);
    std::string fn = "nan", ff = "nan";
    try {
      if (p == 2.0) {
        fn = fmt12(fudge_E(2, s));
        ff = fmt12(fudge_E(2, static_cast<double>(q) / s));
      } else if (p == 1.0) {
        fn = fmt12(fudge_E(1, 2.0 / s));
        ff = fmt12(fudge_E(1, static_cast<double>(q) / s));
      }
    } catch (const Error&) {
    }
    os << q << ',' << fmt12(s) << ',' << fmt12(ls.value) << ',' << fn << ',' << ff << '\n';
  }
  detail::emit(out_path, os.str(), out);
  return kOk;
}

inline int cmd_simulate(const std::string& config_path, std::size_t trials_override,
                        std::size_t parallelism, const std::string& out_path, std::ostream& out,
                        std::ostream& err) {
  Json cfg = Json::parse(read_file(config_path));
  CodeSpec code = code_from_json(cfg.at("code"));
  const Json& jc = cfg.at("channel");
  ChannelSpec ch;
  ch.p = jc.at("p").get<double>();
  std::string kind = jc.value("kind", "continuous");
  ch.kind = kind == "discrete"      ? ChannelKind::DISCRETE
            : kind == "adversarial" ? ChannelKind::ADVERSARIAL
                                    : ChannelKind::CONTINUOUS;
  ch.r = jc.value("r", 1.0);
  ch.delta = jc.value("delta", 0.0);
  std::string strat = jc.value("strategy", "spread");
  ch.strategy = strat == "concentrated" ? AdversaryStrategy::CONCENTRATED
                : strat == "sphere"     ? AdversaryStrategy::RANDOM_SPHERE
                                        : AdversaryStrategy::SPREAD;
  ch.seed = cfg.value("seed", jc.value("seed", 1ull));
  ch.bad_coords = jc.value("bad_coords", 0u);

  std::size_t trials = trials_override ? trials_override : cfg.value("trials", 0u);
  if (trials == 0) {
    err << "trials must be positive\n";
    return kUsage;
  }
  ExperimentConfig ec;
  ec.alpha = cfg.value("alpha", 0.9);
  ec.lambda = cfg.value("lambda", 4.0);

  double pexp = cfg.at("params").value("p", ch.p);
  double s = 0.0;
  if (cfg.at("params").contains("s") && cfg.at("params")["s"].is_number())
    s = cfg.at("params")["s"].get<double>();
  if (s <= 0.0) {
    if (ch.kind == ChannelKind::ADVERSARIAL) s = std::max(ch.delta, 0.5) * 2.0;
    else s = rate_ac(pexp, code.field.q(), ch.r, ec.tol).s_star;
  }
  LpParams par(pexp, s);
  TrialReport rep = run_experiment(code, ch, par, trials, parallelism, ec);
  detail::emit(out_path, trial_report_to_json(rep).dump(2) + "\n", out);
  return kOk;
}

// --- embedded selftest -----------------------------------------------------

struct SelfCheck {
  std::string name;
  std::function<bool()> run;
};

inline std::vector<SelfCheck> selftest_checks();

inline int cmd_selftest(bool as_json, const std::string& fault_inject, std::ostream& out) {
  auto checks = selftest_checks();
  std::vector<std::pair<std::string, bool>> results;
  bool all_ok = true;
  for (auto& c : checks) {
    bool ok = false;
    try {
      ok = c.run();
    } catch (const std::exception&) {
      ok = false;
    }
    if (c.name == fault_inject) ok = false;  // test hook
    results.push_back({c.name, ok});
    all_ok = all_ok && ok;
  }
  if (as_json) {
    Json j = Json::array();
    for (auto& [name, ok] : results) j.push_back(Json{{"check", name}, {"pass", ok}});
    out << j.dump(2) << "\n";
  } else {
    for (auto& [name, ok] : results)
      out << (ok ? "PASS" : "FAIL") << "  " << name << "\n";
  }
  if (!all_ok) {
    out << "failed:";
    for (auto& [name, ok] : results)
      if (!ok) out << ' ' << name;
    out << "\n";
  }
  return all_ok ? kOk : kEmpty;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"lp-metric list decoding of generalized Reed-Solomon codes"};
  app.require_subcommand(1);

  // encode
  auto* enc = app.add_subcommand("encode", "encode a message polynomial");
  detail::CodeArgs enc_code;
  enc_code.attach(enc);
  std::string enc_msg, enc_out = "-";
  bool enc_random = false;
  std::uint64_t enc_seed = 1;
  enc->add_option("--message", enc_msg, "message coefficients, low degree first");
  enc->add_flag("--random-message", enc_random, "draw a random message");
  enc->add_option("--seed", enc_seed, "seed for --random-message");
  enc->add_option("--out", enc_out, "output path (- for stdout)");

  // corrupt
  auto* cor = app.add_subcommand("corrupt", "add channel or adversarial error to a codeword");
  std::string cor_in, cor_out = "-", cor_kind = "adversarial", cor_strategy = "spread";
  std::uint64_t cor_q = 0, cor_seed = 1;
  double cor_p = 2.0, cor_delta = 0.0, cor_r = 1.0;
  cor->add_option("--in", cor_in, "codeword file")->required();
  cor->add_option("--q", cor_q, "prime field size")->required();
  cor->add_option("--p", cor_p, "metric exponent");
  cor->add_option("--kind", cor_kind, "adversarial | continuous | discrete");
  cor->add_option("--delta", cor_delta, "relative distance (adversarial)");
  cor->add_option("--strategy", cor_strategy, "spread | concentrated | sphere");
  cor->add_option("--r", cor_r, "channel width (random kinds)");
  cor->add_option("--seed", cor_seed, "rng seed");
  cor->add_option("--out", cor_out, "output path");

  // decode
  auto* dec = app.add_subcommand("decode", "list-decode a received word");
  detail::CodeArgs dec_code;
  dec_code.attach(dec);
  std::string dec_in, dec_out = "-", dec_dump;
  double dec_p = 2.0, dec_delta = 0.0, dec_s = 0.0, dec_tol = 1e-12;
  bool dec_force = false, dec_seed_s = false, dec_auto_s = false;
  dec->add_option("--in", dec_in, "received word file")->required();
  dec->add_option("--p", dec_p, "metric exponent");
  dec->add_option("--delta", dec_delta, "relative decoding distance")->required();
  dec->add_option("--s", dec_s, "fix the weight scale instead of optimizing");
  dec->add_flag("--seed-s", dec_seed_s, "use the closed-form seed scale");
  dec->add_flag("--auto-s", dec_auto_s, "optimize the scale (default)");
  dec->add_flag("--force", dec_force, "decode even when the rate guard trips");
  dec->add_option("--tol", dec_tol, "numerical tolerance");
  dec->add_option("--dump-weights", dec_dump, "write the weight vector CSV here");
  dec->add_option("--out", dec_out, "output path");

  // rates
  auto* rat = app.add_subcommand("rates", "compute a rate plan");
  double rat_p = 2.0, rat_delta = 0.0, rat_r = 0.0, rat_tol = 1e-12;
  std::uint64_t rat_q = 0;
  std::size_t rat_n = 0, rat_k = 0;
  std::string rat_out = "-";
  rat->add_option("--p", rat_p, "metric exponent")->required();
  rat->add_option("--q", rat_q, "prime field size")->required();
  rat->add_option("--delta", rat_delta, "worst-case relative distance");
  rat->add_option("--r", rat_r, "average-case channel width");
  rat->add_option("--n", rat_n, "block length (for tau suggestion)");
  rat->add_option("--k", rat_k, "dimension (for tau suggestion)");
  rat->add_option("--tol", rat_tol, "numerical tolerance");
  rat->add_option("--out", rat_out, "output path");

  // curves
  auto* cur = app.add_subcommand("curves", "emit rate-distance comparison curves");
  int cur_p = 2;
  std::uint64_t cur_q = 10007;
  std::string cur_grid, cur_mode = "wc", cur_format = "csv", cur_out = "-";
  double cur_tol = 1e-12;
  cur->add_option("--p", cur_p, "metric exponent (1 or 2)")->required();
  cur->add_option("--q", cur_q, "prime field size");
  cur->add_option("--grid", cur_grid, "delta (or r) grid start:step:stop")->required();
  cur->add_option("--mode", cur_mode, "wc | ac");
  cur->add_option("--format", cur_format, "csv | json");
  cur->add_option("--tol", cur_tol, "numerical tolerance");
  cur->add_option("--out", cur_out, "output path");

  // mindist
  auto* mnd = app.add_subcommand("mindist", "minimum-distance lower bounds for GRS(alpha,alpha)");
  int mnd_p = 2;
  std::uint64_t mnd_q = 0;
  std::size_t mnd_n = 0, mnd_k = 0;
  bool mnd_ex = false;
  std::string mnd_format = "csv", mnd_out = "-";
  mnd->add_option("--p", mnd_p, "metric exponent (1 or 2)")->required();
  mnd->add_option("--q", mnd_q, "prime field size")->required();
  mnd->add_option("--n", mnd_n, "block length")->required();
  mnd->add_option("--k", mnd_k, "dimension")->required();
  mnd->add_flag("--exhaustive", mnd_ex, "also enumerate all codewords");
  mnd->add_option("--format", mnd_format, "csv | json");
  mnd->add_option("--out", mnd_out, "output path");

  // theta
  auto* the = app.add_subcommand("theta", "tabulate lattice sums and fudge factors");
  double the_p = 2.0, the_tol = 1e-12;
  std::uint64_t the_q = 0;
  std::string the_grid, the_out = "-";
  the->add_option("--p", the_p, "metric exponent")->required();
  the->add_option("--q", the_q, "modulus")->required();
  the->add_option("--s-grid", the_grid, "scale grid start:step:stop")->required();
  the->add_option("--tol", the_tol, "numerical tolerance");
  the->add_option("--out", the_out, "output path");

  // simulate
  auto* sim = app.add_subcommand("simulate", "run a Monte Carlo channel experiment");
  std::string sim_config, sim_out = "-";
  std::size_t sim_trials = 0, sim_parallel = 1;
  sim->add_option("--config", sim_config, "experiment config JSON")->required();
  sim->add_option("--trials", sim_trials, "override the trial count");
  sim->add_option("--parallel", sim_parallel, "worker threads");
  sim->add_option("--out", sim_out, "output path");

  // selftest
  auto* slf = app.add_subcommand("selftest", "run the embedded acceptance checks");
  bool slf_json = false;
  std::string slf_fault;
  slf->add_flag("--json", slf_json, "machine-readable results");
  slf->add_option("--fault-inject", slf_fault, "test hook: force the named check to fail")
      ->group("");  // hidden

  std::vector<const char*> argv;
  argv.push_back("lpdec");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return kOk;
    }
    err << e.what() << "\n";
    return kUsage;
  }

  try {
    if (enc->parsed()) return cmd_encode(enc_code, enc_msg, enc_random, enc_seed, enc_out, out);
    if (cor->parsed())
      return cmd_corrupt(cor_in, cor_q, cor_p, cor_delta, cor_strategy, cor_r, cor_kind, cor_seed,
                         cor_out, out);
    if (dec->parsed())
      return cmd_decode(dec_code, dec_in, dec_p, dec_delta, dec_auto_s ? 0.0 : dec_s,
                        dec_seed_s && !dec_auto_s, dec_force, dec_tol, dec_dump, dec_out, out, err);
    if (rat->parsed())
      return cmd_rates(rat_p, rat_q, rat_delta, rat_r, rat_n, rat_k, rat_tol, rat_out, out);
    if (cur->parsed())
      return cmd_curves(cur_p, cur_q, cur_grid, cur_mode, cur_format, cur_tol, cur_out, out, err);
    if (mnd->parsed()) return cmd_mindist(mnd_p, mnd_q, mnd_n, mnd_k, mnd_ex, mnd_format, mnd_out, out);
    if (the->parsed()) return cmd_theta(the_p, the_q, the_grid, the_tol, the_out, out);
    if (sim->parsed()) return cmd_simulate(sim_config, sim_trials, sim_parallel, sim_out, out, err);
    if (slf->parsed()) return cmd_selftest(slf_json, slf_fault, out);
  } catch (const RateTooHigh& e) {
    err << "error: " << e.what() << "\n";
    return kRateGuard;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

// Selftest bodies live below to keep the command table readable.
inline std::vector<SelfCheck> selftest_checks() {
  std::vector<SelfCheck> checks;

  checks.push_back({"lattice-closed-form", [] {
    LpParams par(1.0, 1.0);
    double closed = lattice_sum(par, 5, 1e-12).value;
    double brute = 0.0;
    for (int u = -60; u <= 60; ++u)
      for (int v = -60; v <= 60; ++v)
        if ((u - v) % 5 == 0) brute += f_point(par, u) * f_point(par, v);
    return std::fabs(closed - brute) < 1e-9;
  }});

  checks.push_back({"psf-identity", [] { return psf_check(2.0, 1e-12) < 1e-10; }});

  checks.push_back({"coset-series-vs-closed", [] {
    LpParams par(1.0, 1.0);
    double closed = coset_sum(par, 1.0, 5.0, 1e-13);
    double series = coset_sum(par, 1.0, 5.0, 1e-13, /*force_series=*/true);
    return std::fabs(closed - series) < 1e-12;
  }});

  checks.push_back({"corr-lower-bound", [] {
    for (int trial = 0; trial < 50; ++trial) {
      RngStream rng = RngStream::keyed(42, 11, trial);
      std::uint64_t q = trial % 2 ? 17 : 5;
      std::size_t n = 4;
      LpParams par(trial % 2 ? 2.0 : 1.0, 0.5 + rng.uniform01() * 1.5);
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
      if (!(corr >= b.arith - 1e-9 && b.arith >= b.geom - 1e-9)) return false;
    }
    return true;
  }});

  checks.push_back({"ww-sandwich", [] {
    for (int trial = 0; trial < 20; ++trial) {
      RngStream rng = RngStream::keyed(43, 12, trial);
      LpParams par(2.0, trial % 2 ? 1.0 : 2.0);
      std::size_t n = 3;
      std::vector<double> ys(n);
      for (auto& v : ys) v = rng.uniform01() * 17.0;
      ReceivedWord y(17.0, ys);
      auto W = build_weights(y, par);
      double f = lattice_sum(par, 17, 1e-12).value;
      double eps = roughness(par, 17, RoughnessKind::LQ_DIAGONAL, 1e-12);
      double ratio = W.norm() * W.norm() / static_cast<double>(n);
      if (!(ratio <= f * (1.0 + 1e-9) && ratio >= f * (1.0 - eps) / (1.0 + eps) - 1e-9))
        return false;
    }
    return true;
  }});

  checks.push_back({"decoder-oracle", [] {
    CodeSpec code = CodeSpec::reed_solomon(5, 4, 2);
    for (int trial = 0; trial < 5; ++trial) {
      RngStream rng = RngStream::keyed(44, 13, trial);
      WeightVector W(4, 5);
      Codeword planted;
      for (std::size_t i = 0; i < 4; ++i) planted.symbols.push_back(rng.uniform_below(5));
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t x = 0; x < 5; ++x)
          W.at(i, x) = 0.15 * rng.uniform01() + (planted.symbols[i] == x ? 0.8 : 0.0);
      W.refresh_max();
      double tau = 0.2;
      auto res = soft_decode(code, W, tau);
      std::size_t oracle = 0;
      bool ok = true;
      for_each_codeword(code, [&](const Poly&, const Codeword& c) {
        if (correlation(W, c) >= res.threshold) {
          ++oracle;
          if (!res.contains(c)) ok = false;
        }
      });
      if (!ok || res.candidates.size() < oracle) return false;
    }
    return true;
  }});

  checks.push_back({"min-dist", [] {
    for (std::uint64_t q : {5ull, 7ull}) {
      for (std::size_t k = 1; k <= 2; ++k) {
        CodeSpec code = subclass_alpha_alpha(q, q - 1, k);
        if (exhaustive_min_dist(code, 1) < min_dist_lower_bound(1, q - 1, k) - 1e-9) return false;
        double sq = exhaustive_min_dist(code, 2);
        double bound = min_dist_lower_bound(2, q - 1, k);
        if (sq < bound * bound - 1e-9) return false;
      }
    }
    return true;
  }});

  checks.push_back({"sampler-mean", [] {
    ChannelSpec ch;
    ch.p = 2.0;
    ch.r = 2.0;
    ch.kind = ChannelKind::CONTINUOUS;
    ch.seed = 7;
    auto e = sample_error(ch, 100000, 97);
    double mean = 0.0;
    for (double v : e) mean += v;
    mean /= static_cast<double>(e.size());
    double sd = ch.r / std::sqrt(2.0 * M_PI);
    return std::fabs(mean) < 4.0 * sd / std::sqrt(static_cast<double>(e.size()));
  }});

  checks.push_back({"experiment-determinism", [] {
    CodeSpec code = CodeSpec::reed_solomon(17, 8, 2);
    ChannelSpec ch;
    ch.p = 2.0;
    ch.r = 1.0;
    ch.kind = ChannelKind::CONTINUOUS;
    ch.seed = 99;
    LpParams par(2.0, 1.0);
    auto a = run_experiment(code, ch, par, 8, 1);
    auto b = run_experiment(code, ch, par, 8, 4);
    return trial_report_to_json(a).dump() == trial_report_to_json(b).dump();
  }});

  return checks;
}

}  // namespace cli
}  // namespace lpdec
