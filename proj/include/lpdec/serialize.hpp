#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lpdec/channels.hpp"
#include "lpdec/decoder.hpp"
#include "lpdec/grs.hpp"
#include "lpdec/planner.hpp"
#include "lpdec/weights.hpp"

namespace lpdec {

using Json = nlohmann::ordered_json;

/// Fixed-precision decimal used by every CSV surface (12 significant
/// digits; round-trips the doubles we care about at the tolerances used).
inline std::string fmt12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

inline Json code_to_json(const CodeSpec& code) {
  return Json{{"q", code.field.q()},
              {"n", code.n},
              {"k", code.k},
              {"alpha", code.alpha},
              {"twist", code.twist}};
}

inline CodeSpec code_from_json(const Json& j) {
  std::uint64_t q = j.at("q").get<std::uint64_t>();
  std::size_t n = j.at("n").get<std::size_t>();
  std::size_t k = j.at("k").get<std::size_t>();
  if (j.contains("alpha_alpha") && j["alpha_alpha"].get<bool>()) return subclass_alpha_alpha(q, n, k);
  if (!j.contains("alpha")) return CodeSpec::reed_solomon(q, n, k);
  return CodeSpec(Field(q), n, k, j.at("alpha").get<std::vector<std::uint64_t>>(),
                  j.at("twist").get<std::vector<std::uint64_t>>());
}

inline std::string codeword_to_csv(const Codeword& c) {
  std::ostringstream os;
  for (std::size_t i = 0; i < c.symbols.size(); ++i) {
    if (i) os << ',';
    os << c.symbols[i];
  }
  return os.str();
}

inline std::string received_to_csv(const ReceivedWord& y) {
  std::ostringstream os;
  for (std::size_t i = 0; i < y.residues.size(); ++i) {
    if (i) os << ',';
    os << fmt12(y.residues[i]);
  }
  return os.str();
}

inline std::vector<double> parse_csv_doubles(const std::string& line) {
  std::vector<double> out;
  std::stringstream ss(line);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) out.push_back(std::stod(tok));
  }
  return out;
}

inline std::vector<std::uint64_t> parse_csv_u64(const std::string& line) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(line);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) out.push_back(std::stoull(tok));
  }
  return out;
}

inline Json decode_result_to_json(const DecodeResult& res) {
  Json cands = Json::array();
  for (const auto& c : res.candidates) {
    cands.push_back(Json{{"message_coeffs", c.message.coeffs()},
                         {"codeword", c.codeword.symbols},
                         {"correlation", c.correlation}});
  }
  return Json{{"threshold", res.threshold},
              {"candidates", cands},
              {"diagnostics",
               Json{{"lambda", res.diagnostics.lambda},
                    {"cost", res.diagnostics.cost},
                    {"wdeg", res.diagnostics.wdeg},
                    {"constraint_rows", res.diagnostics.constraint_rows},
                    {"monomials", res.diagnostics.monomials},
                    {"certified", res.diagnostics.certified},
                    {"certificate", res.diagnostics.certificate}}}};
}

inline Json trial_report_to_json(const TrialReport& rep) {
  return Json{{"trials", rep.trials},
              {"successes", rep.successes},
              {"decoder_errors", rep.decoder_errors},
              {"failure_rate", rep.failure_rate()},
              {"mean_list_size", rep.mean_list_size},
              {"corr_quantiles", rep.corr_quantiles},
              {"bound", rep.bound},
              {"alpha", rep.alpha},
              {"seed", rep.seed}};
}

inline Json plan_to_json(const RatePlan& plan) {
  Json j{{"p", plan.p},
         {"q", plan.q},
         {"mode", plan.mode == PlanMode::WC ? "wc" : "ac"},
         {"s_star", plan.s_star},
         {"rate_bound", plan.rate_bound}};
  if (plan.mode == PlanMode::WC) j["delta"] = plan.delta;
  else j["r"] = plan.r;
  if (std::isfinite(plan.closed_form_bound)) j["closed_form_bound"] = plan.closed_form_bound;
  if (std::isfinite(plan.fudge_near)) j["fudge_near"] = plan.fudge_near;
  if (std::isfinite(plan.fudge_far)) j["fudge_far"] = plan.fudge_far;
  if (std::isfinite(plan.tau_suggestion)) j["tau_suggestion"] = plan.tau_suggestion;
  return j;
}

inline std::string curves_to_csv(const std::vector<CurveRow>& rows) {
  std::ostringstream os;
  os << "delta,rate_wc_opt,rate_wc_closed,competitor,rate_uniq\n";
  for (const auto& r : rows) {
    os << fmt12(r.delta) << ',' << fmt12(r.rate_wc_opt) << ','
       << (std::isfinite(r.rate_wc_closed) ? fmt12(r.rate_wc_closed) : "nan") << ','
       << fmt12(r.competitor) << ',' << fmt12(r.rate_uniq) << '\n';
  }
  return os.str();
}

inline Json curves_to_json(const std::vector<CurveRow>& rows) {
  Json arr = Json::array();
  for (const auto& r : rows) {
    Json j{{"delta", r.delta},
           {"rate_wc_opt", r.rate_wc_opt},
           {"competitor", r.competitor},
           {"rate_uniq", r.rate_uniq}};
    if (std::isfinite(r.rate_wc_closed)) j["rate_wc_closed"] = r.rate_wc_closed;
    arr.push_back(j);
  }
  return arr;
}

inline std::string weights_to_csv(const WeightVector& W) {
  std::ostringstream os;
  os << "i,x,weight\n";
  for (std::size_t i = 0; i < W.n; ++i)
    for (std::size_t x = 0; x < W.q; ++x)
      os << i << ',' << x << ',' << fmt12(W.at(i, x)) << '\n';
  return os.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open for writing: " + path);
  out << content;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open for reading: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string first_line(const std::string& text) {
  auto pos = text.find('\n');
  return pos == std::string::npos ? text : text.substr(0, pos);
}

}  // namespace lpdec
