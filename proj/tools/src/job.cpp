// Copyright 2026 The eisencf Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "job.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <condition_variable>
#include <cstdio>
#include <limits>
#include <map>
#include <mutex>
#include <regex>
#include <thread>
#include <vector>

#include <json.hpp>

#include "eisencf/invariants.hpp"
#include "eisencf/sampling.hpp"

namespace eisencf::cli {

using Json = nlohmann::ordered_json;

namespace {

const char* command_name(Command c) {
  switch (c) {
    case Command::kExpand: return "expand";
    case Command::kVerifyApprox: return "verify-approx";
    case Command::kScan: return "scan";
    case Command::kClassify: return "classify";
  }
  return "?";
}

Json big(const BigInt& v) {
  if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
  return v.get_str();
}

Json real(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

template <RingId R>
Json pair_of(const Element<R>& a) {
  return Json::array({big(a.x), big(a.y)});
}

std::string csv_cell(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  }
  if (v.is_array()) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + csv_cell(v[i]);
    return s;
  }
  return v.dump();
}

void flatten(const Json& j, const std::string& prefix,
             std::vector<std::pair<std::string, Json>>& out) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
    if (it->is_object()) {
      flatten(*it, key, out);
    } else {
      out.emplace_back(key, *it);
    }
  }
}

class Sink {
 public:
  Sink(std::ostream& out, Format format) : out_(out), format_(format) {}

  void write(const Json& record) {
    if (format_ == Format::kJsonl) {
      out_ << record.dump() << '\n';
      return;
    }
    std::vector<std::pair<std::string, Json>> cells;
    flatten(record, "", cells);
    std::vector<std::string> header;
    for (const auto& [k, v] : cells) header.push_back(k);
    if (header != header_) {
      header_ = header;
      for (std::size_t i = 0; i < header.size(); ++i) out_ << (i ? "," : "") << header[i];
      out_ << '\n';
    }
    for (std::size_t i = 0; i < cells.size(); ++i) {
      out_ << (i ? "," : "") << csv_cell(cells[i].second);
    }
    out_ << '\n';
  }

 private:
  std::ostream& out_;
  Format format_;
  std::vector<std::string> header_;
};

class Records {
 public:
  explicit Records(const JobConfig& config) : seed_(config.seed), hash_(config_hash(config)) {}

  Json make(const char* kind) const {
    Json j;
    j["v"] = 1;
    j["kind"] = kind;
    j["seed"] = seed_;
    j["config_hash"] = hash_;
    return j;
  }

  Json error(const Error& e) const {
    Json j = make("error");
    j["error"] = e.kind();
    j["message"] = e.what();
    return j;
  }

 private:
  std::uint64_t seed_;
  std::string hash_;
};

int exit_code_of(const Error& e) {
  return dynamic_cast<const PrecisionInsufficient*>(&e) != nullptr ? kExitPrecision
                                                                   : kExitConfig;
}

template <RingId R>
Json verdict_record(const Records& rec, const ApproxVerdict<R>& v, bool terminated) {
  Json j = rec.make("verdict");
  j["n"] = v.n;
  j["a_x"] = big(v.a_n.x);
  j["a_y"] = big(v.a_n.y);
  j["qn_norm"] = big(v.qn_norm);
  j["residual"] = real(v.residual);
  j["rival"] = real(v.best_rival);
  j["ratio"] = real(v.ratio);
  j["ratio_error"] = real(v.ratio_error);
  j["tie"] = v.tie_affected;
  j["terminated"] = terminated;
  j["witness_q"] = pair_of(v.witness_q);
  j["witness_p"] = pair_of(v.witness_p);
  j["q_count"] = v.q_count;
  j["falsified"] = !v.meets(best_approx_constant<R>());
  return j;
}

ExpandOptions expand_options(const JobConfig& config) {
  ExpandOptions opts;
  opts.max_steps = config.steps;
  opts.precision_bits = config.precision_bits;
  return opts;
}

template <RingId R>
int run_expand(const JobConfig& config, const Records& rec, Sink& sink) {
  const Input<R> in = parse_input<R>(config);
  const ExpandOptions opts = expand_options(config);
  Expansion<R> e;
  if (const auto* exact = std::get_if<RingRational<R>>(&in)) {
    e = expand(*exact, opts);
  } else {
    e = expand_with_retry<R>(std::get<ComplexSource>(in), opts).expansion;
  }
  const QPair<R> qp = q_pair<R>(e.a);
  const double tol = std::ldexp(1.0, -e.precision_bits / 2);
  const InvariantReport report = check_invariants(e, qp, tol);
  std::map<std::size_t, std::vector<std::string>> violations;
  for (const auto& v : report.violations) {
    violations[std::min(v.n, e.last_index())].push_back(v.check);
  }

  const std::size_t m = e.last_index();
  for (std::size_t n = 0; n <= m; ++n) {
    Json j = rec.make("step");
    j["n"] = n;
    j["a_x"] = big(e.a[n].x);
    j["a_y"] = big(e.a[n].y);
    j["qn_norm"] = big(norm(qp.q(static_cast<std::ptrdiff_t>(n))));
    if (n < m) {
      j["residual"] = real(residual(e, qp, n).value());
    } else if (e.terminated) {
      j["residual"] = 0.0;
    } else {
      j["residual"] = nullptr;
    }
    j["rival"] = nullptr;
    j["ratio"] = nullptr;
    j["tie"] = std::find(e.tie_steps.begin(), e.tie_steps.end(), n) != e.tie_steps.end();
    j["terminated"] = e.terminated && n == m;
    j["violations"] = violations.count(n) ? Json(violations[n]) : Json::array();
    j["falsified"] = violations.count(n) > 0;
    sink.write(j);
  }
  return report.ok() ? kExitOk : kExitFalsified;
}

VerifyConfig verify_config(const JobConfig& config) {
  VerifyConfig vc;
  vc.expand = expand_options(config);
  vc.max_qnorm = config.max_qnorm;
  return vc;
}

template <RingId R>
int run_verify(const JobConfig& config, const Records& rec, Sink& sink) {
  const Input<R> in = parse_input<R>(config);
  const VerifyConfig vc = verify_config(config);
  const auto* exact = std::get_if<RingRational<R>>(&in);
  bool falsified = false;
  if (config.index) {
    const std::size_t n = *config.index;
    ApproxVerdict<R> v;
    bool terminated = false;
    if (exact) {
      v = verify_best_approx(*exact, n, vc);
      ExpandOptions opts = vc.expand;
      opts.max_steps = std::max(opts.max_steps, n + 1);
      terminated = expand(*exact, opts).terminated;
    } else {
      v = verify_best_approx<R>(std::get<ComplexSource>(in), n, vc);
    }
    const Json j = verdict_record(rec, v, terminated);
    falsified = j["falsified"].get<bool>();
    sink.write(j);
  } else {
    const VerifyRun<R> run = exact ? verify_all(*exact, vc)
                                   : verify_all<R>(std::get<ComplexSource>(in), vc);
    for (const auto& v : run.verdicts) {
      const Json j = verdict_record(rec, v, run.expansion.terminated);
      falsified = falsified || j["falsified"].get<bool>();
      sink.write(j);
    }
  }
  return falsified ? kExitFalsified : kExitOk;
}

constexpr int kHistogramBins = 20;

struct SampleResult {
  std::vector<Json> records;
  std::vector<std::array<double, 2>> ratios;  // ratio, tie flag
  std::vector<std::size_t> indices;
  int precision_bits = 0;
  int exit_code = kExitOk;
};

template <RingId R>
SampleResult scan_sample(const JobConfig& config, const Records& rec, const VerifyConfig& vc,
                         const LatticeShells<R>& shells, std::size_t i) {
  SampleResult out;
  try {
    const RandomInput<R> in = random_input<R>(config.seed, i);
    const VerifyRun<R> run = verify_all<R>(in.source(), vc, &shells);
    out.precision_bits = run.precision_bits;
    for (const auto& v : run.verdicts) {
      Json j = verdict_record(rec, v, run.expansion.terminated);
      Json line = rec.make("verdict");
      line["sample"] = i;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!line.contains(it.key())) line[it.key()] = *it;
      }
      out.records.push_back(std::move(line));
      out.ratios.push_back({v.ratio, v.tie_affected ? 1.0 : 0.0});
      out.indices.push_back(v.n);
    }
  } catch (const Error& e) {
    Json j = rec.error(e);
    j["sample"] = i;
    out.records.push_back(std::move(j));
    out.exit_code = exit_code_of(e);
  }
  return out;
}

template <RingId R>
int run_scan(const JobConfig& config, const Records& rec, Sink& sink) {
  const VerifyConfig vc = verify_config(config);
  const LatticeShells<R> shells(config.max_qnorm);
  const double constant = best_approx_constant<R>();

  // Workers fill slots; this thread writes them in sample order.
  std::vector<std::optional<SampleResult>> slots(config.samples);
  std::mutex mu;
  std::condition_variable ready;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= config.samples) return;
      SampleResult r = scan_sample<R>(config, rec, vc, shells, i);
      {
        std::lock_guard<std::mutex> lock(mu);
        slots[i] = std::move(r);
      }
      ready.notify_all();
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(config.jobs, config.samples));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);

  double min_ratio = std::numeric_limits<double>::infinity();
  double min_ratio_no_ties = std::numeric_limits<double>::infinity();
  std::optional<std::size_t> min_sample, min_n;
  std::size_t verdicts = 0, ties = 0, violations = 0, errors = 0;
  int max_bits = 0;
  int exit_code = kExitOk;
  std::vector<std::size_t> counts(kHistogramBins, 0);

  for (std::size_t i = 0; i < config.samples; ++i) {
    SampleResult r;
    {
      std::unique_lock<std::mutex> lock(mu);
      ready.wait(lock, [&] { return slots[i].has_value(); });
      r = std::move(*slots[i]);
      slots[i].reset();
    }
    for (const auto& j : r.records) sink.write(j);
    if (r.exit_code != kExitOk) {
      ++errors;
      exit_code = std::max(exit_code, r.exit_code);
    }
    max_bits = std::max(max_bits, r.precision_bits);
    for (std::size_t k = 0; k < r.ratios.size(); ++k) {
      const double ratio = r.ratios[k][0];
      const bool tie = r.ratios[k][1] != 0.0;
      ++verdicts;
      if (tie) ++ties;
      if (ratio < constant - kRatioTolerance) ++violations;
      if (ratio < min_ratio) {
        min_ratio = ratio;
        min_sample = i;
        min_n = r.indices[k];
      }
      if (!tie) min_ratio_no_ties = std::min(min_ratio_no_ties, ratio);
      const int bin = std::clamp(static_cast<int>(ratio * kHistogramBins), 0, kHistogramBins - 1);
      ++counts[bin];
    }
  }
  for (auto& t : pool) t.join();

  Json s = rec.make("summary");
  s["ring"] = ring_name(R);
  s["samples"] = config.samples;
  s["max_qnorm"] = config.max_qnorm;
  s["verdicts"] = verdicts;
  s["constant"] = constant;
  s["min_ratio"] = real(min_ratio);
  s["min_ratio_sample"] = min_sample ? Json(*min_sample) : Json(nullptr);
  s["min_ratio_n"] = min_n ? Json(*min_n) : Json(nullptr);
  s["min_ratio_no_ties"] = real(min_ratio_no_ties);
  s["tie_verdicts"] = ties;
  s["violations"] = violations;
  s["errors"] = errors;
  s["max_precision_bits"] = max_bits;
  s["histogram"]["bin_width"] = 1.0 / kHistogramBins;
  s["histogram"]["counts"] = counts;
  s["falsified"] = violations > 0;
  sink.write(s);
  if (violations > 0) return kExitFalsified;
  return exit_code;
}

template <RingId R>
int run_classify(const JobConfig& config, const Records& rec, Sink& sink) {
  const Input<R> in = parse_input<R>(config);
  ClassifyConfig cc;
  cc.steps = config.steps;
  cc.rival_norm_bound = config.max_qnorm;
  cc.precision_bits = config.precision_bits;
  const BadApproxVerdict<R> v =
      std::holds_alternative<RingRational<R>>(in)
          ? classify_bad_approx(std::get<RingRational<R>>(in), cc)
          : classify_bad_approx<R>(std::get<ComplexSource>(in), cc);
  Json j = rec.make("classification");
  j["classification"] = v.classification == Classification::kBoundedQuotients
                            ? "BoundedQuotients"
                            : "UnboundedSuspected";
  j["max_partial_quotient"] = real(v.max_partial_quotient);
  j["max_quotient_norm"] = big(v.max_quotient_norm);
  j["delta"] = v.delta.get_str();
  j["delta_value"] = real(v.delta.get_d());
  j["empirical_inf"] = real(v.empirical_inf);
  j["empirical_inf_error"] = real(v.empirical_inf_error);
  j["witness_q"] = pair_of(v.witness_q);
  j["witness_p"] = pair_of(v.witness_p);
  j["q_count"] = v.q_count;
  j["steps_used"] = v.steps_used;
  j["jump_index"] = v.jump_index ? Json(*v.jump_index) : Json(nullptr);
  j["jump_normalized_residual"] = v.jump_index ? real(v.jump_normalized_residual) : Json(nullptr);
  j["jump_delta"] = v.jump_index ? Json(v.jump_delta.get_str()) : Json(nullptr);
  j["precision_bits"] = v.precision_bits;
  j["consistent"] = v.consistent();
  j["falsified"] = !v.consistent();
  sink.write(j);
  return v.consistent() ? kExitOk : kExitFalsified;
}

template <RingId R>
int dispatch(const JobConfig& config, const Records& rec, Sink& sink) {
  switch (config.command) {
    case Command::kExpand: return run_expand<R>(config, rec, sink);
    case Command::kVerifyApprox: return run_verify<R>(config, rec, sink);
    case Command::kScan: return run_scan<R>(config, rec, sink);
    case Command::kClassify: return run_classify<R>(config, rec, sink);
  }
  return kExitConfig;
}

}  // namespace

void validate(const JobConfig& c) {
  const bool has_exact = !c.num.empty();
  const bool has_decimal = !c.re.empty();
  if (c.command == Command::kScan) {
    if (c.exact || has_exact || has_decimal) {
      throw ConfigError("scan draws its own inputs; --exact, --num and --re do not apply");
    }
    if (c.samples < 1) throw ConfigError("--samples must be positive");
  } else if (c.exact) {
    if (!has_exact) throw ConfigError("--exact needs --num");
    if (has_decimal) throw ConfigError("--exact and --re are mutually exclusive");
  } else {
    if (has_exact) throw ConfigError("--num needs --exact");
    if (!has_decimal) throw ConfigError("an input is required: --exact --num x,y or --re");
  }
  if (c.index && c.command != Command::kVerifyApprox) {
    throw ConfigError("--index applies to verify-approx only");
  }
  if (c.steps < 1) throw ConfigError("--steps must be positive");
  if (c.precision_bits < kMinCertifiedBits || c.precision_bits > kMaxPrecisionBits) {
    throw ConfigError("--precision must lie in [" + std::to_string(kMinCertifiedBits) + ", " +
                      std::to_string(kMaxPrecisionBits) + "]");
  }
  if (c.max_qnorm < 1 || c.max_qnorm > kDefaultEnumerationGuard) {
    throw ConfigError("--max-qnorm must lie in [1, " +
                      std::to_string(kDefaultEnumerationGuard) + "]");
  }
  if (c.jobs < 1) throw ConfigError("--jobs must be positive");
}

std::string config_hash(const JobConfig& c) {
  std::string canon;
  canon += "command=" + std::string(command_name(c.command));
  canon += ";ring=" + std::string(ring_name(c.ring));
  canon += ";exact=" + std::to_string(c.exact);
  canon += ";num=" + c.num + ";den=" + c.den + ";re=" + c.re + ";im=" + c.im;
  canon += ";steps=" + std::to_string(c.steps);
  canon += ";precision=" + std::to_string(c.precision_bits);
  canon += ";max_qnorm=" + std::to_string(c.max_qnorm);
  canon += ";samples=" + std::to_string(c.samples);
  canon += ";seed=" + std::to_string(c.seed);
  canon += ";index=" + (c.index ? std::to_string(*c.index) : std::string("-"));
  canon += ";format=" + std::string(c.format == Format::kJsonl ? "jsonl" : "csv");
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : canon) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

template <RingId R>
Element<R> parse_element(const std::string& text) {
  static const std::regex kPair(R"(\s*([+-]?\d+)\s*,\s*([+-]?\d+)\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, kPair)) {
    throw ParseError("expected two integers \"x,y\", got \"" + text + "\"");
  }
  auto to_big = [](std::string s) {
    if (!s.empty() && s[0] == '+') s.erase(0, 1);
    return BigInt(s);
  };
  return Element<R>(to_big(m[1].str()), to_big(m[2].str()));
}

BigRational parse_decimal(const std::string& text) {
  static const std::regex kDecimal(R"(\s*([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d{1,6}))?\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, kDecimal) || (m[2].length() == 0 && m[3].length() == 0)) {
    throw ParseError("not a finite decimal: \"" + text + "\"");
  }
  const std::string digits = m[2].str() + m[3].str();
  BigInt mantissa(digits.empty() ? "0" : digits);
  long exponent = m[4].matched ? std::stol(m[4].str()) : 0;
  exponent -= static_cast<long>(m[3].length());
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
  BigRational v = exponent >= 0 ? BigRational(mantissa * scale) : BigRational(mantissa, scale);
  v.canonicalize();
  return m[1].str() == "-" ? BigRational(-v) : v;
}

template <RingId R>
Input<R> parse_input(const JobConfig& config) {
  if (config.exact) {
    return RingRational<R>(parse_element<R>(config.num), parse_element<R>(config.den));
  }
  const BigRational re = parse_decimal(config.re);
  const BigRational im = parse_decimal(config.im);
  return ComplexSource([re, im](int bits) { return ComplexAP::from_rationals(re, im, bits); });
}

int run(const JobConfig& config, std::ostream& out) {
  Sink sink(out, config.format);
  const Records rec(config);
  try {
    validate(config);
    return config.ring == RingId::kEisenstein ? dispatch<RingId::kEisenstein>(config, rec, sink)
                                              : dispatch<RingId::kGaussian>(config, rec, sink);
  } catch (const Error& e) {
    sink.write(rec.error(e));
    return exit_code_of(e);
  }
}

template Element<RingId::kEisenstein> parse_element<RingId::kEisenstein>(const std::string&);
template Element<RingId::kGaussian> parse_element<RingId::kGaussian>(const std::string&);
template Input<RingId::kEisenstein> parse_input<RingId::kEisenstein>(const JobConfig&);
template Input<RingId::kGaussian> parse_input<RingId::kGaussian>(const JobConfig&);

}  // namespace eisencf::cli
