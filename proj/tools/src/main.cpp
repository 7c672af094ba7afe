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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "job.hpp"

namespace {

using eisencf::cli::Command;
using eisencf::cli::Format;
using eisencf::cli::JobConfig;

void add_common(CLI::App* sub, JobConfig& c, std::string& output) {
  const std::map<std::string, eisencf::RingId> rings{
      {"eisenstein", eisencf::RingId::kEisenstein}, {"gaussian", eisencf::RingId::kGaussian}};
  const std::map<std::string, Format> formats{{"jsonl", Format::kJsonl}, {"csv", Format::kCsv}};
  sub->add_option("--ring", c.ring, "eisenstein or gaussian")
      ->transform(CLI::CheckedTransformer(rings, CLI::ignore_case));
  sub->add_option("--precision", c.precision_bits, "working precision in bits");
  sub->add_option("--steps", c.steps, "largest expansion index");
  sub->add_option("--max-qnorm", c.max_qnorm, "rival denominators: 1 <= norm(q) <= this");
  sub->add_option("--seed", c.seed, "recorded in every line; drives scan samples");
  sub->add_option("--format", c.format, "jsonl or csv")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  sub->add_option("-o,--output", output, "output file (default stdout)");
}

void add_input(CLI::App* sub, JobConfig& c) {
  sub->add_flag("--exact", c.exact, "exact input num/den in the ring");
  sub->add_option("--num", c.num, "numerator x,y (exact)");
  sub->add_option("--den", c.den, "denominator x,y (exact)");
  sub->add_option("--re", c.re, "real part, decimal");
  sub->add_option("--im", c.im, "imaginary part, decimal");
}

}  // namespace

int main(int argc, char** argv) {
  JobConfig config;
  if (const char* env = std::getenv("EISENCF_PRECISION")) {
    try {
      config.precision_bits = std::stoi(env);
    } catch (const std::exception&) {
      std::cerr << "EISENCF_PRECISION is not an integer: " << env << '\n';
      return eisencf::cli::kExitConfig;
    }
  }
  std::string output;

  CLI::App app{"Nearest-integer complex continued fractions"};
  app.require_subcommand(1);

  auto* expand = app.add_subcommand("expand", "expansion records, one per step");
  add_common(expand, config, output);
  add_input(expand, config);

  auto* verify = app.add_subcommand("verify-approx", "compare convergents with all rivals");
  add_common(verify, config, output);
  add_input(verify, config);
  verify->add_option("--index", config.index, "verify a single index n");

  auto* scan = app.add_subcommand("scan", "verify-approx over seeded random inputs");
  add_common(scan, config, output);
  scan->add_option("--samples", config.samples, "number of inputs");
  scan->add_option("--jobs", config.jobs, "worker threads");

  auto* classify = app.add_subcommand("classify", "bounded quotients vs small |q|^2|z-p/q|");
  add_common(classify, config, output);
  add_input(classify, config);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e);
    return status == 0 ? 0 : eisencf::cli::kExitConfig;
  }

  if (expand->parsed()) config.command = Command::kExpand;
  if (verify->parsed()) config.command = Command::kVerifyApprox;
  if (scan->parsed()) config.command = Command::kScan;
  if (classify->parsed()) config.command = Command::kClassify;

  if (output.empty()) return eisencf::cli::run(config, std::cout);
  std::ofstream file(output, std::ios::binary);
  if (!file) {
    std::cerr << "cannot open " << output << '\n';
    return eisencf::cli::kExitConfig;
  }
  return eisencf::cli::run(config, file);
}
