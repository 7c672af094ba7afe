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

// Batch jobs behind the eisencf command line.

#ifndef EISENCF_TOOLS_JOB_HPP_
#define EISENCF_TOOLS_JOB_HPP_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <variant>

#include "eisencf/approximation.hpp"
#include "eisencf/expansion.hpp"

namespace eisencf::cli {

enum class Command { kExpand, kVerifyApprox, kScan, kClassify };
enum class Format { kJsonl, kCsv };

inline constexpr int kExitOk = 0;
inline constexpr int kExitFalsified = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitPrecision = 3;

struct JobConfig {
  Command command = Command::kExpand;
  RingId ring = RingId::kEisenstein;
  bool exact = false;
  std::string num;  // "x,y"
  std::string den = "1,0";
  std::string re;
  std::string im = "0";
  std::size_t steps = kDefaultMaxSteps;
  int precision_bits = kDefaultPrecisionBits;
  std::int64_t max_qnorm = kDefaultRivalNormBound;
  std::size_t samples = 200;
  std::uint64_t seed = 0;
  std::optional<std::size_t> index;
  Format format = Format::kJsonl;
  unsigned jobs = 1;
};

class ConfigError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "ConfigError"; }
};

// Throws ConfigError.
void validate(const JobConfig& config);

// FNV-1a over the fields that determine the output (not jobs).
std::string config_hash(const JobConfig& config);

// "x,y" with decimal integers. Throws ParseError.
template <RingId R>
Element<R> parse_element(const std::string& text);

// Exact decimal, optional sign and exponent ("-1.25e-3"). Throws ParseError.
BigRational parse_decimal(const std::string& text);

template <RingId R>
using Input = std::variant<RingRational<R>, ComplexSource>;

// Throws ParseError, ZeroDenominator.
template <RingId R>
Input<R> parse_input(const JobConfig& config);

// Writes the records of the job to `out` and returns the exit status.
int run(const JobConfig& config, std::ostream& out);

}  // namespace eisencf::cli

#endif  // EISENCF_TOOLS_JOB_HPP_
