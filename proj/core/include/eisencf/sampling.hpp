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

// Seeded inputs.
//
// Sample i of seed s is drawn from mt19937_64 seeded with
// seed_seq{lo(s), hi(s), lo(i), hi(i)} (32-bit halves):
//   re, im  = k / 2^192 - 1/2, k built from three raw 64-bit draws
//             (high word first) reduced mod 2^192
//   offset  = element of {0} u {a : norm(a) <= 12} in enumeration order,
//             picked by rejection from raw draws
// and z = re + i im + offset. All draws use raw engine output, so samples do
// not depend on the standard library's distributions.

#ifndef EISENCF_SAMPLING_HPP_
#define EISENCF_SAMPLING_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "eisencf/complex_ap.hpp"
#include "eisencf/expansion.hpp"
#include "eisencf/ring.hpp"

namespace eisencf {

inline constexpr std::int64_t kSampleOffsetNorm = 12;
inline constexpr unsigned kSampleFractionBits = 192;

std::mt19937_64 sample_engine(std::uint64_t seed, std::uint64_t index);

// Uniform in [0, bound) by rejection.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

template <RingId R>
struct RandomInput {
  BigRational re;  // in [-1/2, 1/2)
  BigRational im;
  Element<R> offset;

  ComplexAP at(int precision_bits) const;
  ComplexSource source() const;
};

template <RingId R>
RandomInput<R> random_input(std::uint64_t seed, std::uint64_t index);

// a_0 with norm(a_0) <= max_norm (zero allowed), then length - 1 quotients
// with 3 <= norm <= max_norm (2 <= norm for Gaussian).
template <RingId R>
std::vector<Element<R>> random_quotients(std::mt19937_64& rng, std::size_t length,
                                         std::int64_t max_norm);

// True iff the exact expansion of fold_up(a) is a again.
template <RingId R>
bool reproduces(const std::vector<Element<R>>& a);

}  // namespace eisencf

#endif  // EISENCF_SAMPLING_HPP_
