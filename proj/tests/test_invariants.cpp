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

#include <gtest/gtest.h>

#include "eisencf/invariants.hpp"
#include "eisencf/sampling.hpp"

namespace eisencf {
namespace {

using E = EisensteinInt;
constexpr auto kE = RingId::kEisenstein;
constexpr auto kG = RingId::kGaussian;

TEST(LeTimesSqrt, Cases) {
  // 1 <= 1 * sqrt(2), 2 > 1 * sqrt(2), negative lhs always holds.
  EXPECT_TRUE(le_times_sqrt(1, 1, 2));
  EXPECT_FALSE(le_times_sqrt(2, 1, 2));
  EXPECT_TRUE(le_times_sqrt(-5, 1, 2));
  EXPECT_TRUE(le_times_sqrt(3, 1, 9));  // equality
  EXPECT_FALSE(le_times_sqrt(BigRational(3) + BigRational(1, 1000000), 1, 9));
}

template <RingId R>
void exact_invariants_hold(std::uint64_t seed, int trials) {
  std::mt19937_64 rng(seed);
  std::size_t checks = 0;
  for (int t = 0; t < trials; ++t) {
    const auto z = fold_up<R>(random_quotients<R>(rng, 12, 50));
    ExpandOptions opts;
    opts.max_steps = 200;
    const auto e = expand(z, opts);
    ASSERT_TRUE(e.terminated);
    const auto rep = check_invariants(e, q_pair<R>(e.a), 0.0);
    for (const auto& v : rep.violations) ADD_FAILURE() << v.check << " at n = " << v.n;
    for (const auto& [name, count] : rep.checks) checks += count;
  }
  EXPECT_GT(checks, 0u);
}

TEST(Invariants, ExactEisenstein) { exact_invariants_hold<kE>(61, 100); }
TEST(Invariants, ExactGaussian) { exact_invariants_hold<kG>(62, 100); }

template <RingId R>
void certified_invariants_hold(std::uint64_t seed) {
  for (std::uint64_t i = 0; i < 40; ++i) {
    const auto in = random_input<R>(seed, i);
    ExpandOptions opts;
    opts.max_steps = 25;
    const auto run = expand_with_retry<R>(in.source(), opts);
    const auto& e = run.expansion;
    const auto rep = check_invariants(e, q_pair<R>(e.a), std::ldexp(1.0, -e.precision_bits / 2));
    for (const auto& v : rep.violations) ADD_FAILURE() << v.check << " at n = " << v.n;
    EXPECT_EQ(rep.checks.count("mobius"), 0u);
    EXPECT_EQ(rep.checks.at("sandwich"), e.last_index());
  }
}

TEST(Invariants, CertifiedEisenstein) { certified_invariants_hold<kE>(63); }
TEST(Invariants, CertifiedGaussian) { certified_invariants_hold<kG>(64); }

TEST(Invariants, SkipTwoChecksAreEisensteinOnly) {
  std::mt19937_64 rng(65);
  const auto z = fold_up<kG>(random_quotients<kG>(rng, 10, 20));
  ExpandOptions opts;
  opts.max_steps = 100;
  const auto e = expand(z, opts);
  const auto rep = check_invariants(e, q_pair<kG>(e.a), 0.0);
  EXPECT_EQ(rep.checks.count("skip_two_growth"), 0u);
  EXPECT_EQ(rep.checks.count("ratio_alternation"), 0u);
}

TEST(Invariants, HandBuiltSequenceViolatesGrowth) {
  // [0; 1, -1, 1] is not a nearest-integer expansion: q = 1, 1, 0, 1.
  const std::vector<E> a{E(0, 0), E(1, 0), E(-1, 0), E(1, 0)};
  const auto qp = q_pair<kE>(a);
  EXPECT_FALSE(strict_denominator_growth(qp, 0));  // q_0 = q_1 = 1
  EXPECT_FALSE(skip_two_growth(qp, 1));            // 4 * 0 < 9 * 1
  EXPECT_FALSE(ratio_alternation(qp, 1));
  EXPECT_TRUE(determinant_identity(qp, 3));  // algebra still holds
}

TEST(Invariants, SandwichOnHalf) {
  const auto e = expand(EisensteinRational(E(1, 0), E(2, 0)));
  // z_1 + q_{-1}/q_0 = 2 and |a_1| = 2: 0 <= 2 <= 4.
  EXPECT_TRUE(sandwich(e, q_pair<kE>(e.a), 0));
  EXPECT_TRUE(mobius_identity(e, q_pair<kE>(e.a), 0));
  EXPECT_TRUE(round_trip(e));
}

}  // namespace
}  // namespace eisencf
