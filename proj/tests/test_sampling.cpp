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

#include <set>

#include "eisencf/sampling.hpp"

namespace eisencf {
namespace {

constexpr auto kE = RingId::kEisenstein;

TEST(Sampling, Reproducible) {
  const auto a = random_input<kE>(7, 3);
  const auto b = random_input<kE>(7, 3);
  EXPECT_EQ(a.re, b.re);
  EXPECT_EQ(a.im, b.im);
  EXPECT_EQ(a.offset, b.offset);
  const auto c = random_input<kE>(7, 4);
  EXPECT_NE(a.re, c.re);
  const auto d = random_input<kE>(8, 3);
  EXPECT_NE(a.re, d.re);
}

TEST(Sampling, PinnedFirstDraw) {
  // Guards the documented construction against silent changes.
  std::mt19937_64 rng = sample_engine(7, 0);
  std::seed_seq seq{7u, 0u, 0u, 0u};
  std::mt19937_64 ref(seq);
  EXPECT_EQ(rng(), ref());
}

TEST(Sampling, Ranges) {
  std::set<std::pair<long, long>> offsets;
  for (std::uint64_t i = 0; i < 500; ++i) {
    const auto in = random_input<kE>(1, i);
    EXPECT_GE(in.re, BigRational(-1, 2));
    EXPECT_LT(in.re, BigRational(1, 2));
    EXPECT_GE(in.im, BigRational(-1, 2));
    EXPECT_LT(in.im, BigRational(1, 2));
    EXPECT_LE(norm(in.offset), kSampleOffsetNorm);
    // dyadic with at most 192 fractional bits
    EXPECT_EQ(mpz_scan1(in.re.get_den_mpz_t(), 0) + 1,
              mpz_sizeinbase(in.re.get_den_mpz_t(), 2));
    EXPECT_LE(mpz_sizeinbase(in.re.get_den_mpz_t(), 2), kSampleFractionBits + 1);
    offsets.emplace(in.offset.x.get_si(), in.offset.y.get_si());
  }
  // {0} plus 6 + 6 + 6 + 12 + 6 points of norm 1, 3, 4, 7, 9, 12
  EXPECT_EQ(offsets.size(), 43u);
}

TEST(Sampling, AtPrecisionEnclosesInput) {
  const auto in = random_input<kE>(2, 0);
  const ComplexAP z = in.at(512);
  const auto [ox, oy] = to_complex_double(in.offset);
  EXPECT_NEAR(z.re().to_double(), in.re.get_d() + ox, 1e-15);
  EXPECT_NEAR(z.im().to_double(), in.im.get_d() + oy, 1e-15);
  EXPECT_LT(z.radius_double(), std::ldexp(1.0, -500));
}

TEST(Sampling, UniformBelow) {
  std::mt19937_64 rng(5);
  std::vector<int> counts(7, 0);
  for (int i = 0; i < 70000; ++i) ++counts[uniform_below(rng, 7)];
  for (int c : counts) EXPECT_NEAR(c, 10000, 500);
}

TEST(Sampling, QuotientNorms) {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 100; ++t) {
    const auto a = random_quotients<kE>(rng, 10, 50);
    ASSERT_EQ(a.size(), 10u);
    EXPECT_LE(norm(a[0]), 50);
    for (std::size_t n = 1; n < a.size(); ++n) {
      EXPECT_GE(norm(a[n]), 3);
      EXPECT_LE(norm(a[n]), 50);
    }
  }
  EXPECT_THROW(random_quotients<kE>(rng, 3, 2), DomainError);
}

TEST(Sampling, Reproduces) {
  // [0; 2] is the expansion of 1/2; [0; 1] folds to 1, expanded as [1].
  EXPECT_TRUE(reproduces<kE>({EisensteinInt(0, 0), EisensteinInt(2, 0)}));
  EXPECT_FALSE(reproduces<kE>({EisensteinInt(0, 0), EisensteinInt(1, 0)}));
}

}  // namespace
}  // namespace eisencf
