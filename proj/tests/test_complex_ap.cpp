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

#include <random>

#include "eisencf/complex_ap.hpp"
#include "eisencf/errors.hpp"

namespace eisencf {
namespace {

// |x - v| at 1024 bits, where x is the ball midpoint coordinate.
double distance_to(const BigFloat& x, const BigRational& v) {
  BigFloat d(1024);
  mpfr_sub_q(d.get(), x.get(), v.get_mpq_t(), MPFR_RNDN);
  return std::fabs(d.to_double());
}

// True iff the ball contains re + i im (checked on the box circumscribing
// the disc, which is enough for these tests).
bool encloses(const ComplexAP& z, const BigRational& re, const BigRational& im) {
  const double r = z.radius_double();
  return distance_to(z.re(), re) <= r && distance_to(z.im(), im) <= r;
}

BigRational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> n(-1'000'000, 1'000'000), d(1, 1'000'000);
  BigRational q(n(rng), d(rng));
  q.canonicalize();
  return q;
}

TEST(ComplexAP, DecimalReadWithinTolerance) {
  const ComplexAP z = ComplexAP::from_rationals(BigRational(3, 10), BigRational(1, 10), 256);
  EXPECT_LE(distance_to(z.re(), BigRational(3, 10)), std::ldexp(1.0, -250));
  EXPECT_LE(distance_to(z.im(), BigRational(1, 10)), std::ldexp(1.0, -250));
  EXPECT_GT(z.radius_double(), 0.0);
  EXPECT_LE(z.radius_double(), std::ldexp(1.0, -250));
  EXPECT_TRUE(encloses(z, BigRational(3, 10), BigRational(1, 10)));
}

TEST(ComplexAP, DyadicIsExact) {
  const ComplexAP z = ComplexAP::from_rationals(BigRational(3, 8), BigRational(-5, 4), 64);
  EXPECT_EQ(z.radius_double(), 0.0);
  EXPECT_EQ(z.re().to_double(), 0.375);
  EXPECT_EQ(z.im().to_double(), -1.25);
}

TEST(ComplexAP, ArithmeticEnclosesExactResults) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 300; ++i) {
    const BigRational ar = random_rational(rng), ai = random_rational(rng);
    const BigRational br = random_rational(rng), bi = random_rational(rng);
    const ComplexAP a = ComplexAP::from_rationals(ar, ai, 128);
    const ComplexAP b = ComplexAP::from_rationals(br, bi, 128);
    EXPECT_TRUE(encloses(a + b, ar + br, ai + bi));
    EXPECT_TRUE(encloses(a - b, ar - br, ai - bi));
    EXPECT_TRUE(encloses(a * b, ar * br - ai * bi, ar * bi + ai * br));
    const BigRational n2 = br * br + bi * bi;
    if (sgn(n2) != 0) {
      EXPECT_TRUE(encloses(b.reciprocal(), br / n2, -bi / n2));
    }
    const Interval m2 = a.abs2();
    const BigRational exact2 = ar * ar + ai * ai;
    EXPECT_LE(mpfr_cmp_q(m2.lo.get(), exact2.get_mpq_t()), 0);
    EXPECT_GE(mpfr_cmp_q(m2.hi.get(), exact2.get_mpq_t()), 0);
  }
}

TEST(ComplexAP, ReciprocalOfZeroBallThrows) {
  EXPECT_THROW(ComplexAP(128).reciprocal(), PrecisionInsufficient);
  BigFloat r(64);
  mpfr_set_d(r.get(), 1e-3, MPFR_RNDU);
  const ComplexAP fuzzy(BigFloat(128, 1e-4), BigFloat(128, 0.0), r, 128);
  EXPECT_FALSE(fuzzy.certainly_nonzero());
  EXPECT_THROW(fuzzy.reciprocal(), PrecisionInsufficient);
}

TEST(ComplexAP, RadiusGrowsSlowly) {
  // 1000 multiplications by a number of modulus ~1 keep ~240 bits.
  ComplexAP z = ComplexAP::from_rationals(BigRational(3, 5), BigRational(4, 5), 256);
  const ComplexAP w = z;
  for (int i = 0; i < 1000; ++i) z = z * w;
  EXPECT_LT(z.radius_double(), std::ldexp(1.0, -230));
  EXPECT_NEAR(z.abs().mid_double(), 1.0, 1e-60);
}

TEST(ComplexAP, EisensteinEmbedding) {
  const ComplexAP rho = ComplexAP::from_element(EisensteinInt(0, 1), 256);
  EXPECT_EQ(rho.re().to_double(), 0.5);
  EXPECT_NEAR(rho.im().to_double(), std::sqrt(3.0) / 2, 1e-16);
  const Interval a = (rho * rho * rho).abs2();  // rho^3 = -1
  EXPECT_NEAR(a.mid_double(), 1.0, 1e-70);
}

TEST(ComplexAP, BigFloatCopyAndMove) {
  BigFloat a(100, 1.5);
  BigFloat b = a;
  EXPECT_EQ(b.to_double(), 1.5);
  EXPECT_EQ(b.precision(), 100);
  BigFloat c = std::move(a);
  EXPECT_EQ(c.to_double(), 1.5);
  a = c;
  EXPECT_EQ(a.to_double(), 1.5);
  EXPECT_EQ(BigFloat(64, 0.25).to_string(3).substr(0, 4), "2.50");
}

}  // namespace
}  // namespace eisencf
