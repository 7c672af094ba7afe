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

#include "eisencf/expansion.hpp"
#include "eisencf/nearest.hpp"
#include "eisencf/sampling.hpp"
#include "oracles.hpp"

namespace eisencf {
namespace {

using E = EisensteinInt;
constexpr auto kE = RingId::kEisenstein;
constexpr auto kG = RingId::kGaussian;

ComplexAP e_plus_pi_i_over_7(int bits) {
  BigFloat one(bits, 1.0), re(bits), im(bits);
  mpfr_exp(re.get(), one.get(), MPFR_RNDN);
  mpfr_const_pi(im.get(), MPFR_RNDN);
  mpfr_div_ui(im.get(), im.get(), 7, MPFR_RNDN);
  // two roundings of values below 4
  BigFloat r(64);
  mpfr_set_ui_2exp(r.get(), 1, 3 - bits, MPFR_RNDU);
  return ComplexAP(std::move(re), std::move(im), std::move(r), bits);
}

TEST(Expand, LatticePointTerminatesImmediately) {
  const auto e = expand(EisensteinRational(E(4, -7)));
  ASSERT_EQ(e.a.size(), 1u);
  EXPECT_EQ(e.a[0], E(4, -7));
  EXPECT_TRUE(e.terminated);
  EXPECT_EQ(e.mode, Mode::kExact);
}

TEST(Expand, Half) {
  const auto e = expand(EisensteinRational(E(1, 0), E(2, 0)));
  const std::vector<E> expected{E(0, 0), E(2, 0)};
  EXPECT_EQ(e.a, expected);
  EXPECT_TRUE(e.terminated);
  ASSERT_EQ(e.exact_iterates.size(), 2u);
  EXPECT_EQ(e.exact_iterates[1], EisensteinRational(E(2, 0)));
  EXPECT_EQ(e.tie_steps, std::vector<std::size_t>{0});
  EXPECT_TRUE(e.tie_at_or_before(0));
}

TEST(Expand, HalfResidual) {
  const auto e = expand(EisensteinRational(E(1, 0), E(2, 0)));
  const auto qp = q_pair<kE>(e.a);
  const Residual r = residual(e, qp, 0);
  EXPECT_TRUE(r.exact);
  EXPECT_EQ(r.direct_sq, BigRational(1, 4));
  EXPECT_EQ(r.identity_sq, BigRational(1, 4));
  EXPECT_TRUE(r.agrees(0));
  EXPECT_EQ(r.value(), 0.5);
  EXPECT_THROW(residual(e, qp, 1), IndexOutOfRange);
}

TEST(Expand, MaxStepsIsTheLargestIndex) {
  const EisensteinRational z(E(1000003, 7), E(999, -555));
  ExpandOptions opts;
  opts.max_steps = 2;
  const auto e = expand(z, opts);
  EXPECT_EQ(e.last_index(), 2u);
  EXPECT_FALSE(e.terminated);
}

TEST(Expand, QNormLimitStopsAfterFirstExcess) {
  ExpandOptions opts;
  opts.max_steps = 100;
  opts.qnorm_limit = BigInt(1000);
  const auto e = expand<kE>(e_plus_pi_i_over_7(256), opts);
  const auto qp = q_pair<kE>(e.a);
  const auto m = static_cast<std::ptrdiff_t>(e.last_index());
  EXPECT_GT(norm(qp.q(m)), 1000);
  EXPECT_LE(norm(qp.q(m - 1)), 1000);
}

TEST(QPair, BaseCases) {
  const E a0(3, -1), a1(-2, 5);
  const auto one = q_pair<kE>(std::vector<E>{a0});
  EXPECT_EQ(one.p(-1), E(1, 0));
  EXPECT_EQ(one.p(0), a0);
  EXPECT_EQ(one.q(-1), E(0, 0));
  EXPECT_EQ(one.q(0), E(1, 0));
  EXPECT_EQ(one.p(0) * one.q(-1) - one.q(0) * one.p(-1), E(-1, 0));
  const auto two = q_pair<kE>(std::vector<E>{a0, a1});
  EXPECT_EQ(two.p(1), a1 * a0 + E(1, 0));
  EXPECT_EQ(two.q(1), a1);
  EXPECT_THROW(q_pair<kE>(std::vector<E>{}), DomainError);
}

template <RingId R>
void matches_matrix_products(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_quotients<R>(rng, 8, 40);
    const auto qp = q_pair<R>(a);
    const auto mats = testing::matrix_convergents<R>(a);
    for (std::size_t n = 0; n < a.size(); ++n) {
      const auto k = static_cast<std::ptrdiff_t>(n);
      EXPECT_EQ(qp.p(k), mats[n].m00);
      EXPECT_EQ(qp.p(k - 1), mats[n].m01);
      EXPECT_EQ(qp.q(k), mats[n].m10);
      EXPECT_EQ(qp.q(k - 1), mats[n].m11);
      // det of a product of det -1 matrices
      const Element<R> det = mats[n].m00 * mats[n].m11 - mats[n].m01 * mats[n].m10;
      const Element<R> sign(BigInt(n % 2 == 0 ? -1 : 1), BigInt(0));
      EXPECT_EQ(det, sign);
    }
  }
}

TEST(QPair, MatchesMatrixProductsEisenstein) { matches_matrix_products<kE>(51); }
TEST(QPair, MatchesMatrixProductsGaussian) { matches_matrix_products<kG>(52); }

TEST(Convergent, ZerothAndLast) {
  const EisensteinRational z(E(123457, -999), E(-641, 2003));
  ExpandOptions opts;
  opts.max_steps = 1000;
  const auto e = expand(z, opts);
  ASSERT_TRUE(e.terminated);
  EXPECT_EQ(convergent(e, 0), EisensteinRational(e.a[0]));
  EXPECT_EQ(convergent(e, e.last_index()), z);
  EXPECT_THROW(convergent(e, e.last_index() + 1), IndexOutOfRange);
  EXPECT_EQ(fold_up<kE>(e.a), z);
}

TEST(Convergent, ApproachesEPlusPiIOverSeven) {
  ExpandOptions opts;
  opts.max_steps = 20;
  const auto run = expand_with_retry<kE>(e_plus_pi_i_over_7, opts);
  const auto& e = run.expansion;
  ASSERT_EQ(e.last_index(), 20u);
  EXPECT_FALSE(e.terminated);
  EXPECT_EQ(e.mode, Mode::kCertified);
  const auto qp = q_pair<kE>(e.a);
  double prev = 1e9;
  for (std::size_t n = 0; n <= 20; ++n) {
    const ComplexAP c = ComplexAP::from_ring_rational(convergent(qp, n), 512);
    const double d = (run.z - c).abs().mid_double();
    EXPECT_LE(d, prev) << "n = " << n;
    prev = d;
  }
  EXPECT_LT(prev, 1e-20);
}

TEST(Expand, CertifiedAgreesWithExact) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = random_quotients<kE>(rng, 12, 60);
    const auto z = fold_up<kE>(a);
    ExpandOptions opts;
    opts.max_steps = 40;
    const auto exact = expand(z, opts);
    if (exact.last_index() < 2) continue;
    try {
      opts.max_steps = exact.last_index() - 1;
      const auto approx = expand<kE>(ComplexAP::from_ring_rational(z, 512), opts);
      for (std::size_t n = 0; n <= approx.last_index(); ++n) EXPECT_EQ(approx.a[n], exact.a[n]);
    } catch (const PrecisionInsufficient&) {
      EXPECT_FALSE(exact.tie_steps.empty());  // only ties may defeat the ball
    }
  }
}

TEST(Expand, CertifiedStopsAtTie) {
  ExpandOptions opts;
  EXPECT_THROW(
      expand<kE>(ComplexAP::from_rationals(BigRational(1, 2), BigRational(0), 256), opts),
      PrecisionInsufficient);
  // 3 - i lands on a Voronoi edge after one step.
  EXPECT_THROW(expand_with_retry<kE>(
                   [](int bits) {
                     return ComplexAP::from_rationals(BigRational(3, 10), BigRational(1, 10),
                                                      bits);
                   },
                   opts),
               PrecisionInsufficient);
}

TEST(RatioReport, RealQuotientsOneThreeThreeThree) {
  const std::vector<E> a{E(1, 0), E(3, 0), E(3, 0), E(3, 0)};
  const auto qp = q_pair<kE>(a);
  EXPECT_EQ(qp.q(-1), E(0, 0));
  EXPECT_EQ(qp.q(0), E(1, 0));
  EXPECT_EQ(qp.q(1), E(3, 0));
  EXPECT_EQ(qp.q(2), E(10, 0));
  EXPECT_EQ(qp.q(3), E(33, 0));
  const auto rep = ratio_report(qp);
  // |q_2 / q_0| = 10, |q_3 / q_1| = 11
  ASSERT_EQ(rep.skip2_abs2.size(), 2u);
  EXPECT_EQ(rep.skip2_abs2[0], BigRational(100));
  EXPECT_EQ(rep.skip2_abs2[1], BigRational(121));
  EXPECT_TRUE(rep.clean());
}

TEST(RatioReport, NearestIntegerRunsAreClean) {
  std::mt19937_64 rng(54);
  for (int trial = 0; trial < 100; ++trial) {
    const auto z = fold_up<kE>(random_quotients<kE>(rng, 15, 30));
    ExpandOptions opts;
    opts.max_steps = 200;
    const auto e = expand(z, opts);
    const auto rep = ratio_report(q_pair<kE>(e.a));
    EXPECT_TRUE(rep.clean());
    for (const auto& r2 : rep.r_abs2) EXPECT_LT(r2, 1);
  }
}

TEST(RatioReport, NegativeControl) {
  // q = 1, 2, -1, -1: not produced by the algorithm (a_2 has norm 1).
  const std::vector<E> a{E(0, 0), E(2, 0), E(-1, 0), E(3, 0)};
  const auto rep = ratio_report(q_pair<kE>(a));
  EXPECT_EQ(rep.growth_violations, (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(rep.alternation_violations, std::vector<std::size_t>{2});
}

}  // namespace
}  // namespace eisencf
