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

// Brute-force checks of the approximation quality of convergents.
//
// Best approximants: for the convergent pair (p_n, q_n) and every rival
// pair (p, q) with 1 <= |q| <= |q_n|,
//   |q z - p| >= c |q_n z - p_n|
// with c = 1/2 for Eisenstein and c = 1/5 for Gaussian expansions.
//
// Bad approximability: if every partial quotient satisfies |a_n| <= M then
//   |z - p/q| >= delta / |q|^2,  delta = 1 / (2 (M + 2)^2),
// and a single huge quotient a_{n+1} makes |q_n| |q_n z - p_n| tiny.

#ifndef EISENCF_APPROXIMATION_HPP_
#define EISENCF_APPROXIMATION_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "eisencf/expansion.hpp"
#include "eisencf/rival_oracle.hpp"

namespace eisencf {

inline constexpr std::int64_t kDefaultRivalNormBound = 22500;
inline constexpr std::int64_t kDefaultEnumerationGuard = 1'000'000;
inline constexpr double kRatioTolerance = 1e-9;
// A verdict whose ratio is uncertain by more than this is not reported.
inline constexpr double kMaxRatioUncertainty = 1e-12;

// Lower bound of best_rival / residual_n that the ring guarantees.
template <RingId R>
constexpr double best_approx_constant() {
  return R == RingId::kEisenstein ? 0.5 : 0.2;
}

template <RingId R>
struct ApproxVerdict {
  std::size_t n = 0;
  Element<R> a_n;
  BigInt qn_norm;
  double residual = 0;    // |q_n z - p_n|
  double best_rival = 0;  // min |q z - p| over admissible (p, q)
  double ratio = 0;       // best_rival / residual
  double ratio_error = 0;
  Element<R> witness_q;
  Element<R> witness_p;
  std::size_t q_count = 0;
  bool tie_affected = false;

  bool meets(double constant) const { return ratio >= constant - kRatioTolerance; }
};

struct VerifyConfig {
  ExpandOptions expand;
  // Indices with norm(q_n) above this are not verified.
  std::int64_t max_qnorm = kDefaultRivalNormBound;
  std::int64_t guard = kDefaultEnumerationGuard;
};

// Verdict for one index of an existing expansion of `z`. `z` must be the
// input of `e` (at least at the expansion's precision). Throws
// IndexOutOfRange (n >= m), EnumerationTooLarge (norm(q_n) > guard or beyond
// the shells), PrecisionInsufficient.
template <RingId R>
ApproxVerdict<R> verify_best_approx(const ComplexAP& z, const Expansion<R>& e,
                                    const QPair<R>& qp, std::size_t n,
                                    const LatticeShells<R>& shells,
                                    std::int64_t guard = kDefaultEnumerationGuard);

template <RingId R>
struct VerifyRun {
  Expansion<R> expansion;
  std::vector<ApproxVerdict<R>> verdicts;
  int precision_bits = 0;
};

// Expands z (retrying at higher precision on PrecisionInsufficient) and
// verifies every index n < m with norm(q_n) <= config.max_qnorm. When
// `shells` is null the needed shells are enumerated locally.
template <RingId R>
VerifyRun<R> verify_all(const ComplexSource& z, const VerifyConfig& config,
                        const LatticeShells<R>* shells = nullptr);
template <RingId R>
VerifyRun<R> verify_all(const RingRational<R>& z, const VerifyConfig& config,
                        const LatticeShells<R>* shells = nullptr);

// Single index; throws IndexOutOfRange when the expansion stops before n+1.
template <RingId R>
ApproxVerdict<R> verify_best_approx(const ComplexSource& z, std::size_t n,
                                    const VerifyConfig& config);
template <RingId R>
ApproxVerdict<R> verify_best_approx(const RingRational<R>& z, std::size_t n,
                                    const VerifyConfig& config);

// 1 / (2 (M + 2)^2) exactly. Throws DomainError when M < sqrt(3).
BigRational delta_bound(const BigRational& m);
// Certified lower bound of 1 / (2 (sqrt(m_squared) + 2)^2), exact when
// m_squared is the square of a rational. Throws DomainError when
// m_squared < 3.
BigRational delta_bound_from_square(const BigRational& m_squared);

// norm(q_n) <= (M + 1)^2 norm(q_{n-1}) for every n >= 1, with M^2 =
// m_squared; decided exactly.
template <RingId R>
bool growth_bound_check(const QPair<R>& qp, const BigRational& m_squared);

enum class Classification { kBoundedQuotients, kUnboundedSuspected };

template <RingId R>
struct BadApproxVerdict {
  BigInt max_quotient_norm;         // M^2
  double max_partial_quotient = 0;  // M
  BigRational delta;                // delta_bound_from_square(M^2)
  // min over 1 <= norm(q) <= bound of |q|^2 |z - p/q| with p nearest to q z
  double empirical_inf = 0;
  double empirical_inf_error = 0;
  Element<R> witness_q;
  Element<R> witness_p;
  std::size_t q_count = 0;
  Classification classification = Classification::kBoundedQuotients;
  std::size_t steps_used = 0;
  // First n >= 1 with |q_n| |q_n z - p_n| < delta(max_{1<=k<=n} |a_k|).
  std::optional<std::size_t> jump_index;
  double jump_normalized_residual = 0;
  BigRational jump_delta;
  int precision_bits = 0;

  // Bounded quotients must not be contradicted by the enumeration.
  bool consistent() const {
    return classification != Classification::kBoundedQuotients ||
           empirical_inf >= delta.get_d() - kRatioTolerance;
  }
};

struct ClassifyConfig {
  std::size_t steps = 16;
  std::int64_t rival_norm_bound = kDefaultRivalNormBound;
  int precision_bits = kDefaultPrecisionBits;
  std::int64_t guard = kDefaultEnumerationGuard;
};

// Throws DomainError (steps < 8), EnumerationTooLarge, PrecisionInsufficient.
template <RingId R>
BadApproxVerdict<R> classify_bad_approx(const ComplexSource& z, const ClassifyConfig& config,
                                        const LatticeShells<R>* shells = nullptr);

// Elements of the quotient field are never badly approximable in this
// sense: always throws DomainError.
template <RingId R>
BadApproxVerdict<R> classify_bad_approx(const RingRational<R>& z, const ClassifyConfig& config);

// |q_n| |q_n z - p_n| for 0 <= n < m.
template <RingId R>
Interval normalized_residual(const Expansion<R>& e, const QPair<R>& qp, std::size_t n);

}  // namespace eisencf

#endif  // EISENCF_APPROXIMATION_HPP_
