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

// Nearest-integer continued fraction expansions.
//
// Starting from z_0 = z the algorithm emits a_n = f(z_n), the nearest lattice
// point, and continues with z_{n+1} = 1 / (z_n - a_n) until z_n is itself a
// lattice point. Convergents p_n / q_n follow the three-term recurrences
//   p_{-1} = 1, p_0 = a_0,  p_{n+1} = a_{n+1} p_n + p_{n-1}
//   q_{-1} = 0, q_0 = 1,    q_{n+1} = a_{n+1} q_n + q_{n-1}.
//
// Exact mode works on RingRational inputs and decides everything exactly.
// Certified mode works on ComplexAP balls; it never reports termination and
// throws PrecisionInsufficient when a step cannot be certified.

#ifndef EISENCF_EXPANSION_HPP_
#define EISENCF_EXPANSION_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "eisencf/complex_ap.hpp"
#include "eisencf/errors.hpp"
#include "eisencf/ring.hpp"
#include "eisencf/ring_rational.hpp"

namespace eisencf {

inline constexpr std::size_t kDefaultMaxSteps = 64;
inline constexpr int kDefaultPrecisionBits = 256;
inline constexpr int kMinCertifiedBits = 64;
inline constexpr int kMaxPrecisionBits = 4096;

enum class Mode { kExact, kCertified };

struct ExpandOptions {
  // Largest index m that may be produced.
  std::size_t max_steps = kDefaultMaxSteps;
  int precision_bits = kDefaultPrecisionBits;
  // Stop right after the first index n with norm(q_n) > limit.
  std::optional<BigInt> qnorm_limit;
};

template <RingId R>
struct Expansion {
  static constexpr RingId ring = R;

  Mode mode = Mode::kExact;
  std::vector<Element<R>> a;
  // z_0 .. z_m; exactly one of the two is populated, depending on mode.
  std::vector<RingRational<R>> exact_iterates;
  std::vector<ComplexAP> approx_iterates;
  bool terminated = false;
  std::vector<std::size_t> tie_steps;
  int precision_bits = 0;

  std::size_t last_index() const { return a.size() - 1; }
  bool tie_at_or_before(std::size_t n) const {
    return !tie_steps.empty() && tie_steps.front() <= n;
  }
};

// Sequences p_n, q_n for n >= -1.
template <RingId R>
struct QPair {
  std::vector<Element<R>> p_seq;  // p_seq[k] = p_{k-1}
  std::vector<Element<R>> q_seq;

  const Element<R>& p(std::ptrdiff_t n) const { return p_seq.at(n + 1); }
  const Element<R>& q(std::ptrdiff_t n) const { return q_seq.at(n + 1); }
  // Largest index n.
  std::ptrdiff_t last_index() const { return static_cast<std::ptrdiff_t>(p_seq.size()) - 2; }
};

template <RingId R>
Expansion<R> expand(const RingRational<R>& z, const ExpandOptions& options = {});

template <RingId R>
Expansion<R> expand(const ComplexAP& z, const ExpandOptions& options = {});

// Produces the input at a requested precision.
using ComplexSource = std::function<ComplexAP(int precision_bits)>;

// Runs fn(bits) with bits = start, 2 start, ... up to max_bits while it
// throws PrecisionInsufficient; the last failure propagates.
template <typename Fn>
auto with_precision_retry(int start_bits, int max_bits, Fn&& fn) -> decltype(fn(start_bits)) {
  for (int bits = start_bits;; bits *= 2) {
    try {
      return fn(bits);
    } catch (const PrecisionInsufficient&) {
      if (bits * 2 > max_bits) throw;
    }
  }
}

template <RingId R>
struct CertifiedRun {
  ComplexAP z;
  Expansion<R> expansion;
};

template <RingId R>
CertifiedRun<R> expand_with_retry(const ComplexSource& source, const ExpandOptions& options,
                                  int max_bits = kMaxPrecisionBits);

// Throws DomainError on an empty sequence.
template <RingId R>
QPair<R> q_pair(std::span<const Element<R>> a);

// Value of the finite continued fraction [a_0; a_1, ..., a_m].
template <RingId R>
RingRational<R> fold_up(std::span<const Element<R>> a);

// p_n / q_n. Throws IndexOutOfRange.
template <RingId R>
RingRational<R> convergent(const Expansion<R>& e, std::size_t n);
template <RingId R>
RingRational<R> convergent(const QPair<R>& qp, std::size_t n);

// |q_n z - p_n| computed directly and through 1 / |z_{n+1} q_n + q_{n-1}|.
struct Residual {
  bool exact = false;
  // Squared values, Exact mode only.
  BigRational direct_sq;
  BigRational identity_sq;
  Interval direct;
  Interval identity;

  // Exact: equality of the squared values. Certified: every pair of points
  // in the two intervals is within tol.
  bool agrees(double tol) const;
  double value() const { return direct.mid_double(); }
};

// Requires n < m. Throws IndexOutOfRange.
template <RingId R>
Residual residual(const Expansion<R>& e, const QPair<R>& qp, std::size_t n);

template <RingId R>
struct RatioReport {
  // Entry k describes index n = k + 1.
  std::vector<RingRational<R>> r;       // r_n = q_{n-1} / q_n
  std::vector<BigRational> r_abs2;      // |r_n|^2
  std::vector<double> r_abs;
  std::vector<BigRational> skip2_abs2;  // |q_{n+1} / q_{n-1}|^2
  std::vector<double> skip2;
  // Indices n where 4 norm(q_{n+1}) < 9 norm(q_{n-1}).
  std::vector<std::size_t> growth_violations;
  // Indices n where both |r_n|^2 and |r_{n+1}|^2 exceed 2/3.
  std::vector<std::size_t> alternation_violations;

  bool clean() const { return growth_violations.empty() && alternation_violations.empty(); }
};

template <RingId R>
RatioReport<R> ratio_report(const QPair<R>& qp);

Interval sqrt_of_rational(const BigRational& v, int precision_bits);

}  // namespace eisencf

#endif  // EISENCF_EXPANSION_HPP_
