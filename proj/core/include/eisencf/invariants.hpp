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

// Checkable identities and inequalities of nearest-integer expansions.
//
// Exact-mode checks are exact integer or rational comparisons. Certified
// checks report a violation only when the tracked error bounds prove one.

#ifndef EISENCF_INVARIANTS_HPP_
#define EISENCF_INVARIANTS_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "eisencf/expansion.hpp"

namespace eisencf {

// p_n q_{n-1} - q_n p_{n-1} = (-1)^(n-1), n >= 0.
template <RingId R>
bool determinant_identity(const QPair<R>& qp, std::ptrdiff_t n);

// norm(q_n) < norm(q_{n+1}), n >= 0.
template <RingId R>
bool strict_denominator_growth(const QPair<R>& qp, std::ptrdiff_t n);

// 4 norm(q_{n+1}) >= 9 norm(q_{n-1}), n >= 1.
template <RingId R>
bool skip_two_growth(const QPair<R>& qp, std::ptrdiff_t n);

// |r_n| <= sqrt(2/3) or |r_{n+1}| <= sqrt(2/3), n >= 1.
template <RingId R>
bool ratio_alternation(const QPair<R>& qp, std::ptrdiff_t n);

// |z_n|^2 >= 1 / (covering radius)^2, i.e. 3 for Eisenstein and 2 for
// Gaussian, n >= 1.
template <RingId R>
bool iterate_lower_bound(const Expansion<R>& e, std::size_t n);

// norm(a_n) >= 3 (Eisenstein) resp. 2 (Gaussian), n >= 1.
template <RingId R>
bool quotient_lower_bound(const Expansion<R>& e, std::size_t n);

// |a_{n+1}| - 2 <= |z_{n+1} + q_{n-1} / q_n| <= |a_{n+1}| + 2, 0 <= n < m.
template <RingId R>
bool sandwich(const Expansion<R>& e, const QPair<R>& qp, std::size_t n);

// z (q_n z_{n+1} + q_{n-1}) = p_n z_{n+1} + p_{n-1}. Exact mode, 0 <= n < m.
template <RingId R>
bool mobius_identity(const Expansion<R>& e, const QPair<R>& qp, std::size_t n);

// A terminated exact expansion folds back to its input.
template <RingId R>
bool round_trip(const Expansion<R>& e);

struct Violation {
  std::string check;
  std::size_t n = 0;
};

struct InvariantReport {
  std::map<std::string, std::size_t> checks;
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  void record(const std::string& check, std::size_t n, bool holds);
};

// Runs every applicable check over the whole expansion. The skip-two growth
// and alternation bounds are Eisenstein statements and are skipped for the
// Gaussian ring. Certified residual agreement uses `residual_tol`.
template <RingId R>
InvariantReport check_invariants(const Expansion<R>& e, const QPair<R>& qp,
                                 double residual_tol);

// lhs <= c sqrt(v) for c >= 0, v >= 0, decided exactly.
bool le_times_sqrt(const BigRational& lhs, const BigRational& c, const BigRational& v);

}  // namespace eisencf

#endif  // EISENCF_INVARIANTS_HPP_
