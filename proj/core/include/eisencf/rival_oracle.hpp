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

// Exhaustive search over rival denominators.
//
// For a fixed z and every q with 1 <= norm(q) <= N, the best numerator is
// the lattice point nearest to q z, so
//   min_{p} |q z - p| = dist(q z, lattice).
// The oracle evaluates that distance for every q in double precision with an
// explicit error bound, keeps only the q whose lower estimate can still beat
// the best upper estimate, and recomputes those with certified ball
// arithmetic at the precision of z.

#ifndef EISENCF_RIVAL_ORACLE_HPP_
#define EISENCF_RIVAL_ORACLE_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "eisencf/complex_ap.hpp"
#include "eisencf/ring.hpp"

namespace eisencf {

// All ring elements with 1 <= norm <= max_norm, sorted by norm.
template <RingId R>
class LatticeShells {
 public:
  explicit LatticeShells(std::int64_t max_norm);

  std::int64_t max_norm() const { return max_norm_; }
  std::span<const SmallElement<R>> points() const { return points_; }
  std::span<const std::int64_t> norms() const { return norms_; }
  // Number of points with norm <= bound.
  std::size_t count_up_to(std::int64_t bound) const;

 private:
  std::int64_t max_norm_;
  std::vector<SmallElement<R>> points_;
  std::vector<std::int64_t> norms_;
};

enum class RivalWeight {
  kPlain,       // |q z - p|
  kNormalized,  // |q| |q z - p| = |q|^2 |z - p / q|
};

template <RingId R>
struct RivalMinimum {
  // Bounds of the minimum over the enumerated q.
  Interval value;
  Element<R> witness_q;
  Element<R> witness_p;
  std::size_t q_count = 0;
  // Candidates that survived the double-precision filter.
  std::size_t refined = 0;
};

template <RingId R>
class RivalOracle {
 public:
  // `z` and `shells` must outlive the oracle.
  RivalOracle(const ComplexAP& z, const LatticeShells<R>& shells, RivalWeight weight);

  // Minimum over q with 1 <= norm(q) <= norm_bound. Throws DomainError when
  // the bound exceeds the shells or selects no point.
  RivalMinimum<R> minimum(std::int64_t norm_bound) const;

 private:
  const ComplexAP& z_;
  const LatticeShells<R>& shells_;
  RivalWeight weight_;
  std::vector<double> estimate_;
  std::vector<double> error_;
};

extern template class LatticeShells<RingId::kEisenstein>;
extern template class LatticeShells<RingId::kGaussian>;
extern template class RivalOracle<RingId::kEisenstein>;
extern template class RivalOracle<RingId::kGaussian>;

}  // namespace eisencf

#endif  // EISENCF_RIVAL_ORACLE_HPP_
