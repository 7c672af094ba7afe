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

// Nearest lattice point.
//
// Candidates are the 3x3 block of lattice points around the coordinate-wise
// rounding of z in the (1, basis) coordinates; the minimizer always lies in
// that block for both lattices. Among equidistant minimizers the smallest
// in tie_order_less wins and `tie` is raised.

#ifndef EISENCF_NEAREST_HPP_
#define EISENCF_NEAREST_HPP_

#include <array>
#include <cmath>
#include <limits>

#include "eisencf/complex_ap.hpp"
#include "eisencf/ring.hpp"
#include "eisencf/ring_rational.hpp"

namespace eisencf {

template <RingId R>
struct NearestResult {
  Element<R> point;
  bool tie = false;
};

// Exact: coordinates are compared through the integral norm form.
template <RingId R>
NearestResult<R> nearest(const LatticeCoords& z);

template <RingId R>
NearestResult<R> nearest(const RingRational<R>& z) {
  return nearest<R>(z.coords());
}

// Certified: the winner's squared distance must be separated from every
// other candidate by more than the tracked error plus 8 ulp. Throws
// PrecisionInsufficient otherwise; exact ties always throw.
template <RingId R>
NearestResult<R> nearest(const ComplexAP& z);

// Bounds of the squared distance from the ball to the lattice.
template <RingId R>
struct LatticeDistance {
  Interval dist2;
  Element<R> point;  // minimizer for the midpoint
};

// Distance to the lattice without certifying which point attains it. The
// distance is 1-Lipschitz in z, so the bounds hold even when the argmin is
// ambiguous.
template <RingId R>
LatticeDistance<R> lattice_distance(const ComplexAP& z);

// Double-precision squared distance from (re, im) to the lattice. Used as
// a filter; callers must supply their own error bound.
template <RingId R>
inline double lattice_distance2(double re, double im) {
  double s, t;
  if constexpr (R == RingId::kEisenstein) {
    t = im * 1.15470053837925152902;  // 2 / sqrt(3)
    s = re - 0.5 * t;
  } else {
    s = re;
    t = im;
  }
  const double s0 = std::nearbyint(s);
  const double t0 = std::nearbyint(t);
  double best = std::numeric_limits<double>::infinity();
  for (int i = -1; i <= 1; ++i) {
    for (int j = -1; j <= 1; ++j) {
      const double ds = s - (s0 + i);
      const double dt = t - (t0 + j);
      const double d = form<R>(ds, dt);
      if (d < best) best = d;
    }
  }
  return best;
}

}  // namespace eisencf

#endif  // EISENCF_NEAREST_HPP_
