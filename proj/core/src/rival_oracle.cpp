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

#include "eisencf/rival_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "eisencf/errors.hpp"
#include "eisencf/nearest.hpp"

namespace eisencf {

template <RingId R>
LatticeShells<R>::LatticeShells(std::int64_t max_norm)
    : max_norm_(max_norm), points_(enumerate_up_to_norm<R>(max_norm)) {
  norms_.reserve(points_.size());
  for (const auto& p : points_) norms_.push_back(norm(p));
}

template <RingId R>
std::size_t LatticeShells<R>::count_up_to(std::int64_t bound) const {
  return static_cast<std::size_t>(std::upper_bound(norms_.begin(), norms_.end(), bound) -
                                  norms_.begin());
}

namespace {

// Relative slack for the double evaluation of dist(q z, lattice): a handful
// of roundings in the product, the basis change and the norm form, each
// bounded by 2^-53 times the operand magnitudes. 2^-40 leaves a wide margin.
constexpr double kDoubleSlack = 0x1p-40;

}  // namespace

template <RingId R>
RivalOracle<R>::RivalOracle(const ComplexAP& z, const LatticeShells<R>& shells,
                            RivalWeight weight)
    : z_(z), shells_(shells), weight_(weight) {
  const auto [zr, zi] = z.to_double();
  const double zabs = std::hypot(zr, zi);
  // |z - (zr, zi)| <= radius + rounding to double
  const double e0 = z.radius_double() + 0x1p-52 * (std::fabs(zr) + std::fabs(zi)) +
                    std::numeric_limits<double>::denorm_min();

  const auto points = shells.points();
  const auto norms = shells.norms();
  estimate_.resize(points.size());
  error_.resize(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto [qr, qi] = to_complex_double(points[i]);
    const double wr = qr * zr - qi * zi;
    const double wi = qr * zi + qi * zr;
    const double qabs = std::sqrt(static_cast<double>(norms[i]));
    const double dist = std::sqrt(lattice_distance2<R>(wr, wi));
    const double err = qabs * e0 + kDoubleSlack * (qabs * (zabs + 1.0) + 1.0);
    if (weight_ == RivalWeight::kNormalized) {
      estimate_[i] = qabs * dist;
      error_[i] = qabs * err + kDoubleSlack * qabs * dist;
    } else {
      estimate_[i] = dist;
      error_[i] = err;
    }
  }
}

template <RingId R>
RivalMinimum<R> RivalOracle<R>::minimum(std::int64_t norm_bound) const {
  if (norm_bound > shells_.max_norm()) {
    throw DomainError("rival bound " + std::to_string(norm_bound) +
                      " exceeds enumerated shells " + std::to_string(shells_.max_norm()));
  }
  const std::size_t count = shells_.count_up_to(norm_bound);
  if (count == 0) throw DomainError("no rival denominators with norm <= bound");

  double upper = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < count; ++i) upper = std::min(upper, estimate_[i] + error_[i]);

  const int bits = z_.precision_bits();
  std::optional<RivalMinimum<R>> best;
  std::size_t refined = 0;
  for (std::size_t i = 0; i < count; ++i) {
    if (estimate_[i] - error_[i] > upper) continue;
    ++refined;
    const Element<R> q = shells_.points()[i].template as<BigInt>();
    LatticeDistance<R> d = lattice_distance<R>(ComplexAP::from_element(q, bits) * z_);
    Interval value = sqrt(d.dist2);
    if (weight_ == RivalWeight::kNormalized) {
      BigFloat root(bits);
      mpfr_set_si(root.get(), shells_.norms()[i], MPFR_RNDN);
      mpfr_sqrt(root.get(), root.get(), MPFR_RNDD);
      mpfr_mul(value.lo.get(), value.lo.get(), root.get(), MPFR_RNDD);
      mpfr_set_si(root.get(), shells_.norms()[i], MPFR_RNDN);
      mpfr_sqrt(root.get(), root.get(), MPFR_RNDU);
      mpfr_mul(value.hi.get(), value.hi.get(), root.get(), MPFR_RNDU);
    }
    if (!best) {
      best = RivalMinimum<R>{std::move(value), q, d.point, count, 0};
      continue;
    }
    if (mpfr_cmp(value.lo.get(), best->value.lo.get()) < 0) {
      mpfr_set(best->value.lo.get(), value.lo.get(), MPFR_RNDD);
    }
    if (mpfr_cmp(value.hi.get(), best->value.hi.get()) < 0) {
      mpfr_set(best->value.hi.get(), value.hi.get(), MPFR_RNDU);
      best->witness_q = q;
      best->witness_p = d.point;
    }
  }
  best->refined = refined;
  return std::move(*best);
}

template class LatticeShells<RingId::kEisenstein>;
template class LatticeShells<RingId::kGaussian>;
template class RivalOracle<RingId::kEisenstein>;
template class RivalOracle<RingId::kGaussian>;

}  // namespace eisencf
