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

#include "eisencf/nearest.hpp"

#include <optional>
#include <vector>

#include "eisencf/errors.hpp"

namespace eisencf {

namespace {

// floor((2 n + d) / (2 d)) for d > 0: the integer nearest to n / d, halves
// rounded up.
BigInt round_ratio(const BigInt& n, const BigInt& d) {
  BigInt num = 2 * n + d;
  BigInt den = 2 * d;
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

template <RingId R>
std::vector<Element<R>> candidate_block(const BigInt& s0, const BigInt& t0) {
  std::vector<Element<R>> out;
  out.reserve(9);
  for (int i = -1; i <= 1; ++i) {
    for (int j = -1; j <= 1; ++j) out.emplace_back(BigInt(s0 + i), BigInt(t0 + j));
  }
  return out;
}

template <RingId R>
std::vector<Element<R>> candidate_block(const ComplexAP& z) {
  auto [s, t] = midpoint_lattice_coords<R>(z);
  BigInt s0, t0;
  mpfr_get_z(s0.get_mpz_t(), s.get(), MPFR_RNDN);
  mpfr_get_z(t0.get_mpz_t(), t.get(), MPFR_RNDN);
  return candidate_block<R>(s0, t0);
}

}  // namespace

template <RingId R>
NearestResult<R> nearest(const LatticeCoords& z) {
  // Scaled squared distance d^2 * |z - c|^2 = form(x - s d, y - t d).
  const auto block = candidate_block<R>(round_ratio(z.x, z.d), round_ratio(z.y, z.d));
  std::optional<BigInt> best;
  NearestResult<R> out;
  for (const auto& c : block) {
    BigInt ds = z.x - c.x * z.d;
    BigInt dt = z.y - c.y * z.d;
    BigInt dist = form<R>(ds, dt);
    if (!best || dist < *best) {
      best = dist;
      out.point = c;
      out.tie = false;
    } else if (dist == *best) {
      out.tie = true;
      if (tie_order_less(c, out.point)) out.point = c;
    }
  }
  return out;
}

template <RingId R>
NearestResult<R> nearest(const ComplexAP& z) {
  const auto block = candidate_block<R>(z);
  std::vector<Interval> dist;
  dist.reserve(block.size());
  std::size_t best = 0;
  for (std::size_t k = 0; k < block.size(); ++k) {
    dist.push_back(
        (z - ComplexAP::from_element(block[k], z.precision_bits())).abs2());
    if (mpfr_cmp(dist[k].hi.get(), dist[best].hi.get()) < 0) best = k;
  }

  // margin = 8 ulp of the winning distance
  BigFloat margin(ComplexAP::kRadiusBits);
  mpfr_mul_2si(margin.get(), dist[best].hi.get(), 3 - z.precision_bits(), MPFR_RNDU);
  BigFloat gap(z.precision_bits());
  for (std::size_t k = 0; k < block.size(); ++k) {
    if (k == best) continue;
    mpfr_sub(gap.get(), dist[k].lo.get(), dist[best].hi.get(), MPFR_RNDD);
    if (mpfr_cmp(gap.get(), margin.get()) <= 0) {
      throw PrecisionInsufficient("nearest lattice point cannot be certified at " +
                                  std::to_string(z.precision_bits()) + " bits");
    }
  }
  return NearestResult<R>{block[best], false};
}

template <RingId R>
LatticeDistance<R> lattice_distance(const ComplexAP& z) {
  const auto block = candidate_block<R>(z);
  std::optional<LatticeDistance<R>> out;
  for (const auto& c : block) {
    Interval d = (z - ComplexAP::from_element(c, z.precision_bits())).abs2();
    if (!out) {
      out = LatticeDistance<R>{std::move(d), c};
      continue;
    }
    if (mpfr_cmp(d.lo.get(), out->dist2.lo.get()) < 0) {
      mpfr_set(out->dist2.lo.get(), d.lo.get(), MPFR_RNDD);
    }
    if (mpfr_cmp(d.hi.get(), out->dist2.hi.get()) < 0) {
      mpfr_set(out->dist2.hi.get(), d.hi.get(), MPFR_RNDU);
      out->point = c;
    }
  }
  return std::move(*out);
}

template NearestResult<RingId::kEisenstein> nearest<RingId::kEisenstein>(
    const LatticeCoords&);
template NearestResult<RingId::kGaussian> nearest<RingId::kGaussian>(const LatticeCoords&);
template NearestResult<RingId::kEisenstein> nearest<RingId::kEisenstein>(const ComplexAP&);
template NearestResult<RingId::kGaussian> nearest<RingId::kGaussian>(const ComplexAP&);
template LatticeDistance<RingId::kEisenstein> lattice_distance<RingId::kEisenstein>(
    const ComplexAP&);
template LatticeDistance<RingId::kGaussian> lattice_distance<RingId::kGaussian>(
    const ComplexAP&);

}  // namespace eisencf
