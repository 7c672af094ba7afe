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

// Independent reference computations. Nothing here calls the code under
// test except for plain ring arithmetic.

#ifndef EISENCF_TESTS_ORACLES_HPP_
#define EISENCF_TESTS_ORACLES_HPP_

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "eisencf/ring.hpp"

namespace eisencf::testing {

template <RingId R>
Element<R> random_element(std::mt19937_64& rng, std::int64_t bound) {
  std::uniform_int_distribution<std::int64_t> d(-bound, bound);
  return Element<R>(BigInt(static_cast<long>(d(rng))), BigInt(static_cast<long>(d(rng))));
}

// Every (x, y) in a box, filtered by the norm form; no sorting, no pruning
// by the bound used in the library.
template <RingId R>
std::vector<SmallElement<R>> brute_force_ball(std::int64_t max_norm, std::int64_t box) {
  std::vector<SmallElement<R>> out;
  for (std::int64_t x = -box; x <= box; ++x) {
    for (std::int64_t y = -box; y <= box; ++y) {
      const std::int64_t n = RingTraits<R>::kCross ? x * x + x * y + y * y : x * x + y * y;
      if (n >= 1 && n <= max_norm) out.emplace_back(x, y);
    }
  }
  return out;
}

// Minimizers of |num/den - a|^2 = norm(num - a den) / norm(den) over a
// window of lattice points around the float estimate.
template <RingId R>
std::vector<Element<R>> brute_force_nearest(const Element<R>& num, const Element<R>& den) {
  // num / den = num conj(den) / norm(den)
  Element<R> c = num * (RingTraits<R>::kCross
                            ? Element<R>(BigInt(den.x + den.y), BigInt(-den.y))
                            : Element<R>(den.x, BigInt(-den.y)));
  const BigInt d = RingTraits<R>::kCross ? BigInt(den.x * den.x + den.x * den.y + den.y * den.y)
                                         : BigInt(den.x * den.x + den.y * den.y);
  const BigInt cx = c.x / d;
  const BigInt cy = c.y / d;
  std::vector<Element<R>> best;
  BigInt best_dist = -1;
  for (int i = -3; i <= 3; ++i) {
    for (int j = -3; j <= 3; ++j) {
      Element<R> a(BigInt(cx + i), BigInt(cy + j));
      Element<R> diff = num - a * den;
      BigInt dist = RingTraits<R>::kCross
                        ? BigInt(diff.x * diff.x + diff.x * diff.y + diff.y * diff.y)
                        : BigInt(diff.x * diff.x + diff.y * diff.y);
      if (best_dist < 0 || dist < best_dist) {
        best_dist = dist;
        best = {a};
      } else if (dist == best_dist) {
        best.push_back(a);
      }
    }
  }
  return best;
}

template <RingId R>
std::complex<double> embed(const Element<R>& a) {
  const double x = a.x.get_d();
  const double y = a.y.get_d();
  if constexpr (R == RingId::kEisenstein) {
    return {x + y / 2, y * std::sqrt(3.0) / 2};
  } else {
    return {x, y};
  }
}

// [[p_n, p_{n-1}], [q_n, q_{n-1}]] = prod_k [[a_k, 1], [1, 0]].
template <RingId R>
struct Mat2 {
  Element<R> m00, m01, m10, m11;
};

template <RingId R>
std::vector<Mat2<R>> matrix_convergents(const std::vector<Element<R>>& a) {
  std::vector<Mat2<R>> out;
  Mat2<R> acc{Element<R>::one(), Element<R>::zero(), Element<R>::zero(), Element<R>::one()};
  for (const auto& ak : a) {
    Mat2<R> next{acc.m00 * ak + acc.m01, acc.m00, acc.m10 * ak + acc.m11, acc.m10};
    acc = next;
    out.push_back(acc);
  }
  return out;
}

}  // namespace eisencf::testing

#endif  // EISENCF_TESTS_ORACLES_HPP_
