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

#include "eisencf/ring_rational.hpp"

#include "eisencf/nearest.hpp"

namespace eisencf {

template <RingId R>
Element<R> divide_nearest(const Element<R>& a, const Element<R>& b) {
  if (b.is_zero()) throw ZeroDenominator();
  Element<R> n = a * conj(b);
  return nearest<R>(LatticeCoords{n.x, n.y, norm(b)}).point;
}

template <RingId R>
Element<R> gcd(Element<R> a, Element<R> b) {
  // Both rings are norm-Euclidean: norm(a - t b) <= norm(b) / 2.
  while (!b.is_zero()) {
    Element<R> r = a - divide_nearest(a, b) * b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

template <RingId R>
RingRational<R>::RingRational(Elem num, Elem den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw ZeroDenominator();
  if (num_.is_zero()) {
    den_ = Elem::one();
    return;
  }
  Elem g = gcd(num_, den_);
  if (norm(g) != 1) {
    num_ = divide_nearest(num_, g);
    den_ = divide_nearest(den_, g);
  }
  normalize_associate();
}

template <RingId R>
RingRational<R>::RingRational(Elem num, Elem den, Coprime)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw ZeroDenominator();
  if (num_.is_zero()) {
    den_ = Elem::one();
    return;
  }
  normalize_associate();
}

template <RingId R>
void RingRational<R>::normalize_associate() {
  Elem best_unit = Elem::one();
  Elem best_den = den_;
  for (const Elem& u : units<R>()) {
    Elem candidate = den_ * u;
    if (lex_less(best_den, candidate)) {
      best_den = std::move(candidate);
      best_unit = u;
    }
  }
  if (best_unit != Elem::one()) {
    num_ = num_ * best_unit;
    den_ = std::move(best_den);
  }
}

template <RingId R>
BigRational RingRational<R>::abs2() const {
  BigRational out(norm(num_), norm(den_));
  out.canonicalize();
  return out;
}

template <RingId R>
LatticeCoords RingRational<R>::coords() const {
  Elem n = num_ * conj(den_);
  return LatticeCoords{n.x, n.y, norm(den_)};
}

template <RingId R>
RingRational<R> RingRational<R>::reciprocal() const {
  if (num_.is_zero()) throw ZeroDenominator();
  return RingRational(den_, num_, Coprime{});
}

template <RingId R>
RingRational<R> RingRational<R>::minus_element(const Elem& a) const {
  return RingRational(num_ - a * den_, den_, Coprime{});
}

template class RingRational<RingId::kEisenstein>;
template class RingRational<RingId::kGaussian>;

template Element<RingId::kEisenstein> gcd(Element<RingId::kEisenstein>,
                                          Element<RingId::kEisenstein>);
template Element<RingId::kGaussian> gcd(Element<RingId::kGaussian>,
                                        Element<RingId::kGaussian>);
template Element<RingId::kEisenstein> divide_nearest(const Element<RingId::kEisenstein>&,
                                                     const Element<RingId::kEisenstein>&);
template Element<RingId::kGaussian> divide_nearest(const Element<RingId::kGaussian>&,
                                                   const Element<RingId::kGaussian>&);

}  // namespace eisencf
