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

#ifndef EISENCF_RING_RATIONAL_HPP_
#define EISENCF_RING_RATIONAL_HPP_

#include <string>

#include "eisencf/errors.hpp"
#include "eisencf/ring.hpp"

namespace eisencf {

// A point of the quotient field written as (x / d, y / d) in the lattice
// basis, with d > 0.
struct LatticeCoords {
  BigInt x;
  BigInt y;
  BigInt d;
};

// Exact element num / den of the quotient field of the ring.
//
// Invariants: den != 0, gcd(num, den) is a unit, and den is the
// lexicographically largest of its associates. Two equal field elements
// therefore have identical representations.
template <RingId R>
class RingRational {
 public:
  using Elem = Element<R>;

  RingRational() : num_(Elem::zero()), den_(Elem::one()) {}
  explicit RingRational(Elem value) : num_(std::move(value)), den_(Elem::one()) {}
  // Throws ZeroDenominator.
  RingRational(Elem num, Elem den);

  const Elem& num() const { return num_; }
  const Elem& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_integral() const { return den_ == Elem::one(); }

  // |value|^2 = norm(num) / norm(den).
  BigRational abs2() const;
  LatticeCoords coords() const;

  // Throws ZeroDenominator on zero.
  RingRational reciprocal() const;

  friend bool operator==(const RingRational& a, const RingRational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RingRational& a, const RingRational& b) {
    return !(a == b);
  }

  friend RingRational operator+(const RingRational& a, const RingRational& b) {
    return RingRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RingRational operator-(const RingRational& a, const RingRational& b) {
    return RingRational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RingRational operator*(const RingRational& a, const RingRational& b) {
    return RingRational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RingRational operator/(const RingRational& a, const RingRational& b) {
    return a * b.reciprocal();
  }

  // z - a for a ring element a. The result stays reduced, so no gcd is
  // needed.
  RingRational minus_element(const Elem& a) const;

 private:
  struct Coprime {};
  RingRational(Elem num, Elem den, Coprime);
  void normalize_associate();

  Elem num_;
  Elem den_;
};

// Greatest common divisor by Euclidean division with nearest-point
// quotients; defined up to a unit.
template <RingId R>
Element<R> gcd(Element<R> a, Element<R> b);

// Exact quotient a / b when b divides a, otherwise the nearest-point
// quotient. Throws ZeroDenominator.
template <RingId R>
Element<R> divide_nearest(const Element<R>& a, const Element<R>& b);

template <RingId R>
std::string to_string(const RingRational<R>& z) {
  return to_string(z.num()) + "/" + to_string(z.den());
}

using EisensteinRational = RingRational<RingId::kEisenstein>;
using GaussianRational = RingRational<RingId::kGaussian>;

extern template class RingRational<RingId::kEisenstein>;
extern template class RingRational<RingId::kGaussian>;

}  // namespace eisencf

#endif  // EISENCF_RING_RATIONAL_HPP_
