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

// Certified high-precision complex numbers.
//
// A ComplexAP is a complex ball: an MPFR midpoint (re, im) at
// `precision_bits` and a radius r such that the represented exact value lies
// within distance r of the midpoint. Every operation rounds the midpoint to
// nearest and adds to the radius both the propagated input radii and a
// rounding slack of |result| * 2^(kGuardBits - precision_bits). Radii are
// kept in a short MPFR float rounded upward so they never underflow.

#ifndef EISENCF_COMPLEX_AP_HPP_
#define EISENCF_COMPLEX_AP_HPP_

#include <mpfr.h>

#include <array>
#include <string>

#include "eisencf/ring.hpp"
#include "eisencf/ring_rational.hpp"

namespace eisencf {

// RAII owner of an mpfr_t.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t bits = 64);
  BigFloat(mpfr_prec_t bits, double value);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }

  double to_double(mpfr_rnd_t rnd = MPFR_RNDN) const { return mpfr_get_d(value_, rnd); }
  // Scientific notation with `digits` significant decimal digits.
  std::string to_string(int digits = 20) const;

 private:
  mpfr_t value_;
};

// Closed real interval [lo, hi] with outward-rounded endpoints.
struct Interval {
  BigFloat lo;
  BigFloat hi;

  double mid_double() const;
  double width_double() const;
  bool contains(double v) const;
};

// 1 / x for an interval bounded away from zero on the positive side.
// Throws PrecisionInsufficient when lo <= 0.
Interval reciprocal(const Interval& x);
Interval sqrt(const Interval& x);

class ComplexAP {
 public:
  static constexpr int kGuardBits = 4;
  static constexpr mpfr_prec_t kRadiusBits = 64;

  // Exact zero.
  explicit ComplexAP(int precision_bits);
  ComplexAP(BigFloat re, BigFloat im, BigFloat radius, int precision_bits);

  // Rationals rounded to nearest; the radius is zero when both are exactly
  // representable at this precision.
  static ComplexAP from_rationals(const BigRational& re, const BigRational& im,
                                  int precision_bits);

  template <RingId R>
  static ComplexAP from_element(const Element<R>& a, int precision_bits);
  template <RingId R>
  static ComplexAP from_ring_rational(const RingRational<R>& z, int precision_bits);

  const BigFloat& re() const { return re_; }
  const BigFloat& im() const { return im_; }
  const BigFloat& radius() const { return radius_; }
  int precision_bits() const { return precision_bits_; }

  friend ComplexAP operator+(const ComplexAP& a, const ComplexAP& b);
  friend ComplexAP operator-(const ComplexAP& a, const ComplexAP& b);
  friend ComplexAP operator*(const ComplexAP& a, const ComplexAP& b);

  // Throws PrecisionInsufficient if the ball contains zero.
  ComplexAP reciprocal() const;

  // Bounds of |z|^2 and |z| over the ball.
  Interval abs2() const;
  Interval abs() const;

  // True iff zero is certainly not in the ball.
  bool certainly_nonzero() const;

  std::array<double, 2> to_double() const {
    return {re_.to_double(), im_.to_double()};
  }
  double radius_double() const { return radius_.to_double(MPFR_RNDU); }

 private:
  // Point (s + c t/2, sqrt(3) t / 2) or (s, t), from rational lattice
  // coordinates.
  static ComplexAP from_lattice_rationals(const BigRational& s, const BigRational& t,
                                          bool eisenstein, int precision_bits);

  BigFloat re_;
  BigFloat im_;
  BigFloat radius_;
  int precision_bits_;
};

template <RingId R>
ComplexAP ComplexAP::from_element(const Element<R>& a, int precision_bits) {
  return from_lattice_rationals(BigRational(a.x), BigRational(a.y),
                                R == RingId::kEisenstein, precision_bits);
}

template <RingId R>
ComplexAP ComplexAP::from_ring_rational(const RingRational<R>& z, int precision_bits) {
  LatticeCoords c = z.coords();
  BigRational s(c.x, c.d);
  BigRational t(c.y, c.d);
  s.canonicalize();
  t.canonicalize();
  return from_lattice_rationals(s, t, R == RingId::kEisenstein, precision_bits);
}

// Lattice coordinates (s, t) of the midpoint, i.e. z = s + t * basis.
// Not certified; used to pick candidate lattice points.
template <RingId R>
std::array<BigFloat, 2> midpoint_lattice_coords(const ComplexAP& z);

}  // namespace eisencf

#endif  // EISENCF_COMPLEX_AP_HPP_
