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

#include "eisencf/complex_ap.hpp"

#include <cstdlib>
#include <utility>

#include "eisencf/errors.hpp"

namespace eisencf {

BigFloat::BigFloat(mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(mpfr_prec_t bits, double value) {
  mpfr_init2(value_, bits);
  mpfr_set_d(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

std::string BigFloat::to_string(int digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", digits - 1, value_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

double Interval::mid_double() const {
  BigFloat m(hi.precision());
  mpfr_add(m.get(), lo.get(), hi.get(), MPFR_RNDN);
  mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
  return m.to_double();
}

double Interval::width_double() const {
  BigFloat w(64);
  mpfr_sub(w.get(), hi.get(), lo.get(), MPFR_RNDU);
  return w.to_double(MPFR_RNDU);
}

bool Interval::contains(double v) const {
  return mpfr_cmp_d(lo.get(), v) <= 0 && mpfr_cmp_d(hi.get(), v) >= 0;
}

Interval reciprocal(const Interval& x) {
  if (mpfr_sgn(x.lo.get()) <= 0) {
    throw PrecisionInsufficient("interval reciprocal: lower bound is not positive");
  }
  Interval out{BigFloat(x.lo.precision()), BigFloat(x.hi.precision())};
  mpfr_ui_div(out.lo.get(), 1, x.hi.get(), MPFR_RNDD);
  mpfr_ui_div(out.hi.get(), 1, x.lo.get(), MPFR_RNDU);
  return out;
}

Interval sqrt(const Interval& x) {
  Interval out{BigFloat(x.lo.precision()), BigFloat(x.hi.precision())};
  if (mpfr_sgn(x.lo.get()) <= 0) {
    mpfr_set_zero(out.lo.get(), 1);
  } else {
    mpfr_sqrt(out.lo.get(), x.lo.get(), MPFR_RNDD);
  }
  mpfr_sqrt(out.hi.get(), x.hi.get(), MPFR_RNDU);
  return out;
}

namespace {

constexpr mpfr_prec_t kRad = ComplexAP::kRadiusBits;

BigFloat abs_up(const BigFloat& re, const BigFloat& im) {
  BigFloat r(kRad);
  mpfr_hypot(r.get(), re.get(), im.get(), MPFR_RNDU);
  return r;
}

BigFloat abs_down(const BigFloat& re, const BigFloat& im, mpfr_prec_t bits) {
  BigFloat r(bits);
  mpfr_hypot(r.get(), re.get(), im.get(), MPFR_RNDD);
  return r;
}

// rad += magnitude * 2^(guard - bits), rounded up.
void add_slack(BigFloat& rad, const BigFloat& magnitude, int bits) {
  BigFloat s(kRad);
  mpfr_mul_2si(s.get(), magnitude.get(), ComplexAP::kGuardBits - bits, MPFR_RNDU);
  mpfr_add(rad.get(), rad.get(), s.get(), MPFR_RNDU);
}

}  // namespace

ComplexAP::ComplexAP(int precision_bits)
    : re_(precision_bits), im_(precision_bits), radius_(kRad),
      precision_bits_(precision_bits) {}

ComplexAP::ComplexAP(BigFloat re, BigFloat im, BigFloat radius, int precision_bits)
    : re_(std::move(re)), im_(std::move(im)), radius_(std::move(radius)),
      precision_bits_(precision_bits) {}

ComplexAP ComplexAP::from_rationals(const BigRational& re, const BigRational& im,
                                    int precision_bits) {
  ComplexAP z(precision_bits);
  int inexact = mpfr_set_q(z.re_.get(), re.get_mpq_t(), MPFR_RNDN);
  inexact |= mpfr_set_q(z.im_.get(), im.get_mpq_t(), MPFR_RNDN);
  if (inexact != 0) add_slack(z.radius_, abs_up(z.re_, z.im_), precision_bits);
  return z;
}

ComplexAP ComplexAP::from_lattice_rationals(const BigRational& s, const BigRational& t,
                                            bool eisenstein, int precision_bits) {
  if (!eisenstein) return from_rationals(s, t, precision_bits);
  ComplexAP z(precision_bits);
  BigRational re = s + t / 2;
  int inexact = mpfr_set_q(z.re_.get(), re.get_mpq_t(), MPFR_RNDN);
  if (sgn(t) != 0) {
    // im = t * sqrt(3) / 2: three roundings, relative error below 4 ulp.
    BigFloat root3(precision_bits);
    mpfr_sqrt_ui(root3.get(), 3, MPFR_RNDN);
    mpfr_set_q(z.im_.get(), t.get_mpq_t(), MPFR_RNDN);
    mpfr_mul(z.im_.get(), z.im_.get(), root3.get(), MPFR_RNDN);
    mpfr_div_2ui(z.im_.get(), z.im_.get(), 1, MPFR_RNDN);
    inexact = 1;
  }
  if (inexact != 0) add_slack(z.radius_, abs_up(z.re_, z.im_), precision_bits);
  return z;
}

namespace {

int common_bits(const ComplexAP& a, const ComplexAP& b) {
  return std::max(a.precision_bits(), b.precision_bits());
}

}  // namespace

ComplexAP operator+(const ComplexAP& a, const ComplexAP& b) {
  const int bits = common_bits(a, b);
  BigFloat re(bits), im(bits), rad(kRad);
  mpfr_add(re.get(), a.re_.get(), b.re_.get(), MPFR_RNDN);
  mpfr_add(im.get(), a.im_.get(), b.im_.get(), MPFR_RNDN);
  mpfr_add(rad.get(), a.radius_.get(), b.radius_.get(), MPFR_RNDU);
  add_slack(rad, abs_up(re, im), bits);
  return ComplexAP(std::move(re), std::move(im), std::move(rad), bits);
}

ComplexAP operator-(const ComplexAP& a, const ComplexAP& b) {
  const int bits = common_bits(a, b);
  BigFloat re(bits), im(bits), rad(kRad);
  mpfr_sub(re.get(), a.re_.get(), b.re_.get(), MPFR_RNDN);
  mpfr_sub(im.get(), a.im_.get(), b.im_.get(), MPFR_RNDN);
  mpfr_add(rad.get(), a.radius_.get(), b.radius_.get(), MPFR_RNDU);
  add_slack(rad, abs_up(re, im), bits);
  return ComplexAP(std::move(re), std::move(im), std::move(rad), bits);
}

ComplexAP operator*(const ComplexAP& a, const ComplexAP& b) {
  const int bits = common_bits(a, b);
  BigFloat re(bits), im(bits);
  // Fused forms: one rounding per component.
  mpfr_fmms(re.get(), a.re_.get(), b.re_.get(), a.im_.get(), b.im_.get(), MPFR_RNDN);
  mpfr_fmma(im.get(), a.re_.get(), b.im_.get(), a.im_.get(), b.re_.get(), MPFR_RNDN);

  // |a| rb + |b| ra + ra rb
  BigFloat rad(kRad), term(kRad);
  mpfr_mul(rad.get(), abs_up(a.re_, a.im_).get(), b.radius_.get(), MPFR_RNDU);
  mpfr_mul(term.get(), abs_up(b.re_, b.im_).get(), a.radius_.get(), MPFR_RNDU);
  mpfr_add(rad.get(), rad.get(), term.get(), MPFR_RNDU);
  mpfr_mul(term.get(), a.radius_.get(), b.radius_.get(), MPFR_RNDU);
  mpfr_add(rad.get(), rad.get(), term.get(), MPFR_RNDU);
  add_slack(rad, abs_up(re, im), bits);
  return ComplexAP(std::move(re), std::move(im), std::move(rad), bits);
}

ComplexAP ComplexAP::reciprocal() const {
  const int bits = precision_bits_;
  BigFloat lo = abs_down(re_, im_, kRad);
  BigFloat gap(kRad);
  mpfr_sub(gap.get(), lo.get(), radius_.get(), MPFR_RNDD);
  if (mpfr_sgn(gap.get()) <= 0) {
    throw PrecisionInsufficient("reciprocal of a ball that may contain zero");
  }

  BigFloat n(bits), re(bits), im(bits);
  mpfr_fmma(n.get(), re_.get(), re_.get(), im_.get(), im_.get(), MPFR_RNDN);
  mpfr_div(re.get(), re_.get(), n.get(), MPFR_RNDN);
  mpfr_div(im.get(), im_.get(), n.get(), MPFR_RNDN);
  mpfr_neg(im.get(), im.get(), MPFR_RNDN);

  // |1/(m+e) - 1/m| <= r / (|m| (|m| - r))
  BigFloat rad(kRad), den(kRad);
  mpfr_mul(den.get(), lo.get(), gap.get(), MPFR_RNDD);
  mpfr_div(rad.get(), radius_.get(), den.get(), MPFR_RNDU);
  add_slack(rad, abs_up(re, im), bits);
  return ComplexAP(std::move(re), std::move(im), std::move(rad), bits);
}

Interval ComplexAP::abs() const {
  const int bits = precision_bits_;
  Interval out{BigFloat(bits), BigFloat(bits)};
  mpfr_hypot(out.lo.get(), re_.get(), im_.get(), MPFR_RNDD);
  mpfr_sub(out.lo.get(), out.lo.get(), radius_.get(), MPFR_RNDD);
  if (mpfr_sgn(out.lo.get()) < 0) mpfr_set_zero(out.lo.get(), 1);
  mpfr_hypot(out.hi.get(), re_.get(), im_.get(), MPFR_RNDU);
  mpfr_add(out.hi.get(), out.hi.get(), radius_.get(), MPFR_RNDU);
  return out;
}

Interval ComplexAP::abs2() const {
  Interval a = abs();
  mpfr_sqr(a.lo.get(), a.lo.get(), MPFR_RNDD);
  mpfr_sqr(a.hi.get(), a.hi.get(), MPFR_RNDU);
  return a;
}

bool ComplexAP::certainly_nonzero() const {
  BigFloat lo = abs_down(re_, im_, kRad);
  return mpfr_cmp(lo.get(), radius_.get()) > 0;
}

template <RingId R>
std::array<BigFloat, 2> midpoint_lattice_coords(const ComplexAP& z) {
  const int bits = z.precision_bits();
  BigFloat s(bits), t(bits);
  if constexpr (R == RingId::kEisenstein) {
    // t = 2 im / sqrt(3), s = re - t / 2
    BigFloat root3(bits);
    mpfr_sqrt_ui(root3.get(), 3, MPFR_RNDN);
    mpfr_mul_2ui(t.get(), z.im().get(), 1, MPFR_RNDN);
    mpfr_div(t.get(), t.get(), root3.get(), MPFR_RNDN);
    mpfr_div_2ui(s.get(), t.get(), 1, MPFR_RNDN);
    mpfr_sub(s.get(), z.re().get(), s.get(), MPFR_RNDN);
  } else {
    mpfr_set(s.get(), z.re().get(), MPFR_RNDN);
    mpfr_set(t.get(), z.im().get(), MPFR_RNDN);
  }
  return {std::move(s), std::move(t)};
}

template std::array<BigFloat, 2> midpoint_lattice_coords<RingId::kEisenstein>(
    const ComplexAP&);
template std::array<BigFloat, 2> midpoint_lattice_coords<RingId::kGaussian>(
    const ComplexAP&);

}  // namespace eisencf
