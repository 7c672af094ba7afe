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

#include "eisencf/invariants.hpp"

namespace eisencf {

namespace {

template <RingId R>
int inverse_cover2() {
  return RingTraits<R>::kCoverDen / RingTraits<R>::kCoverNum;
}

}  // namespace

bool le_times_sqrt(const BigRational& lhs, const BigRational& c, const BigRational& v) {
  if (sgn(lhs) <= 0) return true;
  return lhs * lhs <= c * c * v;
}

void InvariantReport::record(const std::string& check, std::size_t n, bool holds) {
  ++checks[check];
  if (!holds) violations.push_back(Violation{check, n});
}

template <RingId R>
bool determinant_identity(const QPair<R>& qp, std::ptrdiff_t n) {
  Element<R> det = qp.p(n) * qp.q(n - 1) - qp.q(n) * qp.p(n - 1);
  // (-1)^(n-1): -1 for even n, +1 for odd n.
  const Element<R> expected(BigInt(n % 2 == 0 ? -1 : 1), BigInt(0));
  return det == expected;
}

template <RingId R>
bool strict_denominator_growth(const QPair<R>& qp, std::ptrdiff_t n) {
  return norm(qp.q(n)) < norm(qp.q(n + 1));
}

template <RingId R>
bool skip_two_growth(const QPair<R>& qp, std::ptrdiff_t n) {
  return 4 * norm(qp.q(n + 1)) >= 9 * norm(qp.q(n - 1));
}

template <RingId R>
bool ratio_alternation(const QPair<R>& qp, std::ptrdiff_t n) {
  const BigInt prev = norm(qp.q(n - 1));
  const BigInt cur = norm(qp.q(n));
  const BigInt next = norm(qp.q(n + 1));
  return 3 * prev <= 2 * cur || 3 * cur <= 2 * next;
}

template <RingId R>
bool iterate_lower_bound(const Expansion<R>& e, std::size_t n) {
  const int bound = inverse_cover2<R>();
  if (e.mode == Mode::kExact) {
    const RingRational<R>& z = e.exact_iterates.at(n);
    return norm(z.num()) >= bound * norm(z.den());
  }
  Interval a2 = e.approx_iterates.at(n).abs2();
  return mpfr_cmp_si(a2.hi.get(), bound) >= 0;
}

template <RingId R>
bool quotient_lower_bound(const Expansion<R>& e, std::size_t n) {
  return norm(e.a.at(n)) >= inverse_cover2<R>();
}

template <RingId R>
bool sandwich(const Expansion<R>& e, const QPair<R>& qp, std::size_t n) {
  const auto k = static_cast<std::ptrdiff_t>(n);
  const BigInt a2 = norm(e.a.at(n + 1));
  if (e.mode == Mode::kExact) {
    const RingRational<R> w =
        e.exact_iterates.at(n + 1) + RingRational<R>(qp.q(k - 1), qp.q(k));
    const BigRational w2 = w.abs2();
    const BigRational a(a2);
    // upper: sqrt(W) <= sqrt(A) + 2  <=>  W - A - 4 <= 4 sqrt(A)
    const bool upper = le_times_sqrt(w2 - a - 4, 4, a);
    // lower: sqrt(A) - 2 <= sqrt(W); trivial when A <= 4
    const bool lower = a <= 4 || le_times_sqrt(a + 4 - w2, 4, a);
    return upper && lower;
  }
  const int bits = e.precision_bits;
  const ComplexAP w =
      e.approx_iterates.at(n + 1) +
      ComplexAP::from_ring_rational(RingRational<R>(qp.q(k - 1), qp.q(k)), bits);
  const Interval w_abs = w.abs();
  const Interval root = sqrt_of_rational(BigRational(a2), bits);
  BigFloat bound(bits);
  mpfr_sub_ui(bound.get(), root.lo.get(), 2, MPFR_RNDD);
  const bool certainly_below = mpfr_cmp(w_abs.hi.get(), bound.get()) < 0;
  mpfr_add_ui(bound.get(), root.hi.get(), 2, MPFR_RNDU);
  const bool certainly_above = mpfr_cmp(w_abs.lo.get(), bound.get()) > 0;
  return !certainly_below && !certainly_above;
}

template <RingId R>
bool mobius_identity(const Expansion<R>& e, const QPair<R>& qp, std::size_t n) {
  if (e.mode != Mode::kExact) throw DomainError("Mobius identity is checked in exact mode");
  const auto k = static_cast<std::ptrdiff_t>(n);
  const RingRational<R>& z = e.exact_iterates.front();
  const RingRational<R>& next = e.exact_iterates.at(n + 1);
  const RingRational<R> lhs =
      z * (RingRational<R>(qp.q(k)) * next + RingRational<R>(qp.q(k - 1)));
  const RingRational<R> rhs = RingRational<R>(qp.p(k)) * next + RingRational<R>(qp.p(k - 1));
  return lhs == rhs;
}

template <RingId R>
bool round_trip(const Expansion<R>& e) {
  if (e.mode != Mode::kExact || !e.terminated) return false;
  return fold_up<R>(e.a) == e.exact_iterates.front();
}

template <RingId R>
InvariantReport check_invariants(const Expansion<R>& e, const QPair<R>& qp,
                                 double residual_tol) {
  InvariantReport rep;
  const std::ptrdiff_t last = qp.last_index();
  const std::size_t m = e.last_index();
  for (std::ptrdiff_t n = 0; n <= last; ++n) {
    const auto un = static_cast<std::size_t>(n);
    rep.record("determinant", un, determinant_identity(qp, n));
    if (n + 1 <= last) rep.record("strict_growth", un, strict_denominator_growth(qp, n));
    if constexpr (R == RingId::kEisenstein) {
      if (n >= 1 && n + 1 <= last) {
        rep.record("skip_two_growth", un, skip_two_growth(qp, n));
        rep.record("ratio_alternation", un, ratio_alternation(qp, n));
      }
    }
  }
  for (std::size_t n = 1; n <= m; ++n) {
    rep.record("iterate_lower_bound", n, iterate_lower_bound(e, n));
    rep.record("quotient_lower_bound", n, quotient_lower_bound(e, n));
  }
  for (std::size_t n = 0; n < m; ++n) {
    rep.record("sandwich", n, sandwich(e, qp, n));
    rep.record("residual_identity", n, residual(e, qp, n).agrees(residual_tol));
    if (e.mode == Mode::kExact) rep.record("mobius", n, mobius_identity(e, qp, n));
  }
  if (e.mode == Mode::kExact && e.terminated) rep.record("round_trip", m, round_trip(e));
  return rep;
}

#define EISENCF_INSTANTIATE(R)                                                         \
  template bool determinant_identity<R>(const QPair<R>&, std::ptrdiff_t);             \
  template bool strict_denominator_growth<R>(const QPair<R>&, std::ptrdiff_t);        \
  template bool skip_two_growth<R>(const QPair<R>&, std::ptrdiff_t);                  \
  template bool ratio_alternation<R>(const QPair<R>&, std::ptrdiff_t);                \
  template bool iterate_lower_bound<R>(const Expansion<R>&, std::size_t);             \
  template bool quotient_lower_bound<R>(const Expansion<R>&, std::size_t);            \
  template bool sandwich<R>(const Expansion<R>&, const QPair<R>&, std::size_t);       \
  template bool mobius_identity<R>(const Expansion<R>&, const QPair<R>&, std::size_t); \
  template bool round_trip<R>(const Expansion<R>&);                                   \
  template InvariantReport check_invariants<R>(const Expansion<R>&, const QPair<R>&, double);

EISENCF_INSTANTIATE(RingId::kEisenstein)
EISENCF_INSTANTIATE(RingId::kGaussian)

#undef EISENCF_INSTANTIATE

}  // namespace eisencf
