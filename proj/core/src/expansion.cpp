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

#include "eisencf/expansion.hpp"

#include <cmath>
#include <string>

#include "eisencf/nearest.hpp"

namespace eisencf {

namespace {

template <RingId R>
class DenominatorTracker {
 public:
  void push(const Element<R>& a) {
    Element<R> next = started_ ? a * q_ + prev_ : Element<R>::one();
    started_ = true;
    prev_ = std::move(q_);
    q_ = std::move(next);
  }
  const Element<R>& current() const { return q_; }

 private:
  bool started_ = false;
  Element<R> q_ = Element<R>::zero();
  Element<R> prev_ = Element<R>::zero();
};

template <RingId R>
bool over_limit(const DenominatorTracker<R>& q, const ExpandOptions& options) {
  return options.qnorm_limit && norm(q.current()) > *options.qnorm_limit;
}

}  // namespace

template <RingId R>
Expansion<R> expand(const RingRational<R>& z, const ExpandOptions& options) {
  Expansion<R> e;
  e.mode = Mode::kExact;
  DenominatorTracker<R> q;
  RingRational<R> current = z;
  for (std::size_t n = 0;; ++n) {
    NearestResult<R> f = nearest(current);
    if (f.tie) e.tie_steps.push_back(n);
    e.a.push_back(f.point);
    q.push(f.point);
    const bool done = current.is_integral();
    e.exact_iterates.push_back(current);
    if (done) {
      e.terminated = true;
      break;
    }
    if (n >= options.max_steps || over_limit(q, options)) break;
    current = current.minus_element(f.point).reciprocal();
  }
  return e;
}

template <RingId R>
Expansion<R> expand(const ComplexAP& z, const ExpandOptions& options) {
  if (z.precision_bits() < kMinCertifiedBits) {
    throw DomainError("certified expansion needs at least " +
                      std::to_string(kMinCertifiedBits) + " bits");
  }
  Expansion<R> e;
  e.mode = Mode::kCertified;
  e.precision_bits = z.precision_bits();
  DenominatorTracker<R> q;
  ComplexAP current = z;
  for (std::size_t n = 0;; ++n) {
    NearestResult<R> f = nearest<R>(current);
    ComplexAP remainder = current - ComplexAP::from_element(f.point, z.precision_bits());
    if (!remainder.certainly_nonzero()) {
      throw PrecisionInsufficient("cannot certify z_" + std::to_string(n) +
                                  " is not a lattice point");
    }
    e.a.push_back(f.point);
    q.push(f.point);
    e.approx_iterates.push_back(std::move(current));
    if (n >= options.max_steps || over_limit(q, options)) break;
    current = remainder.reciprocal();
  }
  return e;
}

template <RingId R>
CertifiedRun<R> expand_with_retry(const ComplexSource& source, const ExpandOptions& options,
                                  int max_bits) {
  return with_precision_retry(options.precision_bits, max_bits, [&](int bits) {
    ExpandOptions opts = options;
    opts.precision_bits = bits;
    ComplexAP z = source(bits);
    Expansion<R> e = expand<R>(z, opts);
    return CertifiedRun<R>{std::move(z), std::move(e)};
  });
}

template <RingId R>
QPair<R> q_pair(std::span<const Element<R>> a) {
  if (a.empty()) throw DomainError("q_pair needs at least one partial quotient");
  QPair<R> qp;
  qp.p_seq.reserve(a.size() + 1);
  qp.q_seq.reserve(a.size() + 1);
  qp.p_seq.push_back(Element<R>::one());
  qp.p_seq.push_back(a[0]);
  qp.q_seq.push_back(Element<R>::zero());
  qp.q_seq.push_back(Element<R>::one());
  for (std::size_t k = 1; k < a.size(); ++k) {
    const std::size_t i = k + 1;
    qp.p_seq.push_back(a[k] * qp.p_seq[i - 1] + qp.p_seq[i - 2]);
    qp.q_seq.push_back(a[k] * qp.q_seq[i - 1] + qp.q_seq[i - 2]);
  }
  return qp;
}

template <RingId R>
RingRational<R> fold_up(std::span<const Element<R>> a) {
  QPair<R> qp = q_pair(a);
  const auto m = qp.last_index();
  return RingRational<R>(qp.p(m), qp.q(m));
}

template <RingId R>
RingRational<R> convergent(const QPair<R>& qp, std::size_t n) {
  if (static_cast<std::ptrdiff_t>(n) > qp.last_index()) {
    throw IndexOutOfRange("convergent index " + std::to_string(n) + " beyond expansion");
  }
  const auto k = static_cast<std::ptrdiff_t>(n);
  return RingRational<R>(qp.p(k), qp.q(k));
}

template <RingId R>
RingRational<R> convergent(const Expansion<R>& e, std::size_t n) {
  if (n > e.last_index()) {
    throw IndexOutOfRange("convergent index " + std::to_string(n) + " beyond expansion");
  }
  return convergent(q_pair<R>(std::span<const Element<R>>(e.a.data(), n + 1)), n);
}

Interval sqrt_of_rational(const BigRational& v, int precision_bits) {
  Interval out{BigFloat(precision_bits), BigFloat(precision_bits)};
  mpfr_set_q(out.lo.get(), v.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(out.hi.get(), v.get_mpq_t(), MPFR_RNDU);
  if (mpfr_sgn(out.lo.get()) < 0) mpfr_set_zero(out.lo.get(), 1);
  mpfr_sqrt(out.lo.get(), out.lo.get(), MPFR_RNDD);
  mpfr_sqrt(out.hi.get(), out.hi.get(), MPFR_RNDU);
  return out;
}

bool Residual::agrees(double tol) const {
  if (exact) return direct_sq == identity_sq;
  BigFloat spread(direct.hi.precision()), other(direct.hi.precision());
  mpfr_sub(spread.get(), direct.hi.get(), identity.lo.get(), MPFR_RNDU);
  mpfr_sub(other.get(), identity.hi.get(), direct.lo.get(), MPFR_RNDU);
  if (mpfr_cmp(other.get(), spread.get()) > 0) mpfr_swap(spread.get(), other.get());
  return mpfr_cmp_d(spread.get(), tol) <= 0;
}

template <RingId R>
Residual residual(const Expansion<R>& e, const QPair<R>& qp, std::size_t n) {
  if (n >= e.last_index() || static_cast<std::ptrdiff_t>(n) > qp.last_index()) {
    throw IndexOutOfRange("residual needs z_{n+1}; n = " + std::to_string(n));
  }
  const auto k = static_cast<std::ptrdiff_t>(n);
  const Element<R>& pn = qp.p(k);
  const Element<R>& qn = qp.q(k);
  const Element<R>& qprev = qp.q(k - 1);
  Residual out;
  if (e.mode == Mode::kExact) {
    const RingRational<R>& z = e.exact_iterates.front();
    const RingRational<R>& next = e.exact_iterates[n + 1];
    out.exact = true;
    out.direct_sq = BigRational(norm(qn * z.num() - pn * z.den()), norm(z.den()));
    out.direct_sq.canonicalize();
    out.identity_sq =
        BigRational(norm(next.den()), norm(next.num() * qn + next.den() * qprev));
    out.identity_sq.canonicalize();
    out.direct = sqrt_of_rational(out.direct_sq, kDefaultPrecisionBits);
    out.identity = sqrt_of_rational(out.identity_sq, kDefaultPrecisionBits);
    return out;
  }
  const int bits = e.precision_bits;
  const ComplexAP& z = e.approx_iterates.front();
  const ComplexAP& next = e.approx_iterates[n + 1];
  out.direct =
      (ComplexAP::from_element(qn, bits) * z - ComplexAP::from_element(pn, bits)).abs();
  out.identity = reciprocal(
      (next * ComplexAP::from_element(qn, bits) + ComplexAP::from_element(qprev, bits)).abs());
  return out;
}

template <RingId R>
RatioReport<R> ratio_report(const QPair<R>& qp) {
  RatioReport<R> rep;
  const std::ptrdiff_t last = qp.last_index();
  for (std::ptrdiff_t n = 1; n <= last; ++n) {
    rep.r.emplace_back(qp.q(n - 1), qp.q(n));
    BigRational abs2(norm(qp.q(n - 1)), norm(qp.q(n)));
    abs2.canonicalize();
    rep.r_abs.push_back(std::sqrt(abs2.get_d()));
    rep.r_abs2.push_back(std::move(abs2));
  }
  for (std::ptrdiff_t n = 1; n + 1 <= last; ++n) {
    const BigInt next = norm(qp.q(n + 1));
    const BigInt prev = norm(qp.q(n - 1));
    BigRational skip(next, prev);
    skip.canonicalize();
    rep.skip2.push_back(std::sqrt(skip.get_d()));
    rep.skip2_abs2.push_back(std::move(skip));
    if (4 * next < 9 * prev) rep.growth_violations.push_back(static_cast<std::size_t>(n));

    // |r_n|^2 <= 2/3  <=>  3 norm(q_{n-1}) <= 2 norm(q_n)
    const BigInt cur = norm(qp.q(n));
    const bool first = 3 * prev <= 2 * cur;
    const bool second = 3 * cur <= 2 * next;
    if (!first && !second) rep.alternation_violations.push_back(static_cast<std::size_t>(n));
  }
  return rep;
}

#define EISENCF_INSTANTIATE(R)                                                              \
  template Expansion<R> expand<R>(const RingRational<R>&, const ExpandOptions&);           \
  template Expansion<R> expand<R>(const ComplexAP&, const ExpandOptions&);                 \
  template CertifiedRun<R> expand_with_retry<R>(const ComplexSource&, const ExpandOptions&, \
                                                int);                                       \
  template QPair<R> q_pair<R>(std::span<const Element<R>>);                                \
  template RingRational<R> fold_up<R>(std::span<const Element<R>>);                        \
  template RingRational<R> convergent<R>(const Expansion<R>&, std::size_t);                \
  template RingRational<R> convergent<R>(const QPair<R>&, std::size_t);                    \
  template Residual residual<R>(const Expansion<R>&, const QPair<R>&, std::size_t);        \
  template RatioReport<R> ratio_report<R>(const QPair<R>&);

EISENCF_INSTANTIATE(RingId::kEisenstein)
EISENCF_INSTANTIATE(RingId::kGaussian)

#undef EISENCF_INSTANTIATE

}  // namespace eisencf
