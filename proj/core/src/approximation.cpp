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

#include "eisencf/approximation.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <string>

#include "eisencf/invariants.hpp"

namespace eisencf {

namespace {

template <RingId R>
ApproxVerdict<R> verdict_with_oracle(const ComplexAP& z, const Expansion<R>& e,
                                     const QPair<R>& qp, std::size_t n,
                                     const RivalOracle<R>& oracle,
                                     const LatticeShells<R>& shells, std::int64_t guard) {
  if (n >= e.last_index()) {
    throw IndexOutOfRange("verification needs z_{n+1}; n = " + std::to_string(n));
  }
  const auto k = static_cast<std::ptrdiff_t>(n);
  ApproxVerdict<R> v;
  v.n = n;
  v.a_n = e.a[n];
  v.qn_norm = norm(qp.q(k));
  if (v.qn_norm > guard || v.qn_norm > shells.max_norm()) {
    throw EnumerationTooLarge("norm(q_" + std::to_string(n) + ") = " + v.qn_norm.get_str() +
                              " exceeds the enumeration limit");
  }
  const int bits = z.precision_bits();
  const Interval res =
      (ComplexAP::from_element(qp.q(k), bits) * z - ComplexAP::from_element(qp.p(k), bits))
          .abs();
  if (mpfr_sgn(res.lo.get()) <= 0) {
    throw PrecisionInsufficient("residual of index " + std::to_string(n) +
                                " is not certified nonzero");
  }
  RivalMinimum<R> rival = oracle.minimum(v.qn_norm.get_si());

  Interval ratio{BigFloat(bits), BigFloat(bits)};
  mpfr_div(ratio.lo.get(), rival.value.lo.get(), res.hi.get(), MPFR_RNDD);
  mpfr_div(ratio.hi.get(), rival.value.hi.get(), res.lo.get(), MPFR_RNDU);
  v.ratio = ratio.mid_double();
  v.ratio_error = ratio.width_double() / 2;
  if (v.ratio_error > kMaxRatioUncertainty) {
    throw PrecisionInsufficient("ratio at index " + std::to_string(n) +
                                " is uncertain by " + std::to_string(v.ratio_error));
  }
  v.residual = res.mid_double();
  v.best_rival = rival.value.mid_double();
  v.witness_q = rival.witness_q;
  v.witness_p = rival.witness_p;
  v.q_count = rival.q_count;
  v.tie_affected = e.tie_at_or_before(n);
  return v;
}

template <RingId R>
std::vector<std::size_t> indices_within(const Expansion<R>& e, const QPair<R>& qp,
                                        std::int64_t max_qnorm) {
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n < e.last_index(); ++n) {
    if (norm(qp.q(static_cast<std::ptrdiff_t>(n))) <= max_qnorm) out.push_back(n);
  }
  return out;
}

template <RingId R>
VerifyRun<R> verify_expansion(const ComplexAP& z, Expansion<R> e, const VerifyConfig& config,
                              const LatticeShells<R>* shells) {
  const QPair<R> qp = q_pair<R>(e.a);
  const auto indices = indices_within(e, qp, std::min(config.max_qnorm, config.guard));
  VerifyRun<R> run;
  run.precision_bits = z.precision_bits();
  if (!indices.empty()) {
    const std::int64_t needed = norm(qp.q(static_cast<std::ptrdiff_t>(indices.back()))).get_si();
    std::unique_ptr<LatticeShells<R>> local;
    if (shells == nullptr || shells->max_norm() < needed) {
      local = std::make_unique<LatticeShells<R>>(needed);
      shells = local.get();
    }
    const RivalOracle<R> oracle(z, *shells, RivalWeight::kPlain);
    for (std::size_t n : indices) {
      run.verdicts.push_back(verdict_with_oracle(z, e, qp, n, oracle, *shells, config.guard));
    }
  }
  run.expansion = std::move(e);
  return run;
}

}  // namespace

template <RingId R>
ApproxVerdict<R> verify_best_approx(const ComplexAP& z, const Expansion<R>& e,
                                    const QPair<R>& qp, std::size_t n,
                                    const LatticeShells<R>& shells, std::int64_t guard) {
  const RivalOracle<R> oracle(z, shells, RivalWeight::kPlain);
  return verdict_with_oracle(z, e, qp, n, oracle, shells, guard);
}

template <RingId R>
VerifyRun<R> verify_all(const ComplexSource& source, const VerifyConfig& config,
                        const LatticeShells<R>* shells) {
  return with_precision_retry(config.expand.precision_bits, kMaxPrecisionBits, [&](int bits) {
    ExpandOptions opts = config.expand;
    opts.precision_bits = bits;
    opts.qnorm_limit = BigInt(std::min(config.max_qnorm, config.guard));
    ComplexAP z = source(bits);
    Expansion<R> e = expand<R>(z, opts);
    return verify_expansion<R>(z, std::move(e), config, shells);
  });
}

template <RingId R>
VerifyRun<R> verify_all(const RingRational<R>& z, const VerifyConfig& config,
                        const LatticeShells<R>* shells) {
  ExpandOptions opts = config.expand;
  opts.qnorm_limit = BigInt(std::min(config.max_qnorm, config.guard));
  const Expansion<R> e = expand(z, opts);
  return with_precision_retry(config.expand.precision_bits, kMaxPrecisionBits, [&](int bits) {
    return verify_expansion<R>(ComplexAP::from_ring_rational(z, bits), e, config, shells);
  });
}

namespace {

template <RingId R>
ApproxVerdict<R> verify_single(const ComplexAP& z, const Expansion<R>& e, std::size_t n,
                               const VerifyConfig& config) {
  if (n >= e.last_index()) {
    throw IndexOutOfRange("expansion stops at index " + std::to_string(e.last_index()) +
                          "; cannot verify n = " + std::to_string(n));
  }
  const QPair<R> qp = q_pair<R>(e.a);
  const BigInt qn = norm(qp.q(static_cast<std::ptrdiff_t>(n)));
  if (qn > config.guard) {
    throw EnumerationTooLarge("norm(q_" + std::to_string(n) + ") = " + qn.get_str() +
                              " exceeds the enumeration guard");
  }
  const LatticeShells<R> shells(qn.get_si());
  return verify_best_approx(z, e, qp, n, shells, config.guard);
}

}  // namespace

template <RingId R>
ApproxVerdict<R> verify_best_approx(const ComplexSource& source, std::size_t n,
                                    const VerifyConfig& config) {
  return with_precision_retry(config.expand.precision_bits, kMaxPrecisionBits, [&](int bits) {
    ExpandOptions opts = config.expand;
    opts.precision_bits = bits;
    opts.max_steps = std::max(opts.max_steps, n + 1);
    opts.qnorm_limit.reset();
    ComplexAP z = source(bits);
    const Expansion<R> e = expand<R>(z, opts);
    return verify_single(z, e, n, config);
  });
}

template <RingId R>
ApproxVerdict<R> verify_best_approx(const RingRational<R>& z, std::size_t n,
                                    const VerifyConfig& config) {
  ExpandOptions opts = config.expand;
  opts.max_steps = std::max(opts.max_steps, n + 1);
  opts.qnorm_limit.reset();
  const Expansion<R> e = expand(z, opts);
  return with_precision_retry(config.expand.precision_bits, kMaxPrecisionBits, [&](int bits) {
    return verify_single(ComplexAP::from_ring_rational(z, bits), e, n, config);
  });
}

BigRational delta_bound(const BigRational& m) {
  if (sgn(m) < 0 || m * m < 3) throw DomainError("delta_bound needs M >= sqrt(3)");
  const BigRational s = m + 2;
  BigRational out = 1 / (2 * s * s);
  out.canonicalize();
  return out;
}

BigRational delta_bound_from_square(const BigRational& m_squared) {
  if (m_squared < 3) throw DomainError("delta_bound needs M >= sqrt(3)");
  const BigInt& num = m_squared.get_num();
  const BigInt& den = m_squared.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
    return delta_bound(BigRational(sqrt(num), sqrt(den)));
  }
  // sqrt(n / d) = sqrt(n d) / d < (floor(sqrt(n d 4^k)) + 1) / (d 2^k)
  constexpr unsigned kFractionBits = 96;
  BigInt scaled = num * den;
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 2 * kFractionBits);
  BigInt root = sqrt(scaled) + 1;
  BigInt scale = den;
  mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), kFractionBits);
  BigRational m_upper(root, scale);
  m_upper.canonicalize();
  const BigRational s = m_upper + 2;
  BigRational out = 1 / (2 * s * s);
  out.canonicalize();
  return out;
}

template <RingId R>
bool growth_bound_check(const QPair<R>& qp, const BigRational& m_squared) {
  for (std::ptrdiff_t n = 1; n <= qp.last_index(); ++n) {
    const BigInt prev = norm(qp.q(n - 1));
    // norm(q_n) <= (M^2 + 1 + 2M) norm(q_{n-1})
    const BigRational lhs = BigRational(norm(qp.q(n))) - (m_squared + 1) * prev;
    if (!le_times_sqrt(lhs, BigRational(2 * prev), m_squared)) return false;
  }
  return true;
}

template <RingId R>
Interval normalized_residual(const Expansion<R>& e, const QPair<R>& qp, std::size_t n) {
  const Residual r = residual(e, qp, n);
  const BigInt qn = norm(qp.q(static_cast<std::ptrdiff_t>(n)));
  if (r.exact) return sqrt_of_rational(r.direct_sq * qn, kDefaultPrecisionBits);
  const int bits = e.precision_bits;
  const Interval root = sqrt_of_rational(BigRational(qn), bits);
  Interval out{BigFloat(bits), BigFloat(bits)};
  mpfr_mul(out.lo.get(), r.direct.lo.get(), root.lo.get(), MPFR_RNDD);
  mpfr_mul(out.hi.get(), r.direct.hi.get(), root.hi.get(), MPFR_RNDU);
  return out;
}

template <RingId R>
BadApproxVerdict<R> classify_bad_approx(const ComplexSource& source,
                                        const ClassifyConfig& config,
                                        const LatticeShells<R>* shells) {
  if constexpr (R == RingId::kGaussian) {
    throw DomainError("delta = 1 / (2 (M + 2)^2) rests on the constant 1/2, which is "
                      "established for the Eisenstein ring only");
  }
  if (config.steps < 8) throw DomainError("classification needs at least 8 steps");
  if (config.rival_norm_bound > config.guard) {
    throw EnumerationTooLarge("rival norm bound " + std::to_string(config.rival_norm_bound) +
                              " exceeds the enumeration guard");
  }
  return with_precision_retry(config.precision_bits, kMaxPrecisionBits, [&](int bits) {
    const ComplexAP z = source(bits);
    // Run past the first q_k beyond the rival bound and one step more, so
    // that M covers every quotient the bound argument touches.
    ExpandOptions probe;
    probe.precision_bits = bits;
    probe.max_steps = 16 * kDefaultMaxSteps;
    probe.qnorm_limit = BigInt(config.rival_norm_bound);
    const std::size_t k = expand<R>(z, probe).last_index();
    ExpandOptions opts;
    opts.precision_bits = bits;
    opts.max_steps = std::max(config.steps, k + 1);
    const Expansion<R> e = expand<R>(z, opts);
    const QPair<R> qp = q_pair<R>(e.a);

    BadApproxVerdict<R> v;
    v.precision_bits = bits;
    v.steps_used = e.last_index();
    BigInt running = 0;
    for (std::size_t n = 1; n <= e.last_index(); ++n) {
      running = std::max(running, BigInt(norm(e.a[n])));
      if (n < e.last_index() && !v.jump_index) {
        const BigRational prefix_delta = delta_bound_from_square(BigRational(running));
        const Interval nu = normalized_residual(e, qp, n);
        if (mpfr_cmp_q(nu.hi.get(), prefix_delta.get_mpq_t()) < 0) {
          v.jump_index = n;
          v.jump_normalized_residual = nu.mid_double();
          v.jump_delta = prefix_delta;
        }
      }
    }
    v.max_quotient_norm = running;
    v.max_partial_quotient = std::sqrt(running.get_d());
    v.delta = delta_bound_from_square(BigRational(running));

    std::unique_ptr<LatticeShells<R>> local;
    if (shells == nullptr || shells->max_norm() < config.rival_norm_bound) {
      local = std::make_unique<LatticeShells<R>>(config.rival_norm_bound);
      shells = local.get();
    }
    const RivalOracle<R> oracle(z, *shells, RivalWeight::kNormalized);
    const RivalMinimum<R> inf = oracle.minimum(config.rival_norm_bound);
    v.empirical_inf = inf.value.mid_double();
    v.empirical_inf_error = inf.value.width_double() / 2;
    if (v.empirical_inf_error > kMaxRatioUncertainty) {
      throw PrecisionInsufficient("empirical infimum is not resolved at " +
                                  std::to_string(bits) + " bits");
    }
    v.witness_q = inf.witness_q;
    v.witness_p = inf.witness_p;
    v.q_count = inf.q_count;
    v.classification = v.jump_index ? Classification::kUnboundedSuspected
                                    : Classification::kBoundedQuotients;
    return v;
  });
}

template <RingId R>
BadApproxVerdict<R> classify_bad_approx(const RingRational<R>& z, const ClassifyConfig&) {
  throw DomainError("z = " + to_string(z) +
                    " lies in the quotient field; bad approximability is defined for z "
                    "outside it");
}

#define EISENCF_INSTANTIATE(R)                                                              \
  template ApproxVerdict<R> verify_best_approx<R>(const ComplexAP&, const Expansion<R>&,    \
                                                  const QPair<R>&, std::size_t,             \
                                                  const LatticeShells<R>&, std::int64_t);   \
  template VerifyRun<R> verify_all<R>(const ComplexSource&, const VerifyConfig&,            \
                                      const LatticeShells<R>*);                             \
  template VerifyRun<R> verify_all<R>(const RingRational<R>&, const VerifyConfig&,          \
                                      const LatticeShells<R>*);                             \
  template ApproxVerdict<R> verify_best_approx<R>(const ComplexSource&, std::size_t,        \
                                                  const VerifyConfig&);                     \
  template ApproxVerdict<R> verify_best_approx<R>(const RingRational<R>&, std::size_t,      \
                                                  const VerifyConfig&);                     \
  template bool growth_bound_check<R>(const QPair<R>&, const BigRational&);                 \
  template Interval normalized_residual<R>(const Expansion<R>&, const QPair<R>&,            \
                                           std::size_t);                                    \
  template BadApproxVerdict<R> classify_bad_approx<R>(const ComplexSource&,                 \
                                                      const ClassifyConfig&,                \
                                                      const LatticeShells<R>*);             \
  template BadApproxVerdict<R> classify_bad_approx<R>(const RingRational<R>&,               \
                                                      const ClassifyConfig&);

EISENCF_INSTANTIATE(RingId::kEisenstein)
EISENCF_INSTANTIATE(RingId::kGaussian)

#undef EISENCF_INSTANTIATE

}  // namespace eisencf
