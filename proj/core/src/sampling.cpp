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

#include "eisencf/sampling.hpp"

#include <limits>

namespace eisencf {

namespace {

BigInt random_bits_192(std::mt19937_64& rng) {
  BigInt k = 0;
  for (int w = 0; w < 3; ++w) {
    const std::uint64_t word = rng();
    k <<= 32;
    k += static_cast<unsigned long>(word >> 32);
    k <<= 32;
    k += static_cast<unsigned long>(word & 0xffffffffu);
  }
  return k;
}

BigRational centered_dyadic(std::mt19937_64& rng) {
  BigInt denom = 1;
  denom <<= kSampleFractionBits;
  BigRational v(random_bits_192(rng), denom);
  v.canonicalize();
  return v - BigRational(1, 2);
}

template <RingId R>
const std::vector<SmallElement<R>>& offset_pool() {
  static const std::vector<SmallElement<R>> pool = [] {
    std::vector<SmallElement<R>> out{SmallElement<R>(0, 0)};
    for (const auto& a : enumerate_up_to_norm<R>(kSampleOffsetNorm)) out.push_back(a);
    return out;
  }();
  return pool;
}

}  // namespace

std::mt19937_64 sample_engine(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    const std::uint64_t v = rng();
    if (v < limit) return v % bound;
  }
}

template <RingId R>
ComplexAP RandomInput<R>::at(int precision_bits) const {
  return ComplexAP::from_rationals(re, im, precision_bits) +
         ComplexAP::from_element(offset, precision_bits);
}

template <RingId R>
ComplexSource RandomInput<R>::source() const {
  return [copy = *this](int bits) { return copy.at(bits); };
}

template <RingId R>
RandomInput<R> random_input(std::uint64_t seed, std::uint64_t index) {
  std::mt19937_64 rng = sample_engine(seed, index);
  RandomInput<R> in;
  in.re = centered_dyadic(rng);
  in.im = centered_dyadic(rng);
  const auto& pool = offset_pool<R>();
  in.offset = pool[uniform_below(rng, pool.size())].template as<BigInt>();
  return in;
}

template <RingId R>
std::vector<Element<R>> random_quotients(std::mt19937_64& rng, std::size_t length,
                                         std::int64_t max_norm) {
  const std::int64_t min_norm = R == RingId::kEisenstein ? 3 : 2;
  std::vector<SmallElement<R>> head{SmallElement<R>(0, 0)};
  std::vector<SmallElement<R>> tail;
  for (const auto& a : enumerate_up_to_norm<R>(max_norm)) {
    head.push_back(a);
    if (norm(a) >= min_norm) tail.push_back(a);
  }
  if (tail.empty()) throw DomainError("max_norm admits no partial quotients");
  std::vector<Element<R>> out;
  out.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    const auto& pool = i == 0 ? head : tail;
    out.push_back(pool[uniform_below(rng, pool.size())].template as<BigInt>());
  }
  return out;
}

template <RingId R>
bool reproduces(const std::vector<Element<R>>& a) {
  if (a.empty()) return false;
  ExpandOptions opts;
  opts.max_steps = a.size() + 1;
  const Expansion<R> e = expand(fold_up<R>(a), opts);
  return e.terminated && e.a == a;
}

#define EISENCF_INSTANTIATE(R)                                                         \
  template struct RandomInput<R>;                                                      \
  template RandomInput<R> random_input<R>(std::uint64_t, std::uint64_t);               \
  template std::vector<Element<R>> random_quotients<R>(std::mt19937_64&, std::size_t, \
                                                       std::int64_t);                  \
  template bool reproduces<R>(const std::vector<Element<R>>&);

EISENCF_INSTANTIATE(RingId::kEisenstein)
EISENCF_INSTANTIATE(RingId::kGaussian)

#undef EISENCF_INSTANTIATE

}  // namespace eisencf
