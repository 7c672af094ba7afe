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

// Exact arithmetic in the Eisenstein ring Z[rho], rho = 1/2 + (sqrt(3)/2) i,
// and the Gaussian ring Z[i].
//
// An element is stored by its integer coordinates (x, y) in the basis
// (1, rho) resp. (1, i). The squared modulus is the integral quadratic form
//   Eisenstein: x^2 + x y + y^2
//   Gaussian:   x^2 + y^2
// and every comparison of distances in this library reduces to that form.

#ifndef EISENCF_RING_HPP_
#define EISENCF_RING_HPP_

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <tuple>
#include <type_traits>
#include <vector>

namespace eisencf {

using BigInt = mpz_class;
using BigRational = mpq_class;

enum class RingId { kEisenstein, kGaussian };

constexpr std::string_view ring_name(RingId ring) {
  return ring == RingId::kEisenstein ? "eisenstein" : "gaussian";
}

template <RingId R>
struct RingTraits;

template <>
struct RingTraits<RingId::kEisenstein> {
  // Coefficient of x*y in the norm form.
  static constexpr int kCross = 1;
  static constexpr std::size_t kUnitCount = 6;
  // Squared covering radius 1/3.
  static constexpr int kCoverNum = 1;
  static constexpr int kCoverDen = 3;
};

template <>
struct RingTraits<RingId::kGaussian> {
  static constexpr int kCross = 0;
  static constexpr std::size_t kUnitCount = 4;
  // Squared covering radius 1/2.
  static constexpr int kCoverNum = 1;
  static constexpr int kCoverDen = 2;
};

// The norm form evaluated on arbitrary coordinates (integers, rationals or
// floating point).
template <RingId R, typename T>
T form(const T& s, const T& t) {
  if constexpr (RingTraits<R>::kCross == 1) {
    return T(s * s + s * t + t * t);
  } else {
    return T(s * s + t * t);
  }
}

template <RingId R, typename Int = BigInt>
struct Element {
  Int x{0};
  Int y{0};

  static constexpr RingId ring = R;

  Element() = default;
  Element(Int x_coord, Int y_coord) : x(std::move(x_coord)), y(std::move(y_coord)) {}

  static Element one() { return Element(Int(1), Int(0)); }
  static Element zero() { return Element(Int(0), Int(0)); }

  bool is_zero() const { return x == 0 && y == 0; }

  // Widening conversion, e.g. from enumerated 64-bit points to BigInt.
  template <typename Other>
  Element<R, Other> as() const {
    return Element<R, Other>(Other(x), Other(y));
  }

  friend bool operator==(const Element& a, const Element& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

  friend Element operator+(const Element& a, const Element& b) {
    return Element(Int(a.x + b.x), Int(a.y + b.y));
  }
  friend Element operator-(const Element& a, const Element& b) {
    return Element(Int(a.x - b.x), Int(a.y - b.y));
  }
  friend Element operator-(const Element& a) { return Element(Int(-a.x), Int(-a.y)); }

  friend Element operator*(const Element& a, const Element& b) {
    if constexpr (R == RingId::kEisenstein) {
      // rho^2 = rho - 1
      Int yy = a.y * b.y;
      return Element(Int(a.x * b.x - yy), Int(a.x * b.y + a.y * b.x + yy));
    } else {
      return Element(Int(a.x * b.x - a.y * b.y), Int(a.x * b.y + a.y * b.x));
    }
  }

  Element& operator+=(const Element& o) { return *this = *this + o; }
  Element& operator-=(const Element& o) { return *this = *this - o; }
  Element& operator*=(const Element& o) { return *this = *this * o; }
};

using EisensteinInt = Element<RingId::kEisenstein>;
using GaussianInt = Element<RingId::kGaussian>;

template <RingId R>
using SmallElement = Element<R, std::int64_t>;

template <RingId R, typename Int>
Int norm(const Element<R, Int>& a) {
  return form<R>(a.x, a.y);
}

// Complex conjugate. For Eisenstein, conj(rho) = 1 - rho.
template <RingId R, typename Int>
Element<R, Int> conj(const Element<R, Int>& a) {
  if constexpr (R == RingId::kEisenstein) {
    return Element<R, Int>(Int(a.x + a.y), Int(-a.y));
  } else {
    return Element<R, Int>(a.x, Int(-a.y));
  }
}

// Deterministic total order used for tie-breaking: norm first, then
// lexicographic on (x, y).
template <RingId R, typename Int>
bool tie_order_less(const Element<R, Int>& a, const Element<R, Int>& b) {
  Int na = norm(a);
  Int nb = norm(b);
  if (na != nb) return na < nb;
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

template <RingId R, typename Int>
bool lex_less(const Element<R, Int>& a, const Element<R, Int>& b) {
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

// The unit group: rho^k (k = 0..5) resp. i^k (k = 0..3).
template <RingId R, typename Int = BigInt>
std::vector<Element<R, Int>> units() {
  using E = Element<R, Int>;
  if constexpr (R == RingId::kEisenstein) {
    return {E(1, 0), E(0, 1), E(-1, 1), E(-1, 0), E(0, -1), E(1, -1)};
  } else {
    return {E(1, 0), E(0, 1), E(-1, 0), E(0, -1)};
  }
}

// Complex embedding in double precision.
template <RingId R, typename Int>
std::array<double, 2> to_complex_double(const Element<R, Int>& a) {
  double x, y;
  if constexpr (std::is_same_v<Int, BigInt>) {
    x = a.x.get_d();
    y = a.y.get_d();
  } else {
    x = static_cast<double>(a.x);
    y = static_cast<double>(a.y);
  }
  if constexpr (R == RingId::kEisenstein) {
    return {x + 0.5 * y, y * 0.86602540378443864676};
  } else {
    return {x, y};
  }
}

// Every element a with 1 <= norm(a) <= max_norm, each exactly once, ordered
// by norm and then lexicographically on (x, y).
template <RingId R>
std::vector<SmallElement<R>> enumerate_up_to_norm(std::int64_t max_norm) {
  std::vector<SmallElement<R>> out;
  if (max_norm < 1) return out;
  // For Eisenstein, norm >= 3 y^2 / 4 and norm >= 3 x^2 / 4; for Gaussian,
  // norm >= x^2 and norm >= y^2. 4/3 * max_norm bounds both.
  const auto bound = static_cast<std::int64_t>(
                         std::sqrt(4.0 * static_cast<double>(max_norm) / 3.0)) +
                     1;
  for (std::int64_t y = -bound; y <= bound; ++y) {
    for (std::int64_t x = -bound; x <= bound; ++x) {
      const std::int64_t n = form<R>(x, y);
      if (n >= 1 && n <= max_norm) out.emplace_back(x, y);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return tie_order_less(a, b);
  });
  return out;
}

inline std::string to_string(const BigInt& v) { return v.get_str(); }

template <RingId R, typename Int>
std::string to_string(const Element<R, Int>& a) {
  if constexpr (std::is_same_v<Int, BigInt>) {
    return "(" + a.x.get_str() + "," + a.y.get_str() + ")";
  } else {
    return "(" + std::to_string(a.x) + "," + std::to_string(a.y) + ")";
  }
}

}  // namespace eisencf

#endif  // EISENCF_RING_HPP_
