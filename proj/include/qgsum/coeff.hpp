// Copyright 2026 The qgsum Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QGSUM_COEFF_HPP
#define QGSUM_COEFF_HPP

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qgsum {

// Thrown when a coefficient numerator leaves the 64-bit range. Numerators
// stay tiny for circuits of the scale this simulator targets, but the
// arithmetic is checked so that the failure mode is a diagnostic instead of
// silent wraparound.
class CoeffOverflow : public std::overflow_error {
 public:
  CoeffOverflow()
      : std::overflow_error(
            "coefficient numerator exceeded the 64-bit range of this build") {}
};

namespace detail {

inline std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_add_overflow(x, y, &r)) throw CoeffOverflow();
  return r;
}

inline std::int64_t checked_sub(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_sub_overflow(x, y, &r)) throw CoeffOverflow();
  return r;
}

inline std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_mul_overflow(x, y, &r)) throw CoeffOverflow();
  return r;
}

inline std::int64_t checked_shl(std::int64_t x, std::uint32_t s) {
  if (x == 0 || s == 0) return x;
  if (s >= 63) throw CoeffOverflow();
  if (x > (INT64_MAX >> s) || x < (INT64_MIN >> s)) throw CoeffOverflow();
  return x << s;
}

}  // namespace detail

// Exact amplitude (a + b*w + c*w^2 + d*w^3) / 2^h where w = exp(i*pi/4).
// Since w^4 = -1, w^2 acts as the imaginary unit and w - w^3 = sqrt(2), this
// ring contains every matrix entry of the supported gate set, so equality of
// amplitudes is decidable exactly.
//
// Canonical form: h == 0, or at least one of a, b, c, d is odd.  Canonical
// representations of equal values are identical, so operator== is
// component-wise and is_zero() reduces to a == b == c == d == 0.
struct CycCoeff {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;
  std::int64_t d = 0;
  std::uint32_t h = 0;

  CycCoeff() = default;
  CycCoeff(std::int64_t a_, std::int64_t b_, std::int64_t c_, std::int64_t d_,
           std::uint32_t h_ = 0)
      : a(a_), b(b_), c(c_), d(d_), h(h_) {
    canonicalize();
  }

  static CycCoeff zero() { return CycCoeff(); }
  static CycCoeff one() { return {1, 0, 0, 0, 0}; }
  static CycCoeff imag_unit() { return {0, 0, 1, 0, 0}; }
  static CycCoeff half() { return {1, 0, 0, 0, 1}; }
  static CycCoeff sqrt2() { return {0, 1, 0, -1, 0}; }
  static CycCoeff inv_sqrt2() { return {0, 1, 0, -1, 1}; }
  // w^k for any integer k (w^8 = 1).
  static CycCoeff omega_pow(int k);

  bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }

  void canonicalize() {
    if (is_zero()) {
      h = 0;
      return;
    }
    while (h > 0 && ((a | b | c | d) & 1) == 0) {
      a >>= 1;
      b >>= 1;
      c >>= 1;
      d >>= 1;
      --h;
    }
  }

  CycCoeff& operator+=(const CycCoeff& o);
  CycCoeff& operator-=(const CycCoeff& o);
  CycCoeff& operator*=(const CycCoeff& o);

  friend CycCoeff operator+(CycCoeff x, const CycCoeff& y) { return x += y; }
  friend CycCoeff operator-(CycCoeff x, const CycCoeff& y) { return x -= y; }
  friend CycCoeff operator*(CycCoeff x, const CycCoeff& y) { return x *= y; }

  CycCoeff operator-() const { return {-a, -b, -c, -d, h}; }

  friend bool operator==(const CycCoeff&, const CycCoeff&) = default;

  // Multiplication by w^k without a full ring multiply.
  CycCoeff times_omega_pow(int k) const;

  // Complex conjugate (w -> w^-1 = -w^3).
  CycCoeff conjugate() const { return {a, -d, -c, -b, h}; }

  std::complex<double> to_complex() const;

  // Human-readable approximation like "0.5-0.707107i".
  std::string approx_str() const;
};

}  // namespace qgsum

#endif  // QGSUM_COEFF_HPP
