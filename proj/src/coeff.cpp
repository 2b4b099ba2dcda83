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

#include "qgsum/coeff.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace qgsum {

using detail::checked_add;
using detail::checked_mul;
using detail::checked_shl;
using detail::checked_sub;

CycCoeff CycCoeff::omega_pow(int k) {
  k = ((k % 8) + 8) % 8;
  CycCoeff r = one();
  return r.times_omega_pow(k);
}

CycCoeff& CycCoeff::operator+=(const CycCoeff& o) {
  std::int64_t oa = o.a, ob = o.b, oc = o.c, od = o.d;
  if (h < o.h) {
    std::uint32_t s = o.h - h;
    a = checked_shl(a, s);
    b = checked_shl(b, s);
    c = checked_shl(c, s);
    d = checked_shl(d, s);
    h = o.h;
  } else if (o.h < h) {
    std::uint32_t s = h - o.h;
    oa = checked_shl(oa, s);
    ob = checked_shl(ob, s);
    oc = checked_shl(oc, s);
    od = checked_shl(od, s);
  }
  a = checked_add(a, oa);
  b = checked_add(b, ob);
  c = checked_add(c, oc);
  d = checked_add(d, od);
  canonicalize();
  return *this;
}

CycCoeff& CycCoeff::operator-=(const CycCoeff& o) { return *this += -o; }

CycCoeff& CycCoeff::operator*=(const CycCoeff& o) {
  // Polynomial product reduced by w^4 = -1.
  std::int64_t ra = checked_sub(
      checked_sub(checked_mul(a, o.a), checked_mul(b, o.d)),
      checked_add(checked_mul(c, o.c), checked_mul(d, o.b)));
  std::int64_t rb = checked_sub(
      checked_add(checked_mul(a, o.b), checked_mul(b, o.a)),
      checked_add(checked_mul(c, o.d), checked_mul(d, o.c)));
  std::int64_t rc = checked_sub(
      checked_add(checked_mul(a, o.c),
                  checked_add(checked_mul(b, o.b), checked_mul(c, o.a))),
      checked_mul(d, o.d));
  std::int64_t rd = checked_add(
      checked_add(checked_mul(a, o.d), checked_mul(b, o.c)),
      checked_add(checked_mul(c, o.b), checked_mul(d, o.a)));
  std::uint32_t rh = h + o.h;
  a = ra;
  b = rb;
  c = rc;
  d = rd;
  h = rh;
  canonicalize();
  return *this;
}

CycCoeff CycCoeff::times_omega_pow(int k) const {
  k = ((k % 8) + 8) % 8;
  CycCoeff r = *this;
  for (int i = 0; i < k; ++i) {
    std::int64_t na = -r.d;
    r.d = r.c;
    r.c = r.b;
    r.b = r.a;
    r.a = na;
  }
  return r;
}

std::complex<double> CycCoeff::to_complex() const {
  const double s = 1.0 / std::sqrt(2.0);
  double re = static_cast<double>(a) + (static_cast<double>(b) - d) * s;
  double im = static_cast<double>(c) + (static_cast<double>(b) + d) * s;
  return {std::ldexp(re, -static_cast<int>(h)),
          std::ldexp(im, -static_cast<int>(h))};
}

std::string CycCoeff::approx_str() const {
  std::complex<double> z = to_complex();
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g%+.6gi", z.real(), z.imag());
  return buf;
}

}  // namespace qgsum
