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

#include "qgsum/state.hpp"

#include <doctest.h>

#include "support.hpp"

using namespace qgsum;

TEST_CASE("collect cancels opposite coefficients") {
  qgsum::test::Rng rng(31);
  StabilizerTerm t = qgsum::test::random_term(rng, 3);
  StabilizerTerm neg = t;
  neg.coeff = -neg.coeff;
  StateSum s(3);
  s.terms = {t, neg};
  std::size_t dropped = collect(s);
  CHECK(s.terms.empty());
  CHECK(dropped == 1);
}

TEST_CASE("collect leaves distinct terms alone") {
  qgsum::test::Rng rng(37);
  StabilizerTerm t = qgsum::test::random_term(rng, 3);
  StabilizerTerm u = qgsum::test::random_term(rng, 3);
  // Force distinct bases.
  u.graph = t.graph;
  u.vops = t.vops;
  u.vops[0] = static_cast<std::uint8_t>((u.vops[0] + 1) % 24);
  StateSum s(3);
  s.terms = {t, u};
  collect(s);
  CHECK(s.terms.size() == 2);
  CHECK(s.terms[0].same_basis(t));
  CHECK(s.terms[1].same_basis(u));
}

TEST_CASE("collect adds coefficients of identical bases") {
  qgsum::test::Rng rng(41);
  StabilizerTerm t = qgsum::test::random_term(rng, 4);
  StabilizerTerm u = t;
  u.coeff = qgsum::test::random_nonzero_coeff(rng);
  StateSum s(4);
  s.terms = {t, u};
  collect(s);
  if (t.coeff + u.coeff == CycCoeff::zero()) {
    CHECK(s.terms.empty());
  } else {
    REQUIRE(s.terms.size() == 1);
    CHECK(s.terms[0].coeff == t.coeff + u.coeff);
  }
}

TEST_CASE("dense expansion is invariant under collect") {
  qgsum::test::Rng rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    StateSum s(4);
    int count = 2 + static_cast<int>(rng() % 6);
    for (int i = 0; i < count; ++i) {
      s.terms.push_back(qgsum::test::random_term(rng, 4));
    }
    // Duplicate some bases on purpose.
    if (count > 2) {
      s.terms[1].vops = s.terms[0].vops;
      s.terms[1].graph = s.terms[0].graph;
    }
    auto before = oracle::sum_to_vector(s);
    collect(s);
    CHECK(before == oracle::sum_to_vector(s));
  }
}

TEST_CASE("order of surviving terms is first appearance") {
  StabilizerTerm a = StabilizerTerm::plus_state(2);
  StabilizerTerm b = StabilizerTerm::zero_state(2);
  StabilizerTerm a2 = a;
  a2.coeff = CycCoeff::imag_unit();
  StateSum s(2);
  s.terms = {a, b, a2};
  collect(s);
  REQUIRE(s.terms.size() == 2);
  CHECK(s.terms[0].same_basis(a));
  CHECK(s.terms[1].same_basis(b));
  CHECK(s.terms[0].coeff == CycCoeff::one() + CycCoeff::imag_unit());
}

TEST_CASE("pauli product letters") {
  PauliProduct p(3);
  p.set_letter(0, Pauli::Y);
  p.set_letter(2, Pauli::Z);
  CHECK(p.s == 1);
  CHECK(p.x.test(0));
  CHECK(p.z.test(0));
  CHECK(!p.x.test(2));
  CHECK(p.z.test(2));
  CHECK(p.has_support());
  CHECK(!PauliProduct(3).has_support());
}
