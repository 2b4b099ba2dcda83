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

#include "qgsum/oracle.hpp"

#include <bit>

namespace qgsum::oracle {

namespace {

void check_cap(int n, int cap) {
  if (n < 0 || n > cap || n > 62) throw CapExceeded(n, cap);
}

}  // namespace

DenseVec zero_vector(int n, int cap) {
  check_cap(n, cap);
  return DenseVec(std::size_t{1} << n);
}

DenseVec basis_state(int n, std::uint64_t index, int cap) {
  DenseVec v = zero_vector(n, cap);
  v[index] = CycCoeff::one();
  return v;
}

DenseVec plus_state(int n, int cap) {
  DenseVec v = zero_vector(n, cap);
  CycCoeff amp = CycCoeff::one();
  for (int i = 0; i < n; ++i) amp *= CycCoeff::inv_sqrt2();
  for (CycCoeff& a : v) a = amp;
  return v;
}

DenseMat DenseMat::identity(int dim) {
  DenseMat r(dim);
  for (int i = 0; i < dim; ++i) r.at(i, i) = CycCoeff::one();
  return r;
}

DenseMat operator*(const DenseMat& a, const DenseMat& b) {
  DenseMat r(a.dim);
  for (int i = 0; i < a.dim; ++i) {
    for (int k = 0; k < a.dim; ++k) {
      const CycCoeff& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < a.dim; ++j) {
        r.at(i, j) += aik * b.at(k, j);
      }
    }
  }
  return r;
}

DenseMat operator+(const DenseMat& a, const DenseMat& b) {
  DenseMat r(a.dim);
  for (std::size_t i = 0; i < r.m.size(); ++i) r.m[i] = a.m[i] + b.m[i];
  return r;
}

DenseMat DenseMat::scaled(const CycCoeff& c) const {
  DenseMat r(dim);
  for (std::size_t i = 0; i < m.size(); ++i) r.m[i] = m[i] * c;
  return r;
}

DenseMat gate_matrix(Gate g) {
  const CycCoeff one = CycCoeff::one();
  const CycCoeff i = CycCoeff::imag_unit();
  const CycCoeff r = CycCoeff::inv_sqrt2();
  auto diag = [](std::initializer_list<CycCoeff> entries) {
    DenseMat m(static_cast<int>(entries.size()));
    int k = 0;
    for (const CycCoeff& e : entries) m.at(k, k) = e, ++k;
    return m;
  };
  auto perm = [](std::initializer_list<int> images) {
    DenseMat m(static_cast<int>(images.size()));
    int k = 0;
    for (int img : images) m.at(img, k) = CycCoeff::one(), ++k;
    return m;
  };
  switch (g) {
    case Gate::X:
      return perm({1, 0});
    case Gate::Y: {
      DenseMat m(2);
      m.at(0, 1) = -i;
      m.at(1, 0) = i;
      return m;
    }
    case Gate::Z:
      return diag({one, -one});
    case Gate::H: {
      DenseMat m(2);
      m.at(0, 0) = m.at(0, 1) = m.at(1, 0) = r;
      m.at(1, 1) = -r;
      return m;
    }
    case Gate::S:
      return diag({one, i});
    case Gate::SDG:
      return diag({one, -i});
    case Gate::T:
      return diag({one, CycCoeff::omega_pow(1)});
    case Gate::CX:
      return perm({0, 1, 3, 2});
    case Gate::CZ:
      return diag({one, one, one, -one});
    case Gate::SWAP:
      return perm({0, 2, 1, 3});
    case Gate::CS:
      return diag({one, one, one, i});
    case Gate::CH: {
      DenseMat m = DenseMat::identity(4);
      m.at(2, 2) = m.at(2, 3) = m.at(3, 2) = r;
      m.at(3, 3) = -r;
      return m;
    }
    case Gate::CCX:
      return perm({0, 1, 2, 3, 4, 5, 7, 6});
    case Gate::CCZ: {
      DenseMat m = DenseMat::identity(8);
      m.at(7, 7) = -one;
      return m;
    }
    case Gate::CSWAP:
      return perm({0, 1, 2, 3, 4, 6, 5, 7});
  }
  throw std::logic_error("bad gate");
}

void apply_mat2(DenseVec& vec, int q, const Mat2& m) {
  int n = std::countr_zero(vec.size());
  std::uint64_t bit = std::uint64_t{1} << (n - 1 - q);
  for (std::uint64_t idx = 0; idx < vec.size(); ++idx) {
    if (idx & bit) continue;
    CycCoeff v0 = vec[idx];
    CycCoeff v1 = vec[idx | bit];
    vec[idx] = m.m00 * v0 + m.m01 * v1;
    vec[idx | bit] = m.m10 * v0 + m.m11 * v1;
  }
}

void apply_matrix(DenseVec& vec, const DenseMat& m,
                  std::span<const int> operands) {
  int n = std::countr_zero(vec.size());
  int k = static_cast<int>(operands.size());
  std::uint64_t op_mask = 0;
  std::vector<std::uint64_t> bits(k);
  for (int j = 0; j < k; ++j) {
    bits[j] = std::uint64_t{1} << (n - 1 - operands[j]);
    op_mask |= bits[j];
  }
  std::vector<CycCoeff> local(std::size_t{1} << k);
  for (std::uint64_t base = 0; base < vec.size(); ++base) {
    if (base & op_mask) continue;
    for (std::uint64_t pat = 0; pat < local.size(); ++pat) {
      std::uint64_t idx = base;
      for (int j = 0; j < k; ++j) {
        if (pat & (std::uint64_t{1} << (k - 1 - j))) idx |= bits[j];
      }
      local[pat] = vec[idx];
    }
    for (std::uint64_t row = 0; row < local.size(); ++row) {
      CycCoeff acc;
      for (std::uint64_t col = 0; col < local.size(); ++col) {
        const CycCoeff& e = m.at(static_cast<int>(row), static_cast<int>(col));
        if (!e.is_zero()) acc += e * local[col];
      }
      std::uint64_t idx = base;
      for (int j = 0; j < k; ++j) {
        if (row & (std::uint64_t{1} << (k - 1 - j))) idx |= bits[j];
      }
      vec[idx] = acc;
    }
  }
}

void apply_gate(DenseVec& vec, Gate g, std::span<const int> operands) {
  apply_matrix(vec, gate_matrix(g), operands);
}

DenseVec term_to_vector(const StabilizerTerm& t, int cap) {
  int n = t.num_qubits();
  check_cap(n, cap);
  DenseVec vec(std::size_t{1} << n);

  // Bare graph state: amplitude of |z> is 2^{-n/2} (-1)^{#edges inside
  // supp(z)}.
  CycCoeff base = CycCoeff::one();
  for (int i = 0; i < n; ++i) base *= CycCoeff::inv_sqrt2();
  std::vector<std::uint64_t> rows(n, 0);
  for (int v = 0; v < n; ++v) {
    t.graph.neighbors(v).for_each_set(
        [&](int u) { rows[v] |= std::uint64_t{1} << (n - 1 - u); });
  }
  for (std::uint64_t z = 0; z < vec.size(); ++z) {
    int twice_edges = 0;
    for (int v = 0; v < n; ++v) {
      if (z & (std::uint64_t{1} << (n - 1 - v))) {
        twice_edges += std::popcount(rows[v] & z);
      }
    }
    vec[z] = (twice_edges / 2) % 2 == 0 ? base : -base;
  }

  const CliffordTables& tables = CliffordTables::get();
  for (int q = 0; q < n; ++q) {
    if (t.vops[q] != 0) apply_mat2(vec, q, tables.rep(t.vops[q]));
  }
  for (CycCoeff& a : vec) a *= t.coeff;
  return vec;
}

DenseVec sum_to_vector(const StateSum& s, int cap) {
  check_cap(s.n, cap);
  DenseVec acc(std::size_t{1} << s.n);
  for (const StabilizerTerm& t : s.terms) {
    DenseVec v = term_to_vector(t, cap);
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += v[i];
  }
  return acc;
}

bool sums_equal(const StateSum& a, const StateSum& b, int cap) {
  if (a.n != b.n) return false;
  return sum_to_vector(a, cap) == sum_to_vector(b, cap);
}

}  // namespace qgsum::oracle
