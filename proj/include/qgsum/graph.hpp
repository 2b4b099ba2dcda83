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

#ifndef QGSUM_GRAPH_HPP
#define QGSUM_GRAPH_HPP

#include <bit>
#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qgsum {

// Fixed-width dynamic bitset.  Neighbor sets and Pauli supports are kept in
// this form so that edge toggles and symmetric differences are word-parallel.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

  int size() const { return n_; }

  bool test(int i) const {
    assert(i >= 0 && i < n_);
    return (w_[i >> 6] >> (i & 63)) & 1;
  }
  void set(int i) {
    assert(i >= 0 && i < n_);
    w_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }
  void reset(int i) {
    assert(i >= 0 && i < n_);
    w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }
  void flip(int i) {
    assert(i >= 0 && i < n_);
    w_[i >> 6] ^= std::uint64_t{1} << (i & 63);
  }

  Bitset& operator^=(const Bitset& o) {
    assert(n_ == o.n_);
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    assert(n_ == o.n_);
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    assert(n_ == o.n_);
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
    return *this;
  }

  bool any() const {
    for (std::uint64_t w : w_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }
  int count() const {
    int c = 0;
    for (std::uint64_t w : w_) c += std::popcount(w);
    return c;
  }

  // Lowest set bit, or -1.
  int first() const {
    for (std::size_t k = 0; k < w_.size(); ++k) {
      if (w_[k]) return static_cast<int>(k * 64 + std::countr_zero(w_[k]));
    }
    return -1;
  }

  template <typename F>
  void for_each_set(F f) const {
    for (std::size_t k = 0; k < w_.size(); ++k) {
      std::uint64_t w = w_[k];
      while (w) {
        f(static_cast<int>(k * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  // Highest-to-lowest iteration.
  template <typename F>
  void for_each_set_desc(F f) const {
    for (std::size_t k = w_.size(); k-- > 0;) {
      std::uint64_t w = w_[k];
      while (w) {
        int bit = 63 - std::countl_zero(w);
        f(static_cast<int>(k * 64 + bit));
        w &= ~(std::uint64_t{1} << bit);
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> v;
    for_each_set([&](int i) { v.push_back(i); });
    return v;
  }

  const std::vector<std::uint64_t>& words() const { return w_; }

  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

// Simple undirected labeled graph on vertices 0..n-1, stored as one neighbor
// bitset per vertex.  Equality is exact labeled adjacency equality.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n), adj_(n, Bitset(n)) {}

  int num_vertices() const { return n_; }

  bool has_edge(int a, int b) const {
    check_vertex(a);
    check_vertex(b);
    return a != b && adj_[a].test(b);
  }

  void toggle_edge(int a, int b) {
    check_vertex(a);
    check_vertex(b);
    if (a == b) throw std::invalid_argument("toggle_edge: self-loop");
    adj_[a].flip(b);
    adj_[b].flip(a);
  }

  // Complements the subgraph induced on nbhd(v); edges at v are unchanged.
  void local_complement(int v) {
    check_vertex(v);
    toggle_clique(adj_[v]);
  }

  // Toggles every edge inside s.  Taken by value: the rows being rewritten
  // may include the caller's source set.
  void toggle_clique(Bitset s) {
    s.for_each_set([&](int x) {
      adj_[x] ^= s;
      adj_[x].reset(x);
    });
  }

  // Toggles each unordered pair {x,y}, x != y, once per ordered occurrence in
  // (s x t) u (t x s); doubly-counted pairs cancel.
  void toggle_cross(Bitset s, Bitset t) {
    s.for_each_set([&](int x) {
      adj_[x] ^= t;
      adj_[x].reset(x);
    });
    t.for_each_set([&](int y) {
      adj_[y] ^= s;
      adj_[y].reset(y);
    });
  }

  const Bitset& neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
  }
  int degree(int v) const { return neighbors(v).count(); }

  long long num_edges() const {
    long long deg = 0;
    for (const Bitset& row : adj_) deg += row.count();
    return deg / 2;
  }

  double average_degree() const {
    return n_ == 0 ? 0.0 : 2.0 * static_cast<double>(num_edges()) / n_;
  }

  // Sorted edge list, a < b.
  std::vector<std::pair<int, int>> edge_list() const {
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < n_; ++a) {
      adj_[a].for_each_set([&](int b) {
        if (a < b) edges.emplace_back(a, b);
      });
    }
    return edges;
  }

  // Symmetric and loop-free; used by debug checks.
  bool invariants_hold() const {
    for (int a = 0; a < n_; ++a) {
      if (adj_[a].test(a)) return false;
      bool ok = true;
      adj_[a].for_each_set([&](int b) { ok = ok && adj_[b].test(a); });
      if (!ok) return false;
    }
    return true;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex out of range");
  }

  int n_ = 0;
  std::vector<Bitset> adj_;
};

}  // namespace qgsum

#endif  // QGSUM_GRAPH_HPP
