#pragma once

// Shared fixtures and naive reference evaluators for the test suite. The
// reference code here is written directly from the defining formulas, on
// purpose sharing no logic with the library, so library outputs are compared
// against an independent computation rather than against themselves.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wdl/algebra.hpp"
#include "wdl/congruence.hpp"
#include "wdl/lattice.hpp"

namespace wdltest {

using wdl::DicompAlgebra;
using wdl::Lattice;

// ---------------------------------------------------------------- fixtures

inline Lattice chain(int n) {
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i + 1 < n; ++i) covers.push_back({i, i + 1});
  return wdl::build_lattice(n, covers);
}

// Boolean lattice with 2^k elements; element x is the bitmask of its atoms.
inline Lattice cube(int k) {
  const int n = 1 << k;
  std::vector<std::pair<int, int>> covers;
  for (int x = 0; x < n; ++x)
    for (int b = 0; b < k; ++b)
      if (!(x & (1 << b))) covers.push_back({x, x | (1 << b)});
  return wdl::build_lattice(n, covers);
}

inline Lattice b2() { return cube(2); }
inline Lattice b3() { return cube(3); }

// Pentagon: 0 < 1 < 4 and 0 < 2 < 3 < 4, with 1 incomparable to 2 and 3.
inline Lattice n5() {
  return wdl::build_lattice(5, {{0, 1}, {0, 2}, {1, 4}, {2, 3}, {3, 4}});
}

// Diamond: three incomparable atoms 1, 2, 3 between bottom 0 and top 4.
inline Lattice m3() {
  return wdl::build_lattice(
      5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
}

// ------------------------------------------------- naive order computations

// Greatest lower bound read off the order relation alone.
inline std::optional<int> naive_glb(const Lattice& L, int x, int y) {
  std::vector<int> lower;
  for (int z = 0; z < L.n; ++z)
    if (L.leq(z, x) && L.leq(z, y)) lower.push_back(z);
  for (int g : lower) {
    bool greatest = true;
    for (int z : lower)
      if (!L.leq(z, g)) greatest = false;
    if (greatest) return g;
  }
  return std::nullopt;
}

inline std::optional<int> naive_lub(const Lattice& L, int x, int y) {
  std::vector<int> upper;
  for (int z = 0; z < L.n; ++z)
    if (L.leq(x, z) && L.leq(y, z)) upper.push_back(z);
  for (int s : upper) {
    bool least = true;
    for (int z : upper)
      if (!L.leq(s, z)) least = false;
    if (least) return s;
  }
  return std::nullopt;
}

// --------------------------------------------------- naive axiom evaluators

inline bool naive_a1(const Lattice& L, const std::vector<int>& w) {
  for (int x = 0; x < L.n; ++x)
    if (!L.leq(w[w[x]], x)) return false;
  return true;
}

inline bool naive_a1p(const Lattice& L, const std::vector<int>& d) {
  for (int x = 0; x < L.n; ++x)
    if (!L.leq(x, d[d[x]])) return false;
  return true;
}

inline bool naive_a2(const Lattice& L, const std::vector<int>& w) {
  for (int x = 0; x < L.n; ++x)
    for (int y = 0; y < L.n; ++y)
      if (L.meet(w[L.meet(x, y)], w[y]) != w[y]) return false;
  return true;
}

inline bool naive_a2p(const Lattice& L, const std::vector<int>& d) {
  for (int x = 0; x < L.n; ++x)
    for (int y = 0; y < L.n; ++y)
      if (L.meet(d[L.meet(x, y)], d[y]) != d[y]) return false;
  return true;
}

inline bool naive_a3(const Lattice& L, const std::vector<int>& w) {
  for (int x = 0; x < L.n; ++x)
    for (int y = 0; y < L.n; ++y)
      if (L.join(L.meet(x, y), L.meet(x, w[y])) != x) return false;
  return true;
}

inline bool naive_a3p(const Lattice& L, const std::vector<int>& d) {
  for (int x = 0; x < L.n; ++x)
    for (int y = 0; y < L.n; ++y)
      if (L.meet(L.join(x, y), L.join(x, d[y])) != x) return false;
  return true;
}

inline bool naive_ddag(const Lattice& L, const std::vector<int>& t) {
  for (int x = 0; x < L.n; ++x)
    for (int y = 0; y < L.n; ++y) {
      const int lhs = L.join(L.meet(x, y), L.meet(x, t[y]));
      const int rhs = L.meet(L.join(x, y), L.join(x, t[y]));
      if (lhs != rhs) return false;
    }
  return true;
}

inline bool naive_antitone(const Lattice& L, const std::vector<int>& t) {
  for (int x = 0; x < L.n; ++x)
    for (int y = 0; y < L.n; ++y)
      if (L.leq(x, y) && !L.leq(t[y], t[x])) return false;
  return true;
}

// ---------------------------------------------------------------- utilities

// All n^n image tuples, ascending lex order. Keep n small.
inline std::vector<std::vector<int>> all_tables(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> img(n, 0);
  while (true) {
    out.push_back(img);
    int i = n - 1;
    while (i >= 0 && img[i] == n - 1) img[i--] = 0;
    if (i < 0) break;
    ++img[i];
  }
  return out;
}

// Table of the relabeled algebra: x -> t(x) becomes p(x) -> p(t(x)).
inline std::vector<int> conjugate(const std::vector<int>& p,
                                  const std::vector<int>& t) {
  std::vector<int> out(t.size());
  for (std::size_t x = 0; x < t.size(); ++x) out[p[x]] = p[t[x]];
  return out;
}

// Two-variable compatibility definition of a congruence, evaluated directly.
inline bool naive_is_congruence(const DicompAlgebra& A,
                                const std::vector<int>& block_of) {
  const Lattice& L = A.lattice;
  for (int x = 0; x < L.n; ++x)
    for (int x2 = 0; x2 < L.n; ++x2) {
      if (block_of[x] != block_of[x2]) continue;
      if (block_of[A.weak(x)] != block_of[A.weak(x2)]) return false;
      if (A.dual && block_of[(*A.dual)(x)] != block_of[(*A.dual)(x2)])
        return false;
      for (int y = 0; y < L.n; ++y)
        for (int y2 = 0; y2 < L.n; ++y2) {
          if (block_of[y] != block_of[y2]) continue;
          if (block_of[L.meet(x, y)] != block_of[L.meet(x2, y2)]) return false;
          if (block_of[L.join(x, y)] != block_of[L.join(x2, y2)]) return false;
        }
    }
  return true;
}

// Every partition of {0..n-1} in restricted-growth encoding, so block ids
// are already numbered by least member.
inline std::vector<std::vector<int>> all_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> rgs(n, 0);
  std::vector<int> maxv(n, 0);
  while (true) {
    out.push_back(rgs);
    int i = n - 1;
    while (i > 0 && rgs[i] == maxv[i - 1] + 1) --i;
    if (i == 0) break;
    ++rgs[i];
    maxv[i] = std::max(maxv[i - 1], rgs[i]);
    for (int j = i + 1; j < n; ++j) {
      rgs[j] = 0;
      maxv[j] = maxv[i];
    }
  }
  return out;
}

}  // namespace wdltest
