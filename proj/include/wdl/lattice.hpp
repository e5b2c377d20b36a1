#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wdl/errors.hpp"

namespace wdl {

// Finite bounded lattice over elements 0..n-1.
//
// Element indices always follow a linear extension of the order with the
// bottom first; arbitrary input labelings are renumbered at construction and
// the applied permutation is kept in `input_to_canonical`. Meet and join are
// precomputed tables so every checker downstream runs on O(1) lookups.
struct Lattice {
  int n = 0;
  std::vector<std::uint8_t> leq_tab;  // n*n row-major, nonzero iff x <= y
  std::vector<int> meet_tab;          // n*n greatest-lower-bound table
  std::vector<int> join_tab;          // n*n least-upper-bound table
  int bottom = 0;
  int top = 0;
  std::vector<std::string> labels;        // empty, or one label per element
  std::vector<int> input_to_canonical;    // renumbering applied at build time

  bool leq(int x, int y) const { return leq_tab[x * n + y] != 0; }
  int meet(int x, int y) const { return meet_tab[x * n + y]; }
  int join(int x, int y) const { return join_tab[x * n + y]; }
};

// Builds a lattice from a Hasse diagram given as cover pairs (lower, upper).
// The order is the reflexive-transitive closure of the covers. Throws
// EmptyCarrier, NotAPoset (cycle), or NotALattice (pair without meet/join,
// reported in input indices).
Lattice build_lattice(int n, const std::vector<std::pair<int, int>>& covers,
                      std::vector<std::string> labels = {});

// Same validation pipeline, starting from a full reflexive order relation
// (row-major, nonzero iff x <= y). Used where covers are not the natural
// input, e.g. concept lattices ordered by extent inclusion.
Lattice build_lattice_from_order(int n, const std::vector<std::uint8_t>& leq,
                                 std::vector<std::string> labels = {});

// Cover pairs (lower, upper) of the canonical element order, sorted.
std::vector<std::pair<int, int>> covers_of(const Lattice& L);

// x & (y | z) == (x & y) | (x & z) over all triples.
bool is_distributive(const Lattice& L);

// Every element has some y with x & y = 0 and x | y = 1.
bool is_complemented(const Lattice& L);

// Least complement of x, if any.
std::optional<int> find_complement(const Lattice& L, int x);

// The interval {x : lo <= x <= hi}, a sublattice of the parent.
struct IntervalView {
  const Lattice* parent = nullptr;
  int lo = 0;
  int hi = 0;
  std::vector<int> members;  // ascending parent indices

  int size() const { return static_cast<int>(members.size()); }
};

IntervalView interval(const Lattice& L, int lo, int hi);

// A lattice, or an interval of one, presented uniformly for isomorphism
// search: local indices 0..size-1 over `members`, operations inherited from
// the parent (intervals are meet- and join-closed, so this is total).
struct LatticeView {
  const Lattice* parent = nullptr;
  std::vector<int> members;   // ascending parent indices
  std::vector<int> local_of;  // parent index -> local index, -1 outside

  static LatticeView whole(const Lattice& L);
  static LatticeView of(const IntervalView& iv);

  int size() const { return static_cast<int>(members.size()); }
  int meet(int i, int j) const {
    return local_of[parent->meet(members[i], members[j])];
  }
  int join(int i, int j) const {
    return local_of[parent->join(members[i], members[j])];
  }
  bool leq(int i, int j) const { return parent->leq(members[i], members[j]); }
};

// Meet- and join-preserving bijection from A onto B, expressed as the
// B-parent element image of each A member (in A member order), or nullopt.
// When several exist the image vector is the lexicographically least.
std::optional<std::vector<int>> find_isomorphism(const LatticeView& A,
                                                 const LatticeView& B);
std::optional<std::vector<int>> find_isomorphism(const Lattice& A,
                                                 const Lattice& B);
std::optional<std::vector<int>> find_isomorphism(const IntervalView& A,
                                                 const IntervalView& B);

}  // namespace wdl
