#pragma once

// Congruences of (di)complemented lattices and the machinery behind the
// subdirect-irreducibility argument: the projection homomorphisms x -> x&c
// and x -> x&~c, the interval isomorphisms u and v, kernels, and meets of
// congruences.

#include <utility>
#include <vector>

#include "wdl/algebra.hpp"
#include "wdl/lattice.hpp"

namespace wdl {

// Partition as block index per element; blocks are numbered in order of
// their least member, so equal partitions have identical encodings.
struct Congruence {
  std::vector<int> block_of;
  int block_count = 0;
};

Congruence delta(int n);
Congruence nabla(int n);
bool is_delta(const Congruence& c);

// Renumbers arbitrary block ids into least-member order.
Congruence normalize_partition(const std::vector<int>& raw_block_of);
std::vector<std::vector<int>> blocks_of(const Congruence& c);

// Compatibility with meet and join only.
bool is_lattice_congruence(const Lattice& L, const Congruence& c);
// Compatibility with meet, join, and whichever unary tables are present.
bool is_algebra_congruence(const DicompAlgebra& A, const Congruence& c);

// Meet- and join-preserving map from a sublattice of `parent` (listed in
// source_members) into an interval of the same parent.
struct Homomorphism {
  const Lattice* parent = nullptr;
  std::vector<int> source_members;  // ascending parent indices
  IntervalView target;
  std::vector<int> map;  // image of source_members[i] at position i
};

// f1(x) = x&c onto [0,c] and f2(x) = x&~c onto [0,~c], both from the whole
// carrier; preservation is verified on all pairs before returning.
std::pair<Homomorphism, Homomorphism> projection_maps(const DicompAlgebra& A,
                                                      int c);

// u: [c,1] -> [0,~c], x -> x&~c and v: [0,~c] -> [c,1], x -> x|c; verified
// mutually inverse and order preserving.
std::pair<Homomorphism, Homomorphism> interval_isomorphism_pair(
    const DicompAlgebra& A, int c);

// Partition of the source members by image; block indices refer to positions
// in source_members. Lattice-operation compatibility is verified.
Congruence kernel(const Homomorphism& h);

// Relation intersection of two partitions on the same carrier.
Congruence meet_congruences(const Congruence& p, const Congruence& q);

// Least congruence identifying a and b (closed under the algebra's
// operations, including any unary tables present).
Congruence principal_congruence(const DicompAlgebra& A, int a, int b);

inline constexpr int kCongruenceBound = 8;

// The two generation strategies behind all_congruences, public so their
// agreement is testable: filtering tries every partition of the carrier,
// closure joins principal congruences pairwise to a fixpoint.
std::vector<Congruence> all_congruences_by_filtering(const DicompAlgebra& A);
std::vector<Congruence> all_congruences_by_closure(const DicompAlgebra& A);

// Every congruence, Delta and Nabla included, sorted by block encoding.
// Exhaustive partition filtering up to n = 6, principal-join closure beyond.
std::vector<Congruence> all_congruences(const DicompAlgebra& A,
                                        int bound = kCongruenceBound);

// True iff a least nontrivial congruence exists; false for the singleton.
bool is_subdirectly_irreducible(const DicompAlgebra& A,
                                int bound = kCongruenceBound);

}  // namespace wdl
