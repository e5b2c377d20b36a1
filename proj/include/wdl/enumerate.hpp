#pragma once

// Exhaustive model generation: all n-element lattices up to isomorphism, all
// unary tables satisfying a chosen axiom subset, all dicomplementations of a
// lattice, and the search that asks whether A1, A1', A2, A2' already follow
// from A3 and A3' when the two tables may differ.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wdl/algebra.hpp"
#include "wdl/errors.hpp"

namespace wdl {

inline constexpr int kEnumerateBound = 7;
inline constexpr std::uint64_t kDefaultBudget = 1000000000ULL;

// One lattice per isomorphism class, ascending canonical-certificate order;
// element indices form a linear extension with the bottom first.
std::vector<Lattice> enumerate_lattices(int n, int bound = kEnumerateBound);

// Cumulative table-evaluation meter; scans charge their cost up front.
struct Budget {
  std::uint64_t limit = kDefaultBudget;
  std::uint64_t used = 0;
  void charge(std::uint64_t cost) {
    if (cost > limit - used) throw BudgetExceeded(limit, used + cost);
    used += cost;
  }
};

enum class OpSlot { Weak, Dual, Pair };

// Drawn from {A1, A1', A2, A2', A3, A3', DDAG, WDN}; must be nonempty and
// consistent with the slot it is used under.
struct AxiomSubset {
  std::vector<AxiomId> chosen;
};

AxiomSubset axioms_from_names(const std::string& comma_list);

// Tables satisfying every chosen axiom, ascending lex order of image tuples.
// Weak slot admits A1, A2, A3, DDAG; dual slot admits A1', A2', A3'.
std::vector<UnaryOp> enumerate_ops_satisfying(const Lattice& L,
                                              const AxiomSubset& which,
                                              OpSlot slot, int workers = 1,
                                              Budget* budget = nullptr);

// Pairs (weak, dual) in weak-major order. The two sides are filtered
// independently and combined as a product; WDN in the subset restricts to
// equal pairs instead.
std::vector<std::pair<UnaryOp, UnaryOp>> enumerate_op_pairs_satisfying(
    const Lattice& L, const AxiomSubset& which, int workers = 1,
    Budget* budget = nullptr);

// All pairs passing A1-A3 and A1'-A3'.
std::vector<DicompAlgebra> enumerate_dicomplementations(const Lattice& L,
                                                        int workers = 1,
                                                        Budget* budget =
                                                            nullptr);

struct Counterexample {
  Lattice lattice;
  UnaryOp weak, dual;
  AxiomId violated;  // first failure in the order A1, A1', A2, A2'
  Witness witness;
};

struct SearchConfig {
  int max_n = 2;
  bool require_wdn = false;  // restrict to equal tables
  int workers = 1;
  std::uint64_t budget = kDefaultBudget;
  bool timings = false;  // elapsed_ms stays 0 unless set
};

struct SearchReport {
  int max_n = 0;
  bool require_wdn = false;
  std::optional<Counterexample> counterexample;
  // Per-size pair-space cardinalities, filled only for fully examined sizes
  // on the exhaustion path.
  std::vector<std::pair<int, std::uint64_t>> pairs_by_size;
  std::uint64_t elapsed_ms = 0;
};

// Budget interruption carrying the partial exhaustion counts.
struct SearchBudgetExceeded : BudgetExceeded {
  SearchReport partial;
  SearchBudgetExceeded(std::uint64_t budget, std::uint64_t needed,
                       SearchReport p)
      : BudgetExceeded(budget, needed), partial(std::move(p)) {}
};

// For each lattice of each size up to max_n, every pair of tables passing A3
// (weak side) and A3' (dual side) is tested against A1, A1', A2, A2'. Returns
// the first counterexample under (size, lattice, weak-major pair) order, or
// the exhaustion counts. The result is replayed through the axiom checkers
// before being returned and is identical for every worker count.
SearchReport search_open_question(const SearchConfig& cfg);

// Literal nested-loop reference implementation, kept for differential tests.
SearchReport search_open_question_serial(const SearchConfig& cfg);

// Throws std::logic_error unless the counterexample's tables pass A3 and A3'
// and violate the named axiom exactly at the recorded witness.
void replay_counterexample(const Counterexample& ce);

}  // namespace wdl
