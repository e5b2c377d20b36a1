#pragma once

// Unary operation tables over a lattice and the axiom checkers for weakly
// dicomplemented lattices: the defining conditions A1-A3 for the weak
// complement and A1'-A3' for its dual, the derived property bundles P4 and
// P5, the four-equation system COR1, the single equation DDAG that pins down
// Boolean algebras, and the coincidence test WDN.

#include <optional>
#include <string>
#include <vector>

#include "wdl/errors.hpp"
#include "wdl/lattice.hpp"

namespace wdl {

enum class AxiomId { A1, A1p, A2, A2p, A3, A3p, P4, P5, Cor1, Ddag, Wdn };

const char* axiom_name(AxiomId a);
AxiomId axiom_from_name(const std::string& name);  // throws UnknownAxiom
bool axiom_needs_dual(AxiomId a);

// Report order for the full identifier list and for the weak-table-only list.
const std::vector<AxiomId>& all_axioms();
const std::vector<AxiomId>& weak_only_axioms();

struct UnaryOp {
  std::vector<int> img;
  int operator()(int x) const { return img[x]; }
};

// No axiom is assumed at construction; deliberately invalid algebras are
// legitimate inputs (the search relies on that). dual may be absent for
// weak-complement-only work.
struct DicompAlgebra {
  Lattice lattice;
  UnaryOp weak;
  std::optional<UnaryOp> dual;
};

DicompAlgebra make_algebra(Lattice L, std::vector<int> weak,
                           std::optional<std::vector<int>> dual);

struct Witness {
  std::vector<int> tuple;  // quantified elements, in quantifier order
  int lhs = -1, rhs = -1;  // the two evaluated sides
  std::string part;        // sub-equation of a bundled axiom, empty otherwise
};

struct Verdict {
  bool pass = true;
  std::optional<Witness> witness;
};

struct AxiomReport {
  std::vector<std::pair<AxiomId, Verdict>> verdicts;
  bool degenerate = false;  // singleton carrier
};

// Core checker over raw tables; dual may be null when the axiom ignores it.
// Failing verdicts carry the lexicographically least witness tuple; bundled
// axioms report the first failing sub-equation in a fixed order.
Verdict check_axiom_raw(const Lattice& L, const int* weak, const int* dual,
                        AxiomId a);
Verdict check_axiom(const DicompAlgebra& A, AxiomId a);

AxiomReport report_for(const DicompAlgebra& A,
                       const std::vector<AxiomId>& axioms);
AxiomReport full_report(const DicompAlgebra& A);

// Complementation map of a Boolean lattice; NotBoolean with the structural
// reason otherwise.
std::vector<int> complementation_table(const Lattice& L);

// Duplicates the complementation into both tables.
DicompAlgebra make_boolean_wdl(const Lattice& L);

// Dicomplement (1,1) for 0, (0,0) for 1, (1,0) for interior elements.
DicompAlgebra make_trivial_dicomp(const Lattice& L);

// The single equation (x&y)|(x&~y) = (x|y)&(x|~y) over all pairs.
Verdict satisfies_single_axiom(const Lattice& L, const UnaryOp& op);

inline constexpr int kRecognizeBound = 7;

struct RecognizeResult {
  bool boolean = false;
  std::optional<UnaryOp> table;  // first satisfying table in lex order
  bool degenerate = false;       // singleton carrier
};

// Scans all n^n unary tables for one satisfying the single equation; the
// verdict is cross-checked against distributive+complemented (a mismatch
// throws std::logic_error).
RecognizeResult recognize_boolean(const Lattice& L,
                                  int bound = kRecognizeBound,
                                  int workers = 1);

// Replays the bound construction: x|~x is the top for every x, and its weak
// complement is the bottom. Requires A1-A3; PreconditionViolated names the
// failing axioms otherwise.
Verdict verify_bound_construction(const Lattice& L, const UnaryOp& weak);

}  // namespace wdl
