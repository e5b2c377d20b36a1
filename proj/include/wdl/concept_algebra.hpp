#pragma once

// Formal contexts, derivation operators, and concept algebras: the concept
// lattice ordered by extent inclusion, equipped with weak negation
// ((G\A)'', (G\A)') and weak opposition ((M\B)', (M\B)'').

#include <cstdint>
#include <string>
#include <vector>

#include "wdl/algebra.hpp"

namespace wdl {

struct FormalContext {
  std::vector<std::string> objects;
  std::vector<std::string> attributes;
  std::vector<std::uint8_t> incidence;  // |G| x |M| row-major

  bool has(int g, int m) const {
    return incidence[static_cast<std::size_t>(g) * attributes.size() + m] != 0;
  }
};

// Burmeister layout: "B", blank line, object count, attribute count, blank
// line, object names, attribute names, then one ./X row per object.
FormalContext parse_cxt(const std::string& text);
std::string emit_cxt(const FormalContext& ctx);

enum class Side { Objects, Attributes };

// Attributes common to an object set, or dually; result ascending.
std::vector<int> derive(const FormalContext& ctx, Side side,
                        const std::vector<int>& subset);

struct FormalConcept {
  std::vector<int> extent;  // ascending object indices
  std::vector<int> intent;  // ascending attribute indices
};

inline constexpr std::uint64_t kConceptBudget = std::uint64_t{1} << 16;

struct ConceptAlgebra {
  DicompAlgebra algebra;  // element i is concepts[i]
  std::vector<FormalConcept> concepts;  // lectic order by extent
};

// Enumerates concepts in lectic order (a linear extension of extent
// inclusion, so element indices match concept positions), builds the lattice
// and both unary tables, and validates A1-A3' before returning.
ConceptAlgebra build_concept_algebra(const FormalContext& ctx,
                                     std::uint64_t budget = kConceptBudget);

}  // namespace wdl
