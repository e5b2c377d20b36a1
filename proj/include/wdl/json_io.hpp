#pragma once

// JSON encodings with stable key order, so equal values serialize to equal
// bytes. Lattices round-trip through their cover relation.

#include <json.hpp>
#include <string>

#include "wdl/algebra.hpp"
#include "wdl/concept_algebra.hpp"
#include "wdl/congruence.hpp"
#include "wdl/enumerate.hpp"

namespace wdl {

using ordered_json = nlohmann::ordered_json;

ordered_json lattice_to_json(const Lattice& L);
Lattice lattice_from_json(const ordered_json& j);

ordered_json algebra_to_json(const DicompAlgebra& A);
// Tables given in the input indexing are conjugated by the relabeling the
// lattice build applies.
DicompAlgebra algebra_from_json(const ordered_json& j);

ordered_json report_to_json(const AxiomReport& r);
ordered_json congruence_to_json(const Congruence& c);
ordered_json homomorphism_to_json(const Homomorphism& h);
ordered_json search_report_to_json(const SearchReport& r);
ordered_json concepts_to_json(const FormalContext& ctx,
                              const std::vector<FormalConcept>& concepts);

std::string read_text_file(const std::string& path);  // Error on failure

}  // namespace wdl
