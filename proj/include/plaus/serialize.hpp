#pragma once

#include <json.hpp>

#include "plaus/funcalg.hpp"
#include "plaus/semantics.hpp"
#include "plaus/ubiq.hpp"

namespace plaus {

using Json = nlohmann::json;

// Elements serialize as sorted lists of atom labels; the empty list is 0.
Json elem_to_json(const Elem& e);

Json algebra_to_json(const BoolAlgebraPtr& algebra);  // {"atoms": [...]}

// {"x1": ["a"], "x2": ["b"]}
Json prop_function_to_json(const PropFunction& p);

// explicit table: [[input, output], ...] in mask order
Json quantifier_to_json(const Quantifier& q);
Json upsilon_table_to_json(const UbiquityAlgebra& u);

// set of serialized elements, in mask order
Json ideal_to_json(const Ideal& ideal);

// {"algebra": ..., "exists": ..., "upsilon": ...}
Json ubiquity_to_json(const UbiquityAlgebra& u);

// {"domain": [...], "opens": [[...], ...]} with opens sorted canonically:
// each open as a sorted label list, the list of opens sorted lexicographically
Json space_to_json(const PseudoTopology& space);
PseudoTopology space_from_json(const Json& j);

// {"domain": [...], "opens": [[...], ...], "predicates": {"P": [["a"], ...]}}
Json structure_to_json(const PTStructure& k);
PTStructure structure_from_json(const Json& j);

Json verdict_to_json(const Verdict& verdict);

}  // namespace plaus
