#pragma once

#include <string>

#include "json.hpp"
#include "moduli/certificates.hpp"
#include "moduli/euler.hpp"
#include "moduli/f2.hpp"
#include "moduli/tower.hpp"

namespace moduli::io {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// Every top-level document carries {"schema_version", "kind"}.
Json document(const std::string& kind);
// Rejects a document of another kind or schema version; both keys are optional.
void expect_kind(const Json& j, const std::string& kind);
Json parse(const std::string& text);
Json read_file(const std::string& path);

Json to_json(const Perm& p);
Perm perm_from_json(const Json& j);

// Nested arrays with the leaves numbered 1..n from left to right: [[1,2],3].
Json to_json(const PlanarTree& t);
PlanarTree planar_tree_from_json(const Json& j);
Json to_json(const LabeledTree& t);
LabeledTree labeled_tree_from_json(const Json& j);

Json to_json(const NestedCollection& c);
NestedCollection collection_from_json(const Json& j, int n);

// Same nested-array shape; a top level with three entries is the three-branch tree.
Json to_json(const BinaryTree& t);
BinaryTree binary_tree_from_json(const Json& j);

Json to_json(const Automaton& a);
Automaton automaton_from_json(const Json& j);

// {target, source, perm, automata?}; automata are written only when some
// cone is moved nontrivially.
Json to_json(const SpheromorphismSymbol& s);
Json to_json(const TreePairSymbol& s);
SpheromorphismSymbol symbol_from_json(const Json& j);
// A symbol with an optional "word" member; the section word is used otherwise.
LiftedNSymbol lifted_from_json(const Json& j);
Json to_json(const LiftedNSymbol& s);

// A relation 2-cycle: {"pairs": [[a, b], ...]} standing for the product of the commutators [a, b].
// lifted is set when any member names its own word.
struct RelationDocument {
    std::vector<std::pair<LiftedNSymbol, LiftedNSymbol>> pairs;
    bool lifted = false;
};
Json relation_to_json(const std::vector<std::pair<LiftedNSymbol, LiftedNSymbol>>& pairs);
RelationDocument relation_from_json(const Json& j);

Json to_json(const QBWord& w);
QBWord word_from_json(const Json& j);
Json to_json(const DerivationStep& s);
DerivationStep step_from_json(const Json& j);
Json to_json(const Certificate& c);
Certificate certificate_from_json(const Json& j);

Json to_json(const RClassBit& r);
RClassBit rclass_from_json(const Json& j);

Json to_json(const StratumClass& c);
Json to_json(const UnrootedLabeledTree& t);
UnrootedLabeledTree unrooted_from_json(const Json& j);
Json to_json(const TowerCell& c);
TowerCell cell_from_json(const Json& j);

Json to_json(const CellComplexModel& m);

}  // namespace moduli::io
