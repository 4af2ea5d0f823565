#pragma once

#include <string>

#include "moduli/random.hpp"
#include "moduli/strata.hpp"
#include "moduli/symbols.hpp"

namespace moduli {

enum class TowerVariant { Tilde, BarCyclic };
std::string to_string(TowerVariant v);
TowerVariant tower_variant_from_string(const std::string& s);

// A cell of a tower at a finite stage. Tilde stage n has 2^n labelled leaves
// (rooted model); the cyclic bar stage n has 3*2^n (unrooted model). Labels
// name the leaves of the complete tree of that depth in lexicographic order.
struct TowerCell {
    TowerVariant variant = TowerVariant::Tilde;
    int level = 0;
    StratumClass rooted;
    UnrootedLabeledTree unrooted;

    int leaf_count() const;
    int dim() const;
};

inline constexpr int kMaxTildeLevel = 16;
inline constexpr int kMaxCyclicLevel = 4;

// Canonicalizes the data and checks sizes against the level.
TowerCell make_tilde_cell(int level, const NestedCollection& c, const Perm& sigma);
TowerCell make_cyclic_cell(int level, const UnrootedLabeledTree& t);
// The class of the unique point of the three-point moduli space.
TowerCell cyclic_base_point();
// Open cell with the identity labelling.
TowerCell top_cell(TowerVariant v, int level);

TowerCell stabilize_once(const TowerCell& c);
TowerCell stabilize_to(const TowerCell& c, int level);
// Equality in the inductive limit.
bool same_cell(const TowerCell& a, const TowerCell& b);

// Rooted symbols act on the tilde tower, three-branch symbols on the cyclic one.
TowerCell act(const SpheromorphismSymbol& g, const TowerCell& c);
TowerCell act(const TreePairSymbol& g, const TowerCell& c);

bool in_k_infinity(const TowerCell& c);
// Orientation reversal of the circle: full label reversal at every stage.
CyclicSymbol involution_inv();
// Images of all cells stay in the distinguished associahedron.
bool check_t_stabilizes(const CyclicSymbol& g, const std::vector<TowerCell>& cells);
bool check_inv(const std::vector<TowerCell>& cells);

TowerCell random_tower_cell(Rng& rng, TowerVariant v, int level);
// A random cell of the distinguished associahedron: identity labels.
TowerCell random_k_infinity_cell(Rng& rng, int level);

}  // namespace moduli
