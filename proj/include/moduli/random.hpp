#pragma once

#include <random>

#include "moduli/symbols.hpp"

namespace moduli {

using Rng = std::mt19937_64;

Perm random_perm(Rng& rng, int n);
// Random binary tree with exactly the given number of leaves (at least `roots`).
BinaryTree random_tree(Rng& rng, int leaves, int roots = 1);
TreePairSymbol random_v(Rng& rng, int max_leaves, int roots = 1);
Automaton random_automaton(Rng& rng, int max_states);
SpheromorphismSymbol random_n(Rng& rng, int max_leaves, int max_states, int roots = 1);

}  // namespace moduli
