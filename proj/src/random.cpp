#include "moduli/random.hpp"

#include <algorithm>
#include <numeric>

namespace moduli {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

Perm random_perm(Rng& rng, int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    std::shuffle(img.begin(), img.end(), rng);
    return Perm(std::move(img));
}

BinaryTree random_tree(Rng& rng, int leaves, int roots) {
    BinaryTree t = BinaryTree::trivial(roots);
    if (leaves < t.leaf_count()) throw InputError("too few leaves for this tree model");
    while (t.leaf_count() < leaves) t = t.expanded(uniform(rng, 1, t.leaf_count()));
    return t;
}

TreePairSymbol random_v(Rng& rng, int max_leaves, int roots) {
    const int n = uniform(rng, roots, std::max(roots, max_leaves));
    return {random_tree(rng, n, roots), random_tree(rng, n, roots), random_perm(rng, n)};
}

Automaton random_automaton(Rng& rng, int max_states) {
    const int m = uniform(rng, 1, std::max(1, max_states));
    Automaton a;
    for (int q = 0; q < m; ++q)
        a.states.push_back({uniform(rng, 0, 1) == 1, uniform(rng, 0, m - 1), uniform(rng, 0, m - 1)});
    a.initial = 0;
    return a;
}

SpheromorphismSymbol random_n(Rng& rng, int max_leaves, int max_states, int roots) {
    SpheromorphismSymbol s = to_spheromorphism(random_v(rng, max_leaves, roots));
    for (auto& a : s.automata)
        a = uniform(rng, 0, 2) == 0 ? Automaton::identity() : random_automaton(rng, max_states);
    return s;
}

}  // namespace moduli
