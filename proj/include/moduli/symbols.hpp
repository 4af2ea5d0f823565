#pragma once

#include <optional>
#include <string>
#include <vector>

#include "moduli/automaton.hpp"
#include "moduli/perm.hpp"

namespace moduli {

// A finite rooted binary tree given by its leaves as a complete prefix code,
// sorted so that lexicographic order is the planar order. With roots = 3 the
// tree is a forest of three binary branches glued at a marked trivalent
// vertex: every leaf word starts with the branch digit '0', '1' or '2'.
struct BinaryTree {
    int roots = 1;
    std::vector<std::string> leaves;

    static BinaryTree trivial(int roots = 1);
    static BinaryTree complete(int depth, int roots = 1);
    void validate() const;

    int leaf_count() const { return static_cast<int>(leaves.size()); }
    // 1-based index of a leaf word, 0 when absent.
    int index_of(const std::string& w) const;
    BinaryTree expanded(int i) const;
    // True when w is a leaf or a proper prefix of a leaf.
    bool contains_node(const std::string& w) const;
    // Depth of the deepest leaf below the marked root(s).
    int depth() const;

    friend bool operator==(const BinaryTree&, const BinaryTree&) = default;
    friend auto operator<=>(const BinaryTree&, const BinaryTree&) = default;
};

// Element of V (or its cyclic analogue): source leaf i is carried onto target
// leaf perm(i), order preserving inside the cones.
struct TreePairSymbol {
    BinaryTree target;
    BinaryTree source;
    Perm perm;

    static TreePairSymbol identity(int roots = 1);
    void validate() const;
    int roots() const { return source.roots; }

    friend bool operator==(const TreePairSymbol&, const TreePairSymbol&) = default;
};

// Element of N: source leaf i is carried onto target leaf leaf_map(i), the
// cone below it being moved by automata[i-1].
struct SpheromorphismSymbol {
    BinaryTree target;
    BinaryTree source;
    Perm leaf_map;
    std::vector<Automaton> automata;

    static SpheromorphismSymbol identity(int roots = 1);
    void validate() const;
    int roots() const { return source.roots; }
    int leaf_count() const { return source.leaf_count(); }

    friend bool operator==(const SpheromorphismSymbol&, const SpheromorphismSymbol&) = default;
};

// Symbols over the three-branch tree carry the cyclic groups.
using CyclicSymbol = SpheromorphismSymbol;

TreePairSymbol expand_symbol(const TreePairSymbol& s, int i);
TreePairSymbol reduce_symbol(const TreePairSymbol& s);
TreePairSymbol compose_v(const TreePairSymbol& a, const TreePairSymbol& b);
TreePairSymbol inverse_v(const TreePairSymbol& s);
bool equal_v(const TreePairSymbol& a, const TreePairSymbol& b);

SpheromorphismSymbol to_spheromorphism(const TreePairSymbol& s);
SpheromorphismSymbol expand_spheromorphism(const SpheromorphismSymbol& s, int i);
// Contracts every source sibling pair sent onto a target sibling pair, in
// either order, absorbing the routing into the automata. Unique normal form.
SpheromorphismSymbol reduce_spheromorphism(const SpheromorphismSymbol& s);
SpheromorphismSymbol compose_n(const SpheromorphismSymbol& a, const SpheromorphismSymbol& b);
SpheromorphismSymbol inverse_n(const SpheromorphismSymbol& s);
bool equal_n(const SpheromorphismSymbol& a, const SpheromorphismSymbol& b);
// Expands until the source tree is the complete tree of the given depth.
SpheromorphismSymbol expand_source_to_complete(const SpheromorphismSymbol& s, int depth);
// Expands until every automaton is the identity; succeeds exactly for elements of V.
std::optional<TreePairSymbol> to_tree_pair(const SpheromorphismSymbol& s);

// Image of an infinite word, given by a prefix long enough to pass a source leaf.
std::string act_on_word(const SpheromorphismSymbol& s, const std::string& w);

enum class Membership { F, T, V, NOnly };
std::string to_string(Membership m);
Membership membership(const TreePairSymbol& s);
Membership membership(const SpheromorphismSymbol& s);

// Grafts a rooted element on branch 0 of the three-branch tree, identity elsewhere.
TreePairSymbol to_cyclic(const TreePairSymbol& s);
SpheromorphismSymbol to_cyclic(const SpheromorphismSymbol& s);

}  // namespace moduli
