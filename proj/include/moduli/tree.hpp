#pragma once

#include <compare>
#include <vector>

#include "moduli/perm.hpp"

namespace moduli {

// A block [lo, hi] of consecutive leaf labels. For the type-A Coxeter graph
// the connected generator subsets are exactly such blocks.
struct Interval {
    int lo = 1;
    int hi = 1;

    int size() const { return hi - lo + 1; }
    bool contains(const Interval& u) const { return lo <= u.lo && u.hi <= hi; }
    bool contains_label(int x) const { return lo <= x && x <= hi; }
    bool label_disjoint(const Interval& u) const { return hi < u.lo || u.hi < lo; }
    // Nested or label-disjoint: the pair may sit in one nested collection.
    bool compatible(const Interval& u) const {
        return contains(u) || u.contains(*this) || label_disjoint(u);
    }

    friend bool operator==(const Interval&, const Interval&) = default;
    friend auto operator<=>(const Interval&, const Interval&) = default;
};

// A set of proper intervals of {1..n}, pairwise nested or label-disjoint,
// kept sorted by (lo, hi).
struct NestedCollection {
    int n = 0;
    std::vector<Interval> items;

    NestedCollection() = default;
    // Validates and sorts; throws InputError on non-nested or improper input.
    NestedCollection(int ambient, std::vector<Interval> intervals);

    std::size_t size() const { return items.size(); }
    bool has(const Interval& t) const;
    NestedCollection without(const Interval& t) const;

    friend bool operator==(const NestedCollection&, const NestedCollection&) = default;
    friend auto operator<=>(const NestedCollection&, const NestedCollection&) = default;
};

// Rooted planar tree. A node without children is a leaf; leaves are numbered
// 1..n from left to right.
struct PlanarTree {
    std::vector<PlanarTree> children;

    static PlanarTree leaf() { return {}; }
    static PlanarTree star(int n);

    bool is_leaf() const { return children.empty(); }
    int leaf_count() const;
    // Every internal vertex has at least two children.
    bool is_stable() const;

    friend bool operator==(const PlanarTree&, const PlanarTree&) = default;
};

struct LabeledTree {
    PlanarTree tree;
    Perm perm;

    friend bool operator==(const LabeledTree&, const LabeledTree&) = default;
};

Perm omega(const Interval& t, int n);
Interval conjugate_interval(const Interval& t, const Interval& u);
// j_T applied to every member of the collection.
NestedCollection conjugate_collection(const Interval& t, const NestedCollection& c);

bool is_nested(const std::vector<Interval>& c);
NestedCollection tree_to_nested(const PlanarTree& t);
PlanarTree nested_to_tree(const NestedCollection& c);

LabeledTree nabla_tilde(const LabeledTree& lt, const Interval& v);
// Collection-level form of the same move.
std::pair<NestedCollection, Perm> nabla_tilde(const NestedCollection& c, const Perm& sigma,
                                              const Interval& v);

Perm expand_perm(const Perm& sigma);
Perm simple_expand_perm(const Perm& sigma, int m);
PlanarTree expand_tree(const PlanarTree& t);
LabeledTree expand_tree(const LabeledTree& lt);
// Collection of expand_tree: doubled originals together with the new carets.
NestedCollection expand_collection(const NestedCollection& c);

// Every nested collection of proper intervals of {1..n} (including the empty one).
std::vector<NestedCollection> all_nested_collections(int n);

}  // namespace moduli
