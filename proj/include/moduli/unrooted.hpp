#pragma once

#include <cstdint>
#include <vector>

#include "moduli/tree.hpp"

namespace moduli {

// Unrooted planar tree with N leaves at cyclic positions 0..N-1 and a label
// (0..N-1) on each position. Internal edges are stored as splits: the set of
// leaf positions on the side of the edge that avoids position 0, as a
// bitmask. Position 0 is the reference leaf fixing the planar embedding.
struct UnrootedLabeledTree {
    int N = 0;
    std::vector<std::uint64_t> splits;  // sorted
    std::vector<int> labels;            // labels[p] = label at position p

    UnrootedLabeledTree() = default;
    UnrootedLabeledTree(int leaves, std::vector<std::uint64_t> edge_splits, std::vector<int> lab);

    static UnrootedLabeledTree star(int leaves);
    // Roots at an extra leaf: position 0 carries label 0, position i the label sigma(i).
    static UnrootedLabeledTree from_rooted(const NestedCollection& c, const Perm& sigma);

    int dim() const { return N - 3 - static_cast<int>(splits.size()); }
    bool has_split(std::uint64_t s) const;
    // Planar isotopies: cyclic shift of positions and mirror image.
    UnrootedLabeledTree rotated(int k) const;
    UnrootedLabeledTree mirrored() const;
    UnrootedLabeledTree without(std::uint64_t s) const;

    friend bool operator==(const UnrootedLabeledTree&, const UnrootedLabeledTree&) = default;
    friend auto operator<=>(const UnrootedLabeledTree& a, const UnrootedLabeledTree& b) {
        if (auto c = a.N <=> b.N; c != 0) return c;
        if (auto c = a.labels <=> b.labels; c != 0) return c;
        return a.splits <=> b.splits;
    }
};

std::uint64_t full_mask(int N);
std::uint64_t normalize_split(std::uint64_t side, int N);
bool splits_compatible(std::uint64_t a, std::uint64_t b, int N);
// Positions of the split side, which is always a cyclic arc.
std::vector<int> split_positions(std::uint64_t s, int N);

// Reflect the side of edge e that avoids position 0 (down) or the side that
// contains it (up). Both are involutions.
UnrootedLabeledTree nabla_bar_down(const UnrootedLabeledTree& ut, std::uint64_t e);
UnrootedLabeledTree nabla_bar_up(const UnrootedLabeledTree& ut, std::uint64_t e);

// All sets of pairwise compatible splits (polygon dissections) for N leaves.
std::vector<std::vector<std::uint64_t>> all_dissections(int N);

// Each leaf doubled into a caret; used for the cyclic tower.
UnrootedLabeledTree expand_unrooted(const UnrootedLabeledTree& ut);

}  // namespace moduli
