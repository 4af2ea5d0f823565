#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "moduli/tree.hpp"
#include "moduli/unrooted.hpp"

namespace moduli {

// A cell [T, sigma] of the double cover, stored as the lexicographically
// least representative (perm first, then sorted intervals) of its class.
struct StratumClass {
    NestedCollection collection;
    Perm perm;

    int n() const { return perm.size(); }
    int dim() const { return n() - 2 - static_cast<int>(collection.size()); }

    friend bool operator==(const StratumClass&, const StratumClass&) = default;
    friend auto operator<=>(const StratumClass& a, const StratumClass& b) {
        if (auto c = a.perm <=> b.perm; c != 0) return c;
        return a.collection.items <=> b.collection.items;
    }
};

// All 2^|T| pairs (j_{T''} T, sigma omega_{T''}), factors in containment order.
std::vector<std::pair<NestedCollection, Perm>> class_representatives(const NestedCollection& c,
                                                                     const Perm& sigma);
// Minimum over class_representatives; the reference definition.
StratumClass canonicalize_bruteforce(const NestedCollection& c, const Perm& sigma);
// Same result in linear time: each vertex independently chooses the
// orientation of its children that minimizes the label sequence.
StratumClass canonicalize(const NestedCollection& c, const Perm& sigma);

bool is_face(const StratumClass& a, const StratumClass& b);
StratumClass antipodal(const StratumClass& c);
// Representative of the antipodal orbit: min of c and antipodal(c).
StratumClass bar_canonical(const StratumClass& c);
StratumClass stabilize_stratum(const StratumClass& c);

// Codimension-one cofaces of c with the number of (interval, side) choices
// producing each.
std::vector<std::pair<StratumClass, int>> cofaces(const StratumClass& c);

// Unrooted classes under the up/down moves and planar isotopy.
UnrootedLabeledTree unrooted_canonical_bfs(const UnrootedLabeledTree& ut);
std::vector<UnrootedLabeledTree> unrooted_orbit(const UnrootedLabeledTree& ut);
// Linear-time canonical form through the rooted model; agrees with the BFS one.
UnrootedLabeledTree unrooted_canonical(const UnrootedLabeledTree& ut);
std::vector<std::pair<UnrootedLabeledTree, int>> unrooted_cofaces(const UnrootedLabeledTree& ut);

struct CellComplexModel {
    int n = 0;
    std::string variant;  // "tilde", "bar", "bar-unrooted"
    std::vector<int> dims;
    // faces[i] = (index of a codimension-one face, multiplicity)
    std::vector<std::vector<std::pair<int, int>>> faces;
    std::vector<StratumClass> strata;             // tilde and bar
    std::vector<UnrootedLabeledTree> unrooted;    // bar-unrooted

    std::size_t cell_count() const { return dims.size(); }
    int top_dim() const { return n - 2; }
    std::vector<long long> f_vector() const;
    long long euler_characteristic() const;
};

inline constexpr int kDefaultMaxLeaves = 7;

CellComplexModel build_tilde_complex(int n, int max_n = kDefaultMaxLeaves);
CellComplexModel build_bar_complex(int n, int max_n = kDefaultMaxLeaves);
CellComplexModel build_bar_complex_unrooted(int n, int max_n = kDefaultMaxLeaves);

}  // namespace moduli
