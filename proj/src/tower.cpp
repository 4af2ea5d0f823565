#include "moduli/tower.hpp"

#include <algorithm>

namespace moduli {

namespace {

int branch_offset(const BinaryTree& t) { return t.roots == 3 ? 1 : 0; }

// Index of a word of the complete tree of the given depth, 0-based.
int word_index(const std::string& w, int roots) {
    int v = 0;
    std::size_t k = 0;
    if (roots == 3) v = w[k++] - '0';
    for (; k < w.size(); ++k) v = 2 * v + (w[k] - '0');
    return v;
}

std::string index_word(int idx, int depth, int roots) {
    std::string w(static_cast<std::size_t>(depth), '0');
    for (int k = depth - 1; k >= 0; --k) {
        w[static_cast<std::size_t>(k)] = (idx & 1) ? '1' : '0';
        idx >>= 1;
    }
    if (roots == 3) w.insert(w.begin(), static_cast<char>('0' + idx));
    return w;
}

// What happens to each leaf position: label words below it after the action.
struct Refinement {
    int depth = 0;                              // new level
    std::vector<int> exponent;                  // per old position
    std::vector<std::vector<int>> new_labels;   // per old position, 0-based
};

Refinement refine(const SpheromorphismSymbol& g0, int level, const std::vector<int>& labels) {
    const int roots = g0.roots();
    const SpheromorphismSymbol g = expand_source_to_complete(g0, level);
    Refinement out;
    std::vector<int> tdepth(labels.size());
    for (std::size_t p = 0; p < labels.size(); ++p) {
        const int src = labels[p] + 1;
        const auto& t = g.target.leaves[static_cast<std::size_t>(g.leaf_map(src) - 1)];
        tdepth[p] = static_cast<int>(t.size()) - branch_offset(g.target);
        out.depth = std::max(out.depth, tdepth[p]);
    }
    const int cap = roots == 3 ? kMaxCyclicLevel : kMaxTildeLevel;
    if (out.depth > cap) throw ComputationError("image cell lies beyond the supported tower stage");
    for (std::size_t p = 0; p < labels.size(); ++p) {
        const int src = labels[p] + 1;
        const auto& t = g.target.leaves[static_cast<std::size_t>(g.leaf_map(src) - 1)];
        const Automaton& q = g.automata[static_cast<std::size_t>(src - 1)];
        const int r = out.depth - tdepth[p];
        out.exponent.push_back(r);
        std::vector<int> lab;
        for (int u = 0; u < (1 << r); ++u) lab.push_back(word_index(t + q.act(index_word(u, r, 1)), roots));
        out.new_labels.push_back(std::move(lab));
    }
    return out;
}

// Dyadic sub-blocks of size at least 2 inside a block of 2^r positions.
template <class Emit>
void inner_blocks(int start, int r, Emit emit) {
    for (int s = r; s >= 1; --s)
        for (int b = start; b < start + (1 << r); b += 1 << s) emit(b, b + (1 << s) - 1);
}

int expected_leaves(TowerVariant v, int level) { return v == TowerVariant::Tilde ? 1 << level : 3 << level; }

void check_level(TowerVariant v, int level) {
    const int lo = v == TowerVariant::Tilde ? 1 : 0;
    const int hi = v == TowerVariant::Tilde ? kMaxTildeLevel : kMaxCyclicLevel;
    if (level < lo || level > hi) throw InputError("tower stage out of range");
}

}  // namespace

std::string to_string(TowerVariant v) { return v == TowerVariant::Tilde ? "tilde" : "bar-cyclic"; }

TowerVariant tower_variant_from_string(const std::string& s) {
    if (s == "tilde") return TowerVariant::Tilde;
    if (s == "bar-cyclic" || s == "bar") return TowerVariant::BarCyclic;
    throw InputError("unknown tower variant: " + s);
}

int TowerCell::leaf_count() const { return expected_leaves(variant, level); }

int TowerCell::dim() const { return variant == TowerVariant::Tilde ? rooted.dim() : unrooted.dim(); }

TowerCell make_tilde_cell(int level, const NestedCollection& c, const Perm& sigma) {
    check_level(TowerVariant::Tilde, level);
    if (c.n != (1 << level) || sigma.size() != c.n) throw InputError("cell size does not match the tower stage");
    TowerCell out;
    out.variant = TowerVariant::Tilde;
    out.level = level;
    out.rooted = canonicalize(c, sigma);
    return out;
}

TowerCell make_cyclic_cell(int level, const UnrootedLabeledTree& t) {
    check_level(TowerVariant::BarCyclic, level);
    if (t.N != (3 << level)) throw InputError("cell size does not match the tower stage");
    TowerCell out;
    out.variant = TowerVariant::BarCyclic;
    out.level = level;
    out.unrooted = unrooted_canonical(t);
    return out;
}

TowerCell cyclic_base_point() { return make_cyclic_cell(0, UnrootedLabeledTree::star(3)); }

TowerCell top_cell(TowerVariant v, int level) {
    check_level(v, level);
    const int n = expected_leaves(v, level);
    if (v == TowerVariant::BarCyclic) return make_cyclic_cell(level, UnrootedLabeledTree::star(n));
    return make_tilde_cell(level, NestedCollection(n, {}), Perm::identity(n));
}

TowerCell stabilize_once(const TowerCell& c) {
    TowerCell out = c;
    ++out.level;
    check_level(c.variant, out.level);
    if (c.variant == TowerVariant::Tilde)
        out.rooted = stabilize_stratum(c.rooted);
    else
        out.unrooted = unrooted_canonical(expand_unrooted(c.unrooted));
    return out;
}

TowerCell stabilize_to(const TowerCell& c, int level) {
    if (level < c.level) throw InputError("cannot stabilize to a lower stage");
    TowerCell out = c;
    while (out.level < level) out = stabilize_once(out);
    return out;
}

bool same_cell(const TowerCell& a, const TowerCell& b) {
    if (a.variant != b.variant) return false;
    const int m = std::max(a.level, b.level);
    const TowerCell x = stabilize_to(a, m), y = stabilize_to(b, m);
    return a.variant == TowerVariant::Tilde ? x.rooted == y.rooted : x.unrooted == y.unrooted;
}

TowerCell act(const SpheromorphismSymbol& g, const TowerCell& c0) {
    g.validate();
    const bool cyclic = c0.variant == TowerVariant::BarCyclic;
    if ((g.roots() == 3) != cyclic) throw InputError("group element and tower variant do not match");
    const int src_depth = g.source.depth();
    const TowerCell c = stabilize_to(c0, std::max(c0.level, src_depth));
    const int K = c.leaf_count();

    std::vector<int> labels(static_cast<std::size_t>(K));
    for (int p = 0; p < K; ++p)
        labels[static_cast<std::size_t>(p)] =
            cyclic ? c.unrooted.labels[static_cast<std::size_t>(p)] : c.rooted.perm(p + 1) - 1;
    const Refinement rf = refine(g, c.level, labels);

    std::vector<int> offset(static_cast<std::size_t>(K) + 1, 0);
    for (int p = 0; p < K; ++p)
        offset[static_cast<std::size_t>(p) + 1] = offset[static_cast<std::size_t>(p)] + (1 << rf.exponent[static_cast<std::size_t>(p)]);
    std::vector<int> img;
    for (const auto& l : rf.new_labels) img.insert(img.end(), l.begin(), l.end());

    if (!cyclic) {
        std::vector<Interval> items;
        for (const auto& t : c.rooted.collection.items)
            items.push_back({offset[static_cast<std::size_t>(t.lo - 1)] + 1, offset[static_cast<std::size_t>(t.hi)]});
        for (int p = 0; p < K; ++p)
            inner_blocks(offset[static_cast<std::size_t>(p)] + 1, rf.exponent[static_cast<std::size_t>(p)],
                         [&](int lo, int hi) { items.push_back({lo, hi}); });
        for (auto& v : img) ++v;
        const int n = offset.back();
        return make_tilde_cell(rf.depth, NestedCollection(n, std::move(items)), Perm(std::move(img)));
    }
    auto mask = [](int lo, int hi) {
        std::uint64_t m = 0;
        for (int x = lo; x <= hi; ++x) m |= std::uint64_t{1} << x;
        return m;
    };
    std::vector<std::uint64_t> splits;
    for (auto s : c.unrooted.splits) {
        std::uint64_t m = 0;
        for (int p = 0; p < K; ++p)
            if (s >> p & 1u) m |= mask(offset[static_cast<std::size_t>(p)], offset[static_cast<std::size_t>(p) + 1] - 1);
        splits.push_back(m);
    }
    for (int p = 0; p < K; ++p)
        inner_blocks(offset[static_cast<std::size_t>(p)], rf.exponent[static_cast<std::size_t>(p)],
                     [&](int lo, int hi) { splits.push_back(mask(lo, hi)); });
    const int N = offset.back();
    return make_cyclic_cell(rf.depth, UnrootedLabeledTree(N, std::move(splits), std::move(img)));
}

TowerCell act(const TreePairSymbol& g, const TowerCell& c) { return act(to_spheromorphism(g), c); }

bool in_k_infinity(const TowerCell& c) {
    if (c.variant != TowerVariant::BarCyclic) throw InputError("the distinguished associahedron lives in the cyclic tower");
    // The canonical form carries the lexicographically least labels of the
    // class, so a rotation representative shows up as the identity labelling.
    for (int p = 0; p < c.unrooted.N; ++p)
        if (c.unrooted.labels[static_cast<std::size_t>(p)] != p) return false;
    return true;
}

CyclicSymbol involution_inv() {
    const Automaton flip{{{true, 0, 0}}, 0};
    const BinaryTree t = BinaryTree::trivial(3);
    return {t, t, Perm({3, 2, 1}), std::vector<Automaton>(3, flip)};
}

bool check_t_stabilizes(const CyclicSymbol& g, const std::vector<TowerCell>& cells) {
    return std::all_of(cells.begin(), cells.end(), [&](const TowerCell& c) { return in_k_infinity(act(g, c)); });
}

bool check_inv(const std::vector<TowerCell>& cells) { return check_t_stabilizes(involution_inv(), cells); }

TowerCell random_tower_cell(Rng& rng, TowerVariant v, int level) {
    check_level(v, level);
    const int n = expected_leaves(v, level);
    const Perm sigma = random_perm(rng, n);
    if (v == TowerVariant::Tilde) {
        std::vector<Interval> items;
        for (int tries = 0; tries < 3 * n; ++tries) {
            int lo = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
            int hi = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
            if (lo > hi) std::swap(lo, hi);
            const Interval t{lo, hi};
            if (lo == hi || (lo == 1 && hi == n) || std::find(items.begin(), items.end(), t) != items.end()) continue;
            if (std::all_of(items.begin(), items.end(), [&](const Interval& u) { return u.compatible(t); }))
                items.push_back(t);
        }
        return make_tilde_cell(level, NestedCollection(n, std::move(items)), sigma);
    }
    std::vector<std::uint64_t> splits;
    for (int tries = 0; n >= 4 && tries < 3 * n; ++tries) {
        const int start = static_cast<int>(rng() % static_cast<unsigned>(n));
        const int len = 2 + static_cast<int>(rng() % static_cast<unsigned>(n - 3));
        std::uint64_t s = 0;
        for (int k = 0; k < len; ++k) s |= std::uint64_t{1} << ((start + k) % n);
        s = normalize_split(s, n);
        if (std::find(splits.begin(), splits.end(), s) != splits.end()) continue;
        if (std::all_of(splits.begin(), splits.end(), [&](std::uint64_t d) { return splits_compatible(d, s, n); }))
            splits.push_back(s);
    }
    std::vector<int> lab(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p) lab[static_cast<std::size_t>(p)] = sigma(p + 1) - 1;
    return make_cyclic_cell(level, UnrootedLabeledTree(n, std::move(splits), std::move(lab)));
}

TowerCell random_k_infinity_cell(Rng& rng, int level) {
    TowerCell c = random_tower_cell(rng, TowerVariant::BarCyclic, level);
    UnrootedLabeledTree t = c.unrooted;
    for (int p = 0; p < t.N; ++p) t.labels[static_cast<std::size_t>(p)] = p;
    return make_cyclic_cell(level, t);
}

}  // namespace moduli
