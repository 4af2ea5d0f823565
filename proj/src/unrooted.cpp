#include "moduli/unrooted.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace moduli {

std::uint64_t full_mask(int N) { return N >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << N) - 1); }

std::uint64_t normalize_split(std::uint64_t side, int N) {
    return (side & 1u) ? (full_mask(N) & ~side) : side;
}

bool splits_compatible(std::uint64_t a, std::uint64_t b, int N) {
    const std::uint64_t ac = full_mask(N) & ~a, bc = full_mask(N) & ~b;
    return (a & b) == 0 || (a & bc) == 0 || (ac & b) == 0 || (ac & bc) == 0;
}

namespace {

bool is_interval_mask(std::uint64_t s) {
    if (s == 0) return false;
    const std::uint64_t shifted = s >> std::countr_zero(s);
    return (shifted & (shifted + 1)) == 0;
}

// Moves the leaf at position p to position pi[p].
UnrootedLabeledTree apply_positions(const UnrootedLabeledTree& ut, const std::vector<int>& pi) {
    UnrootedLabeledTree out;
    out.N = ut.N;
    out.labels.assign(static_cast<std::size_t>(ut.N), 0);
    for (int p = 0; p < ut.N; ++p) out.labels[static_cast<std::size_t>(pi[static_cast<std::size_t>(p)])] = ut.labels[static_cast<std::size_t>(p)];
    for (auto s : ut.splits) {
        std::uint64_t t = 0;
        for (int p = 0; p < ut.N; ++p)
            if (s >> p & 1u) t |= std::uint64_t{1} << pi[static_cast<std::size_t>(p)];
        out.splits.push_back(normalize_split(t, ut.N));
    }
    std::sort(out.splits.begin(), out.splits.end());
    return out;
}

std::vector<int> reflect_arc(int N, const std::vector<int>& arc) {
    std::vector<int> pi(static_cast<std::size_t>(N));
    for (int p = 0; p < N; ++p) pi[static_cast<std::size_t>(p)] = p;
    const std::size_t m = arc.size();
    for (std::size_t t = 0; t < m; ++t) pi[static_cast<std::size_t>(arc[t])] = arc[m - 1 - t];
    return pi;
}

}  // namespace

UnrootedLabeledTree::UnrootedLabeledTree(int leaves, std::vector<std::uint64_t> edge_splits,
                                         std::vector<int> lab)
    : N(leaves), splits(std::move(edge_splits)), labels(std::move(lab)) {
    if (N < 3 || N > 63) throw InputError("unrooted tree needs 3..63 leaves");
    if (static_cast<int>(labels.size()) != N) throw InputError("label count differs from leaf count");
    std::vector<char> seen(static_cast<std::size_t>(N), 0);
    for (int v : labels) {
        if (v < 0 || v >= N || seen[static_cast<std::size_t>(v)]) throw InputError("labels must be a permutation of 0..N-1");
        seen[static_cast<std::size_t>(v)] = 1;
    }
    for (auto& s : splits) {
        s = normalize_split(s & full_mask(N), N);
        const int k = std::popcount(s);
        if (k < 2 || k > N - 2 || !is_interval_mask(s)) throw InputError("split is not an internal edge");
    }
    std::sort(splits.begin(), splits.end());
    if (std::adjacent_find(splits.begin(), splits.end()) != splits.end()) throw InputError("repeated split");
    for (std::size_t i = 0; i < splits.size(); ++i)
        for (std::size_t j = i + 1; j < splits.size(); ++j)
            if (!splits_compatible(splits[i], splits[j], N)) throw InputError("crossing splits");
}

UnrootedLabeledTree UnrootedLabeledTree::star(int leaves) {
    std::vector<int> lab(static_cast<std::size_t>(leaves));
    for (int p = 0; p < leaves; ++p) lab[static_cast<std::size_t>(p)] = p;
    return UnrootedLabeledTree(leaves, {}, std::move(lab));
}

UnrootedLabeledTree UnrootedLabeledTree::from_rooted(const NestedCollection& c, const Perm& sigma) {
    if (sigma.size() != c.n) throw InputError("permutation size differs from leaf count");
    std::vector<int> lab(static_cast<std::size_t>(c.n + 1));
    lab[0] = 0;
    for (int i = 1; i <= c.n; ++i) lab[static_cast<std::size_t>(i)] = sigma(i);
    std::vector<std::uint64_t> sp;
    for (const auto& t : c.items) {
        std::uint64_t s = 0;
        for (int i = t.lo; i <= t.hi; ++i) s |= std::uint64_t{1} << i;
        sp.push_back(s);
    }
    return UnrootedLabeledTree(c.n + 1, std::move(sp), std::move(lab));
}

bool UnrootedLabeledTree::has_split(std::uint64_t s) const {
    return std::binary_search(splits.begin(), splits.end(), normalize_split(s, N));
}

UnrootedLabeledTree UnrootedLabeledTree::rotated(int k) const {
    std::vector<int> pi(static_cast<std::size_t>(N));
    for (int p = 0; p < N; ++p) pi[static_cast<std::size_t>(p)] = ((p + k) % N + N) % N;
    return apply_positions(*this, pi);
}

UnrootedLabeledTree UnrootedLabeledTree::mirrored() const {
    std::vector<int> pi(static_cast<std::size_t>(N));
    for (int p = 0; p < N; ++p) pi[static_cast<std::size_t>(p)] = (N - p) % N;
    return apply_positions(*this, pi);
}

UnrootedLabeledTree UnrootedLabeledTree::without(std::uint64_t s) const {
    UnrootedLabeledTree out = *this;
    const auto key = normalize_split(s, N);
    auto it = std::find(out.splits.begin(), out.splits.end(), key);
    if (it == out.splits.end()) throw InputError("edge is not internal to this tree");
    out.splits.erase(it);
    return out;
}

std::vector<int> split_positions(std::uint64_t s, int N) {
    std::vector<int> all;
    for (int p = 0; p < N; ++p)
        if (s >> p & 1u) all.push_back(p);
    if (all.empty() || all.size() == static_cast<std::size_t>(N)) return all;
    // Rotate so the arc starts right after a gap.
    std::size_t start = 0;
    for (std::size_t i = 0; i < all.size(); ++i) {
        const int prev = (all[i] - 1 + N) % N;
        if (!(s >> prev & 1u)) {
            start = i;
            break;
        }
    }
    std::rotate(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(start), all.end());
    return all;
}

UnrootedLabeledTree nabla_bar_down(const UnrootedLabeledTree& ut, std::uint64_t e) {
    if (!ut.has_split(e)) throw InputError("edge is not internal to this tree");
    const auto side = normalize_split(e, ut.N);
    return apply_positions(ut, reflect_arc(ut.N, split_positions(side, ut.N)));
}

UnrootedLabeledTree nabla_bar_up(const UnrootedLabeledTree& ut, std::uint64_t e) {
    if (!ut.has_split(e)) throw InputError("edge is not internal to this tree");
    const auto side = full_mask(ut.N) & ~normalize_split(e, ut.N);
    return apply_positions(ut, reflect_arc(ut.N, split_positions(side, ut.N)));
}

std::vector<std::vector<std::uint64_t>> all_dissections(int N) {
    std::vector<std::uint64_t> diag;
    for (int start = 0; start < N; ++start)
        for (int len = 2; len <= N - 2; ++len) {
            std::uint64_t s = 0;
            for (int t = 0; t < len; ++t) s |= std::uint64_t{1} << ((start + t) % N);
            diag.push_back(normalize_split(s, N));
        }
    std::sort(diag.begin(), diag.end());
    diag.erase(std::unique(diag.begin(), diag.end()), diag.end());
    std::vector<std::vector<std::uint64_t>> out;
    std::vector<std::uint64_t> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == diag.size()) {
            out.push_back(cur);
            return;
        }
        rec(i + 1);
        if (std::all_of(cur.begin(), cur.end(), [&](std::uint64_t d) { return splits_compatible(d, diag[i], N); })) {
            cur.push_back(diag[i]);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

UnrootedLabeledTree expand_unrooted(const UnrootedLabeledTree& ut) {
    const int M = 2 * ut.N;
    std::vector<int> lab(static_cast<std::size_t>(M));
    for (int p = 0; p < ut.N; ++p) {
        lab[static_cast<std::size_t>(2 * p)] = 2 * ut.labels[static_cast<std::size_t>(p)];
        lab[static_cast<std::size_t>(2 * p + 1)] = 2 * ut.labels[static_cast<std::size_t>(p)] + 1;
    }
    std::vector<std::uint64_t> sp;
    for (auto s : ut.splits) {
        std::uint64_t t = 0;
        for (int p = 0; p < ut.N; ++p)
            if (s >> p & 1u) t |= std::uint64_t{3} << (2 * p);
        sp.push_back(t);
    }
    for (int p = 0; p < ut.N; ++p) sp.push_back(std::uint64_t{3} << (2 * p));
    return UnrootedLabeledTree(M, std::move(sp), std::move(lab));
}

}  // namespace moduli
