#include "moduli/tree.hpp"

#include <algorithm>
#include <functional>

namespace moduli {

namespace {

bool proper_in(const Interval& t, int n) {
    return 1 <= t.lo && t.lo < t.hi && t.hi <= n && !(t.lo == 1 && t.hi == n);
}

}  // namespace

NestedCollection::NestedCollection(int ambient, std::vector<Interval> intervals)
    : n(ambient), items(std::move(intervals)) {
    std::sort(items.begin(), items.end());
    if (std::adjacent_find(items.begin(), items.end()) != items.end())
        throw InputError("duplicate interval in collection");
    for (const auto& t : items)
        if (!proper_in(t, n)) throw InputError("interval is not a proper block of 1..n");
    if (!is_nested(items)) throw InputError("collection is not nested");
}

bool NestedCollection::has(const Interval& t) const {
    return std::binary_search(items.begin(), items.end(), t);
}

NestedCollection NestedCollection::without(const Interval& t) const {
    NestedCollection c = *this;
    c.items.erase(std::remove(c.items.begin(), c.items.end(), t), c.items.end());
    return c;
}

PlanarTree PlanarTree::star(int n) {
    PlanarTree t;
    if (n >= 2) t.children.assign(static_cast<std::size_t>(n), PlanarTree::leaf());
    return t;
}

int PlanarTree::leaf_count() const {
    if (is_leaf()) return 1;
    int s = 0;
    for (const auto& c : children) s += c.leaf_count();
    return s;
}

bool PlanarTree::is_stable() const {
    if (is_leaf()) return true;
    if (children.size() < 2) return false;
    return std::all_of(children.begin(), children.end(),
                       [](const PlanarTree& c) { return c.is_stable(); });
}

Perm omega(const Interval& t, int n) { return Perm::reversal(n, t.lo, t.hi); }

Interval conjugate_interval(const Interval& t, const Interval& u) {
    if (!t.contains(u)) return u;
    return {t.lo + t.hi - u.hi, t.lo + t.hi - u.lo};
}

NestedCollection conjugate_collection(const Interval& t, const NestedCollection& c) {
    NestedCollection out;
    out.n = c.n;
    out.items.reserve(c.items.size());
    for (const auto& u : c.items) out.items.push_back(conjugate_interval(t, u));
    std::sort(out.items.begin(), out.items.end());
    return out;
}

bool is_nested(const std::vector<Interval>& c) {
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j)
            if (!c[i].compatible(c[j])) return false;
    return true;
}

NestedCollection tree_to_nested(const PlanarTree& t) {
    if (!t.is_stable()) throw InputError("tree has a vertex with fewer than two children");
    NestedCollection c;
    c.n = t.leaf_count();
    int next = 1;
    std::function<void(const PlanarTree&, bool)> walk = [&](const PlanarTree& v, bool is_root) {
        if (v.is_leaf()) {
            ++next;
            return;
        }
        const int lo = next;
        for (const auto& ch : v.children) walk(ch, false);
        if (!is_root) c.items.push_back({lo, next - 1});
    };
    walk(t, true);
    std::sort(c.items.begin(), c.items.end());
    return c;
}

PlanarTree nested_to_tree(const NestedCollection& c) {
    if (!is_nested(c.items)) throw InputError("collection is not nested");
    std::vector<Interval> items = c.items;
    // Outer intervals first so that each interval's maximal children follow it.
    std::sort(items.begin(), items.end(), [](const Interval& a, const Interval& b) {
        return a.lo != b.lo ? a.lo < b.lo : a.hi > b.hi;
    });
    std::function<PlanarTree(int, int, std::size_t&)> build = [&](int lo, int hi, std::size_t& k) {
        PlanarTree node;
        int x = lo;
        while (x <= hi) {
            if (k < items.size() && items[k].lo == x && items[k].hi <= hi) {
                const Interval cur = items[k++];
                node.children.push_back(build(cur.lo, cur.hi, k));
                x = cur.hi + 1;
            } else {
                node.children.push_back(PlanarTree::leaf());
                ++x;
            }
        }
        return node;
    };
    std::size_t k = 0;
    if (c.n <= 1) return PlanarTree::leaf();
    return build(1, c.n, k);
}

std::pair<NestedCollection, Perm> nabla_tilde(const NestedCollection& c, const Perm& sigma,
                                              const Interval& v) {
    if (!c.has(v)) throw InputError("vertex is not an interval of the collection");
    return {conjugate_collection(v, c), sigma * omega(v, c.n)};
}

LabeledTree nabla_tilde(const LabeledTree& lt, const Interval& v) {
    auto [c, p] = nabla_tilde(tree_to_nested(lt.tree), lt.perm, v);
    return {nested_to_tree(c), p};
}

Perm expand_perm(const Perm& sigma) {
    const int n = sigma.size();
    std::vector<int> img(static_cast<std::size_t>(2 * n));
    for (int i = 1; i <= n; ++i) {
        img[static_cast<std::size_t>(2 * i - 2)] = 2 * sigma(i) - 1;
        img[static_cast<std::size_t>(2 * i - 1)] = 2 * sigma(i);
    }
    return Perm(std::move(img));
}

Perm simple_expand_perm(const Perm& sigma, int m) {
    const int n = sigma.size();
    if (m < 1 || m > n) throw InputError("expansion label out of range");
    const int t = sigma(m);
    auto shift = [t](int v) { return v > t ? v + 1 : v; };
    std::vector<int> img;
    img.reserve(static_cast<std::size_t>(n + 1));
    for (int i = 1; i <= n; ++i) {
        if (i == m) {
            img.push_back(t);
            img.push_back(t + 1);
        } else {
            img.push_back(shift(sigma(i)));
        }
    }
    return Perm(std::move(img));
}

PlanarTree expand_tree(const PlanarTree& t) {
    if (t.is_leaf()) return PlanarTree::star(2);
    PlanarTree out;
    for (const auto& c : t.children) out.children.push_back(expand_tree(c));
    return out;
}

LabeledTree expand_tree(const LabeledTree& lt) {
    return {expand_tree(lt.tree), expand_perm(lt.perm)};
}

NestedCollection expand_collection(const NestedCollection& c) {
    NestedCollection out;
    out.n = 2 * c.n;
    for (const auto& t : c.items) out.items.push_back({2 * t.lo - 1, 2 * t.hi});
    if (c.n >= 2)
        for (int i = 1; i <= c.n; ++i) out.items.push_back({2 * i - 1, 2 * i});
    std::sort(out.items.begin(), out.items.end());
    return out;
}

std::vector<NestedCollection> all_nested_collections(int n) {
    std::vector<Interval> proper;
    for (int lo = 1; lo <= n; ++lo)
        for (int hi = lo + 1; hi <= n; ++hi)
            if (!(lo == 1 && hi == n)) proper.push_back({lo, hi});
    std::vector<NestedCollection> out;
    std::vector<Interval> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == proper.size()) {
            NestedCollection c;
            c.n = n;
            c.items = cur;
            out.push_back(std::move(c));
            return;
        }
        rec(i + 1);
        const Interval& t = proper[i];
        if (std::all_of(cur.begin(), cur.end(), [&](const Interval& u) { return u.compatible(t); })) {
            cur.push_back(t);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

}  // namespace moduli
