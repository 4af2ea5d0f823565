#include "moduli/symbols.hpp"

#include <algorithm>
#include <functional>

namespace moduli {

namespace {

bool starts_with(const std::string& w, const std::string& p) {
    return w.size() >= p.size() && std::equal(p.begin(), p.end(), w.begin());
}

// Leaves a and b are the two children of one binary vertex.
bool siblings(const BinaryTree& t, const std::string& a, const std::string& b) {
    const std::size_t floor = t.roots == 3 ? 1 : 0;
    return a.size() == b.size() && a.size() > floor && a.back() == '0' && b.back() == '1' &&
           std::equal(a.begin(), a.end() - 1, b.begin());
}

// Proper prefix of some leaf, i.e. an internal vertex of t.
bool internal_in(const BinaryTree& t, const std::string& w) { return t.contains_node(w) && t.index_of(w) == 0; }

// Source leaf i splits into two leaves, the image leaf j into two; child c of
// the source goes to child c xor cross of the target.
Perm split_perm(const Perm& p, int i, bool cross) {
    const int n = p.size();
    const int j = p(i);
    auto adj = [j](int v) { return v > j ? v + 1 : v; };
    std::vector<int> img;
    img.reserve(static_cast<std::size_t>(n + 1));
    for (int k = 1; k <= n; ++k) {
        if (k == i) {
            img.push_back(cross ? j + 1 : j);
            img.push_back(cross ? j : j + 1);
        } else {
            img.push_back(adj(p(k)));
        }
    }
    return Perm(std::move(img));
}

// Source leaves i, i+1 merge, as do the image leaves j, j+1.
Perm merge_perm(const Perm& p, int i, int j) {
    const int n = p.size();
    auto adj = [j](int v) { return v > j + 1 ? v - 1 : v; };
    std::vector<int> img;
    for (int k = 1; k <= n; ++k) {
        if (k == i) img.push_back(j);
        else if (k == i + 1) continue;
        else img.push_back(adj(p(k)));
    }
    return Perm(std::move(img));
}

BinaryTree merge_leaves(const BinaryTree& t, int i) {
    BinaryTree out = t;
    auto& L = out.leaves;
    std::string parent = L[static_cast<std::size_t>(i - 1)];
    parent.pop_back();
    L.erase(L.begin() + (i - 1), L.begin() + (i + 1));
    L.insert(L.begin() + (i - 1), parent);
    return out;
}

// Expands a and b until b's target equals a's source.
template <class S, class Exp>
void align(S& b, S& a, Exp expand, const Perm S::*perm_field) {
    if (a.source.roots != b.target.roots) throw InputError("symbols live on different tree models");
    for (;;) {
        bool changed = false;
        for (int j = 1; j <= b.target.leaf_count() && !changed; ++j)
            if (internal_in(a.source, b.target.leaves[static_cast<std::size_t>(j - 1)])) {
                const Perm inv = (b.*perm_field).inverse();
                b = expand(b, inv(j));
                changed = true;
            }
        for (int i = 1; i <= a.source.leaf_count() && !changed; ++i)
            if (internal_in(b.target, a.source.leaves[static_cast<std::size_t>(i - 1)])) {
                a = expand(a, i);
                changed = true;
            }
        if (!changed) break;
    }
    if (!(a.source == b.target)) throw ComputationError("tree alignment failed");
}

}  // namespace

BinaryTree BinaryTree::trivial(int roots) {
    if (roots == 1) return {1, {""}};
    if (roots == 3) return {3, {"0", "1", "2"}};
    throw InputError("tree must have 1 or 3 roots");
}

BinaryTree BinaryTree::complete(int depth, int roots) {
    if (depth < 0 || depth > 24) throw InputError("complete tree depth out of range");
    BinaryTree t = trivial(roots);
    std::vector<std::string> cur = t.leaves;
    for (int d = 0; d < depth; ++d) {
        std::vector<std::string> next;
        for (const auto& w : cur) {
            next.push_back(w + '0');
            next.push_back(w + '1');
        }
        cur.swap(next);
    }
    t.leaves = std::move(cur);
    return t;
}

void BinaryTree::validate() const {
    if (roots != 1 && roots != 3) throw InputError("tree must have 1 or 3 roots");
    if (leaves.empty()) throw InputError("tree has no leaves");
    if (!std::is_sorted(leaves.begin(), leaves.end())) throw InputError("leaves are not in planar order");
    for (const auto& w : leaves)
        for (std::size_t k = 0; k < w.size(); ++k) {
            const char lim = (roots == 3 && k == 0) ? '2' : '1';
            if (w[k] < '0' || w[k] > lim) throw InputError("invalid leaf word '" + w + "'");
        }
    // Recursive completeness check on the sorted range sharing a prefix.
    std::function<void(std::size_t, std::size_t, const std::string&)> check = [&](std::size_t lo, std::size_t hi,
                                                                                   const std::string& p) {
        if (lo == hi) throw InputError("tree is missing the subtree at '" + p + "'");
        if (hi - lo == 1 && leaves[lo] == p) return;
        if (leaves[lo] == p) throw InputError("leaf '" + p + "' is a prefix of another leaf");
        const bool top3 = roots == 3 && p.empty();
        std::size_t a = lo;
        for (char c = '0'; c <= (top3 ? '2' : '1'); ++c) {
            const std::string q = p + c;
            std::size_t b = a;
            while (b < hi && starts_with(leaves[b], q)) ++b;
            check(a, b, q);
            a = b;
        }
        if (a != hi) throw InputError("stray leaves below '" + p + "'");
    };
    if (roots == 3 && leaves.size() < 3) throw InputError("three-branch tree needs three leaves");
    check(0, leaves.size(), "");
}

int BinaryTree::index_of(const std::string& w) const {
    auto it = std::lower_bound(leaves.begin(), leaves.end(), w);
    if (it == leaves.end() || *it != w) return 0;
    return static_cast<int>(it - leaves.begin()) + 1;
}

BinaryTree BinaryTree::expanded(int i) const {
    if (i < 1 || i > leaf_count()) throw InputError("leaf index out of range");
    BinaryTree out = *this;
    const std::string w = leaves[static_cast<std::size_t>(i - 1)];
    out.leaves[static_cast<std::size_t>(i - 1)] = w + '0';
    out.leaves.insert(out.leaves.begin() + i, w + '1');
    return out;
}

bool BinaryTree::contains_node(const std::string& w) const {
    auto it = std::lower_bound(leaves.begin(), leaves.end(), w);
    if (it != leaves.end() && starts_with(*it, w)) return true;
    // w may lie strictly below a leaf; that is not a node of this tree.
    return false;
}

int BinaryTree::depth() const {
    std::size_t m = 0;
    for (const auto& w : leaves) m = std::max(m, w.size());
    return static_cast<int>(m) - (roots == 3 ? 1 : 0);
}

TreePairSymbol TreePairSymbol::identity(int roots) {
    BinaryTree t = BinaryTree::trivial(roots);
    return {t, t, Perm::identity(t.leaf_count())};
}

void TreePairSymbol::validate() const {
    target.validate();
    source.validate();
    if (target.roots != source.roots) throw InputError("source and target use different tree models");
    if (target.leaf_count() != source.leaf_count() || perm.size() != source.leaf_count())
        throw InputError("leaf counts of the symbol disagree");
}

SpheromorphismSymbol SpheromorphismSymbol::identity(int roots) { return to_spheromorphism(TreePairSymbol::identity(roots)); }

void SpheromorphismSymbol::validate() const {
    target.validate();
    source.validate();
    if (target.roots != source.roots) throw InputError("source and target use different tree models");
    if (target.leaf_count() != source.leaf_count() || leaf_map.size() != source.leaf_count() ||
        static_cast<int>(automata.size()) != source.leaf_count())
        throw InputError("leaf counts of the symbol disagree");
    for (const auto& a : automata) a.validate();
}

TreePairSymbol expand_symbol(const TreePairSymbol& s, int i) {
    if (i < 1 || i > s.source.leaf_count()) throw InputError("leaf index out of range");
    return {s.target.expanded(s.perm(i)), s.source.expanded(i), split_perm(s.perm, i, false)};
}

TreePairSymbol reduce_symbol(const TreePairSymbol& s) {
    s.validate();
    TreePairSymbol cur = s;
    for (bool again = true; again;) {
        again = false;
        for (int i = 1; i < cur.source.leaf_count(); ++i) {
            const int j = cur.perm(i);
            if (cur.perm(i + 1) != j + 1) continue;
            const auto& src = cur.source.leaves;
            const auto& tgt = cur.target.leaves;
            if (!siblings(cur.source, src[static_cast<std::size_t>(i - 1)], src[static_cast<std::size_t>(i)])) continue;
            if (!siblings(cur.target, tgt[static_cast<std::size_t>(j - 1)], tgt[static_cast<std::size_t>(j)])) continue;
            cur = {merge_leaves(cur.target, j), merge_leaves(cur.source, i), merge_perm(cur.perm, i, j)};
            again = true;
            break;
        }
    }
    return cur;
}

TreePairSymbol compose_v(const TreePairSymbol& a0, const TreePairSymbol& b0) {
    a0.validate();
    b0.validate();
    TreePairSymbol a = a0, b = b0;
    align(b, a, expand_symbol, &TreePairSymbol::perm);
    return reduce_symbol({a.target, b.source, a.perm * b.perm});
}

TreePairSymbol inverse_v(const TreePairSymbol& s) {
    s.validate();
    return {s.source, s.target, s.perm.inverse()};
}

bool equal_v(const TreePairSymbol& a, const TreePairSymbol& b) { return reduce_symbol(a) == reduce_symbol(b); }

SpheromorphismSymbol to_spheromorphism(const TreePairSymbol& s) {
    s.validate();
    return {s.target, s.source, s.perm,
            std::vector<Automaton>(static_cast<std::size_t>(s.source.leaf_count()), Automaton::identity())};
}

SpheromorphismSymbol expand_spheromorphism(const SpheromorphismSymbol& s, int i) {
    if (i < 1 || i > s.leaf_count()) throw InputError("leaf index out of range");
    const Automaton& q = s.automata[static_cast<std::size_t>(i - 1)];
    const AutState& st = q.states[static_cast<std::size_t>(q.initial)];
    SpheromorphismSymbol out{s.target.expanded(s.leaf_map(i)), s.source.expanded(i), split_perm(s.leaf_map, i, st.swap),
                             s.automata};
    out.automata[static_cast<std::size_t>(i - 1)] = q.at_state(st.left).canonical();
    out.automata.insert(out.automata.begin() + i, q.at_state(st.right).canonical());
    return out;
}

SpheromorphismSymbol reduce_spheromorphism(const SpheromorphismSymbol& s) {
    s.validate();
    SpheromorphismSymbol cur = s;
    for (auto& a : cur.automata) a = a.canonical();
    for (bool again = true; again;) {
        again = false;
        for (int i = 1; i < cur.leaf_count(); ++i) {
            const auto& src = cur.source.leaves;
            if (!siblings(cur.source, src[static_cast<std::size_t>(i - 1)], src[static_cast<std::size_t>(i)])) continue;
            const int x = cur.leaf_map(i), y = cur.leaf_map(i + 1);
            if (std::abs(x - y) != 1) continue;
            const int j = std::min(x, y);
            const auto& tgt = cur.target.leaves;
            if (!siblings(cur.target, tgt[static_cast<std::size_t>(j - 1)], tgt[static_cast<std::size_t>(j)])) continue;
            Automaton joined = automaton_join(x > y, cur.automata[static_cast<std::size_t>(i - 1)],
                                              cur.automata[static_cast<std::size_t>(i)]);
            SpheromorphismSymbol next{merge_leaves(cur.target, j), merge_leaves(cur.source, i),
                                      merge_perm(cur.leaf_map, i, j), cur.automata};
            next.automata[static_cast<std::size_t>(i - 1)] = std::move(joined);
            next.automata.erase(next.automata.begin() + i);
            cur = std::move(next);
            again = true;
            break;
        }
    }
    return cur;
}

SpheromorphismSymbol compose_n(const SpheromorphismSymbol& a0, const SpheromorphismSymbol& b0) {
    a0.validate();
    b0.validate();
    SpheromorphismSymbol a = a0, b = b0;
    align(b, a, expand_spheromorphism, &SpheromorphismSymbol::leaf_map);
    SpheromorphismSymbol out{a.target, b.source, a.leaf_map * b.leaf_map, {}};
    for (int i = 1; i <= b.leaf_count(); ++i)
        out.automata.push_back(automaton_compose(a.automata[static_cast<std::size_t>(b.leaf_map(i) - 1)],
                                                 b.automata[static_cast<std::size_t>(i - 1)])
                                   .canonical());
    return reduce_spheromorphism(out);
}

SpheromorphismSymbol inverse_n(const SpheromorphismSymbol& s) {
    s.validate();
    const Perm inv = s.leaf_map.inverse();
    SpheromorphismSymbol out{s.source, s.target, inv, {}};
    for (int j = 1; j <= s.leaf_count(); ++j)
        out.automata.push_back(automaton_inverse(s.automata[static_cast<std::size_t>(inv(j) - 1)]).canonical());
    return out;
}

bool equal_n(const SpheromorphismSymbol& a, const SpheromorphismSymbol& b) {
    const auto ra = reduce_spheromorphism(a), rb = reduce_spheromorphism(b);
    if (!(ra.source == rb.source) || !(ra.target == rb.target) || ra.leaf_map != rb.leaf_map) return false;
    for (std::size_t i = 0; i < ra.automata.size(); ++i)
        if (!automaton_equal(ra.automata[i], rb.automata[i])) return false;
    return true;
}

SpheromorphismSymbol expand_source_to_complete(const SpheromorphismSymbol& s, int depth) {
    s.validate();
    const std::size_t len = static_cast<std::size_t>(depth) + (s.roots() == 3 ? 1 : 0);
    SpheromorphismSymbol cur = s;
    for (int i = 1; i <= cur.leaf_count();) {
        const auto& w = cur.source.leaves[static_cast<std::size_t>(i - 1)];
        if (w.size() > len) throw InputError("symbol source is deeper than the requested level");
        if (w.size() < len) cur = expand_spheromorphism(cur, i);
        else ++i;
    }
    return cur;
}

std::optional<TreePairSymbol> to_tree_pair(const SpheromorphismSymbol& s) {
    SpheromorphismSymbol cur = reduce_spheromorphism(s);
    for (const auto& a : cur.automata)
        if (!a.is_finitary()) return std::nullopt;
    for (int i = 1; i <= cur.leaf_count();) {
        if (!cur.automata[static_cast<std::size_t>(i - 1)].is_identity()) cur = expand_spheromorphism(cur, i);
        else ++i;
    }
    return reduce_symbol({cur.target, cur.source, cur.leaf_map});
}

std::string act_on_word(const SpheromorphismSymbol& s, const std::string& w) {
    const auto& L = s.source.leaves;
    auto it = std::upper_bound(L.begin(), L.end(), w);
    if (it == L.begin() || !starts_with(w, *(it - 1))) throw InputError("word does not reach a source leaf");
    const auto i = static_cast<int>(it - L.begin());
    const std::string& leaf = L[static_cast<std::size_t>(i - 1)];
    return s.target.leaves[static_cast<std::size_t>(s.leaf_map(i) - 1)] +
           s.automata[static_cast<std::size_t>(i - 1)].act(w.substr(leaf.size()));
}

std::string to_string(Membership m) {
    switch (m) {
        case Membership::F: return "F";
        case Membership::T: return "T";
        case Membership::V: return "V";
        case Membership::NOnly: return "N";
    }
    return "?";
}

Membership membership(const TreePairSymbol& s) {
    const TreePairSymbol r = reduce_symbol(s);
    if (r.perm.is_identity()) return Membership::F;
    if (r.perm.is_rotation()) return Membership::T;
    return Membership::V;
}

Membership membership(const SpheromorphismSymbol& s) {
    const auto v = to_tree_pair(s);
    return v ? membership(*v) : Membership::NOnly;
}

namespace {

BinaryTree graft_on_branch0(const BinaryTree& t) {
    if (t.roots != 1) throw InputError("only rooted symbols can be grafted");
    BinaryTree out{3, {}};
    for (const auto& w : t.leaves) out.leaves.push_back('0' + w);
    out.leaves.push_back("1");
    out.leaves.push_back("2");
    return out;
}

Perm extend_fixing(const Perm& p, int extra) {
    std::vector<int> img = p.images();
    for (int k = 1; k <= extra; ++k) img.push_back(p.size() + k);
    return Perm(std::move(img));
}

}  // namespace

TreePairSymbol to_cyclic(const TreePairSymbol& s) {
    s.validate();
    return {graft_on_branch0(s.target), graft_on_branch0(s.source), extend_fixing(s.perm, 2)};
}

SpheromorphismSymbol to_cyclic(const SpheromorphismSymbol& s) {
    s.validate();
    SpheromorphismSymbol out{graft_on_branch0(s.target), graft_on_branch0(s.source), extend_fixing(s.leaf_map, 2),
                             s.automata};
    out.automata.push_back(Automaton::identity());
    out.automata.push_back(Automaton::identity());
    return out;
}

}  // namespace moduli
