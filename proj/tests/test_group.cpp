#include <functional>
#include <set>

#include "doctest.h"
#include "moduli/random.hpp"
#include "moduli/symbols.hpp"

using namespace moduli;

namespace {

std::vector<std::string> words_of_length(int len, int roots = 1) {
    std::vector<std::string> out = roots == 3 ? std::vector<std::string>{"0", "1", "2"} : std::vector<std::string>{""};
    for (int k = 0; k < len; ++k) {
        std::vector<std::string> next;
        for (const auto& w : out) {
            next.push_back(w + '0');
            next.push_back(w + '1');
        }
        out.swap(next);
    }
    return out;
}

int max_len(const SpheromorphismSymbol& s) {
    int m = 0;
    for (const auto& w : s.source.leaves) m = std::max(m, static_cast<int>(w.size()));
    for (const auto& w : s.target.leaves) m = std::max(m, static_cast<int>(w.size()));
    return m;
}

// Semantic oracle: compare the action on every word of a fixed length.
bool same_action(const SpheromorphismSymbol& a, const SpheromorphismSymbol& b, int len) {
    for (const auto& w : words_of_length(len, a.roots()))
        if (act_on_word(a, w) != act_on_word(b, w)) return false;
    return true;
}

// Every terminal form reachable by in-order caret cancellations, order by order.
std::set<std::vector<std::string>> all_reductions(const TreePairSymbol& s) {
    std::set<std::vector<std::string>> out;
    std::function<void(const TreePairSymbol&)> rec = [&](const TreePairSymbol& cur) {
        bool any = false;
        for (int i = 1; i < cur.source.leaf_count(); ++i) {
            const int j = cur.perm(i);
            if (cur.perm(i + 1) != j + 1) continue;
            const auto& a = cur.source.leaves[static_cast<std::size_t>(i - 1)];
            const auto& b = cur.source.leaves[static_cast<std::size_t>(i)];
            const auto& c = cur.target.leaves[static_cast<std::size_t>(j - 1)];
            const auto& d = cur.target.leaves[static_cast<std::size_t>(j)];
            auto sib = [](const std::string& x, const std::string& y) {
                return !x.empty() && x.size() == y.size() && x.back() == '0' && y.back() == '1' &&
                       x.substr(0, x.size() - 1) == y.substr(0, y.size() - 1);
            };
            if (!sib(a, b) || !sib(c, d)) continue;
            any = true;
            TreePairSymbol nx = cur;
            auto merge = [](BinaryTree& t, int k) {
                std::string p = t.leaves[static_cast<std::size_t>(k - 1)];
                p.pop_back();
                t.leaves.erase(t.leaves.begin() + (k - 1), t.leaves.begin() + (k + 1));
                t.leaves.insert(t.leaves.begin() + (k - 1), p);
            };
            merge(nx.source, i);
            merge(nx.target, j);
            std::vector<int> img;
            for (int k = 1; k <= cur.perm.size(); ++k) {
                if (k == i + 1) continue;
                int v = cur.perm(k);
                if (v > j + 1) --v;
                img.push_back(v);
            }
            nx.perm = Perm(img);
            rec(nx);
        }
        if (!any) {
            std::vector<std::string> key = cur.source.leaves;
            key.insert(key.end(), cur.target.leaves.begin(), cur.target.leaves.end());
            key.push_back(cur.perm.str());
            out.insert(key);
        }
    };
    rec(s);
    return out;
}

}  // namespace

TEST_CASE("automaton semantics") {
    const auto id = Automaton::identity();
    CHECK(id.act("0110") == "0110");
    CHECK(Automaton::root_swap().act("0110") == "1110");
    CHECK(Automaton::root_swap().act("") == "");
    // Trace along the spine: letter k+1 flips once k >= start letters are read.
    for (int start = 0; start <= 3; ++start) {
        const auto a = Automaton::spine_swap(start);
        std::string want(6, '0');
        for (int k = start; k < 6; ++k) want[static_cast<std::size_t>(k)] = '1';
        CHECK(a.act("000000") == want);
        CHECK(a.act("1000") == (start == 0 ? "0000" : "1000"));
    }
    const Automaton bad{{{false, 0, 3}}, 0};
    CHECK_THROWS_AS(bad.validate(), InputError);

    // Redundant presentations of the identity.
    const Automaton redundant{{{false, 1, 2}, {false, 2, 1}, {false, 0, 0}}, 0};
    CHECK(automaton_equal(redundant, id));
    CHECK(redundant.is_identity());
    CHECK(redundant.canonical() == id);
    CHECK(Automaton::spine_swap(2).is_finitary() == false);
    CHECK(Automaton::root_swap().is_finitary());

    Rng rng(3);
    for (int t = 0; t < 200; ++t) {
        const auto a = random_automaton(rng, 4), b = random_automaton(rng, 4), c = random_automaton(rng, 4);
        CHECK(automaton_equal(automaton_compose(a, automaton_inverse(a)), id));
        CHECK(automaton_equal(automaton_compose(automaton_inverse(a), a), id));
        const auto l = automaton_compose(automaton_compose(a, b), c);
        const auto r = automaton_compose(a, automaton_compose(b, c));
        CHECK(automaton_equal(l, r));
        CHECK(automaton_equal(l.canonical(), r));
        CHECK(l.canonical() == r.canonical());
        for (const auto& w : words_of_length(5)) CHECK(automaton_compose(a, b).act(w) == a.act(b.act(w)));
    }
}

TEST_CASE("tree-pair expansion and reduction") {
    const auto e = TreePairSymbol::identity();
    const auto e2 = expand_symbol(e, 1);
    CHECK(e2.perm.is_identity());
    CHECK(reduce_symbol(e2) == e);

    // Expanding all leaves in turn gives the complete expansion.
    TreePairSymbol s{BinaryTree{1, {"0", "10", "11"}}, BinaryTree{1, {"00", "01", "1"}}, Perm({2, 3, 1})};
    TreePairSymbol all = s;
    for (int i = s.source.leaf_count(); i >= 1; --i) all = expand_symbol(all, i);
    CHECK(all.perm == Perm({3, 4, 5, 6, 1, 2}));
    CHECK(reduce_symbol(all) == reduce_symbol(s));
    CHECK(reduce_symbol(expand_symbol(expand_symbol(s, 1), 4)) == reduce_symbol(expand_symbol(expand_symbol(s, 3), 1)));

    Rng rng(5);
    for (int t = 0; t < 200; ++t) {
        const auto x = random_v(rng, 8);
        const int i = std::uniform_int_distribution<int>(1, x.source.leaf_count())(rng);
        CHECK(reduce_symbol(expand_symbol(x, i)) == reduce_symbol(x));
        // Identity symbols on any tree shape reduce to the trivial one.
        const BinaryTree tr = random_tree(rng, x.source.leaf_count());
        CHECK(reduce_symbol({tr, tr, Perm::identity(tr.leaf_count())}) == e);
        const auto forms = all_reductions(x);
        CHECK(forms.size() == 1);
    }
}

TEST_CASE("V group laws") {
    Rng rng(9);
    const auto e = TreePairSymbol::identity();
    for (int t = 0; t < 150; ++t) {
        const auto a = random_v(rng, 8), b = random_v(rng, 8), c = random_v(rng, 8);
        CHECK(compose_v(a, inverse_v(a)) == e);
        CHECK(compose_v(inverse_v(a), a) == e);
        CHECK(compose_v(a, e) == reduce_symbol(a));
        CHECK(compose_v(e, a) == reduce_symbol(a));
        CHECK(compose_v(compose_v(a, b), c) == compose_v(a, compose_v(b, c)));
        const auto ab = to_spheromorphism(compose_v(a, b));
        const int len = max_len(to_spheromorphism(a)) + max_len(to_spheromorphism(b)) + 1;
        for (const auto& w : words_of_length(len))
            CHECK(act_on_word(ab, w) == act_on_word(to_spheromorphism(a), act_on_word(to_spheromorphism(b), w)));
    }
}

TEST_CASE("N group laws and V compatibility") {
    Rng rng(13);
    const auto e = SpheromorphismSymbol::identity();
    for (int t = 0; t < 120; ++t) {
        const auto a = random_n(rng, 6, 4), b = random_n(rng, 6, 4), c = random_n(rng, 6, 4);
        CHECK(equal_n(compose_n(a, inverse_n(a)), e));
        CHECK(equal_n(compose_n(inverse_n(a), a), e));
        CHECK(equal_n(compose_n(a, e), a));
        CHECK(equal_n(compose_n(compose_n(a, b), c), compose_n(a, compose_n(b, c))));
        const auto ab = compose_n(a, b);
        const int len = max_len(a) + max_len(b) + 2;
        for (const auto& w : words_of_length(len)) CHECK(act_on_word(ab, w) == act_on_word(a, act_on_word(b, w)));
        // The normal form is unique: reducing an expansion gives the same symbol.
        const int i = std::uniform_int_distribution<int>(1, a.leaf_count())(rng);
        CHECK(reduce_spheromorphism(expand_spheromorphism(a, i)) == reduce_spheromorphism(a));
        CHECK(same_action(expand_spheromorphism(a, i), a, max_len(a) + 3));

        const auto va = random_v(rng, 8), vb = random_v(rng, 8);
        CHECK(equal_n(compose_n(to_spheromorphism(va), to_spheromorphism(vb)), to_spheromorphism(compose_v(va, vb))));
        CHECK(to_tree_pair(compose_n(to_spheromorphism(va), to_spheromorphism(vb))) == compose_v(va, vb));
        const int k = std::uniform_int_distribution<int>(1, va.source.leaf_count())(rng);
        CHECK(expand_spheromorphism(to_spheromorphism(va), k) == to_spheromorphism(expand_symbol(va, k)));
    }
}

TEST_CASE("expansion crosses children under a root swap") {
    SpheromorphismSymbol s = SpheromorphismSymbol::identity();
    s.automata[0] = Automaton::root_swap();
    const auto x = expand_spheromorphism(s, 1);
    CHECK(x.leaf_map == Perm({2, 1}));
    CHECK(x.automata[0].is_identity());
    CHECK(x.automata[1].is_identity());
    CHECK(same_action(x, s, 4));
    CHECK(reduce_spheromorphism(x) == reduce_spheromorphism(s));
}

TEST_CASE("depth-two transposition is a commutator") {
    const auto d2 = BinaryTree::complete(2);
    const TreePairSymbol tau1{d2, d2, Perm({3, 2, 1, 4})};
    const TreePairSymbol sigma{d2, d2, Perm({2, 1, 4, 3})};
    const TreePairSymbol tau{d2, d2, Perm({3, 4, 1, 2})};
    const auto comm = compose_v(compose_v(tau1, sigma), compose_v(inverse_v(tau1), inverse_v(sigma)));
    CHECK(comm == reduce_symbol(tau));
    CHECK(compose_v(compose_v(sigma, tau1), sigma) == reduce_symbol(TreePairSymbol{d2, d2, Perm({1, 4, 3, 2})}));
    const auto n = compose_n(compose_n(to_spheromorphism(tau1), to_spheromorphism(sigma)),
                             compose_n(inverse_n(to_spheromorphism(tau1)), inverse_n(to_spheromorphism(sigma))));
    CHECK(equal_n(n, to_spheromorphism(tau)));
}

TEST_CASE("membership") {
    CHECK(membership(TreePairSymbol::identity()) == Membership::F);
    const auto d2 = BinaryTree::complete(2);
    CHECK(membership(TreePairSymbol{d2, d2, Perm({2, 3, 4, 1})}) == Membership::T);
    CHECK(membership(TreePairSymbol{d2, d2, Perm({2, 1, 3, 4})}) == Membership::V);
    const TreePairSymbol f{BinaryTree{1, {"0", "10", "11"}}, BinaryTree{1, {"00", "01", "1"}}, Perm::identity(3)};
    CHECK(membership(f) == Membership::F);
    SpheromorphismSymbol spine = SpheromorphismSymbol::identity();
    spine.automata[0] = Automaton::spine_swap(1);
    CHECK(membership(spine) == Membership::NOnly);
    SpheromorphismSymbol swap = SpheromorphismSymbol::identity();
    swap.automata[0] = Automaton::root_swap();
    CHECK(membership(swap) == Membership::T);
    CHECK(to_string(Membership::NOnly) == "N");
}

TEST_CASE("cyclic grafting") {
    const auto e = to_cyclic(TreePairSymbol::identity());
    CHECK(e.source.roots == 3);
    CHECK(reduce_symbol(e) == TreePairSymbol::identity(3));
    Rng rng(17);
    for (int t = 0; t < 100; ++t) {
        const auto a = random_v(rng, 7), b = random_v(rng, 7);
        CHECK(compose_v(to_cyclic(a), to_cyclic(b)) == reduce_symbol(to_cyclic(compose_v(a, b))));
        const auto na = random_n(rng, 5, 3), nb = random_n(rng, 5, 3);
        CHECK(equal_n(compose_n(to_cyclic(na), to_cyclic(nb)), to_cyclic(compose_n(na, nb))));
        // The marked vertex keeps its three branches.
        const auto c = reduce_symbol(to_cyclic(a));
        for (char br : {'0', '1', '2'}) {
            CHECK(std::any_of(c.source.leaves.begin(), c.source.leaves.end(), [&](const std::string& w) { return w[0] == br; }));
        }
        const auto x = random_v(rng, 9, 3), y = random_v(rng, 9, 3), z = random_v(rng, 9, 3);
        CHECK(compose_v(compose_v(x, y), z) == compose_v(x, compose_v(y, z)));
        CHECK(compose_v(x, inverse_v(x)) == TreePairSymbol::identity(3));
    }
    // A rotation of the three branches is in T.
    const TreePairSymbol rot{BinaryTree::trivial(3), BinaryTree::trivial(3), Perm({2, 3, 1})};
    CHECK(membership(rot) == Membership::T);
}

TEST_CASE("tree validation") {
    CHECK_THROWS_AS((BinaryTree{1, {"0", "10"}}.validate()), InputError);
    CHECK_THROWS_AS((BinaryTree{1, {"0", "00", "1"}}.validate()), InputError);
    CHECK_THROWS_AS((BinaryTree{3, {"0", "1"}}.validate()), InputError);
    CHECK_NOTHROW((BinaryTree{3, {"00", "01", "1", "2"}}.validate()));
    CHECK_THROWS_AS((TreePairSymbol{BinaryTree::trivial(), BinaryTree::complete(1), Perm::identity(2)}.validate()),
                    InputError);
}
