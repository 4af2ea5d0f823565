#include "doctest.h"
#include "moduli/certificates.hpp"
#include "moduli/euler.hpp"
#include "moduli/random.hpp"

using namespace moduli;

namespace {

RClassBit random_class(Rng& rng) {
    std::vector<std::uint8_t> pre(rng() % 5), per(1 + rng() % 4);
    for (auto& b : pre) b = rng() & 1u;
    for (auto& b : per) b = rng() & 1u;
    return RClassBit(pre, per);
}

// Counts swapping nodes at depth k by walking every word of length k.
int brute_swaps_at_depth(const Automaton& a, int k) {
    int count = 0;
    for (std::uint32_t bits = 0; bits < (1u << k); ++bits) {
        Word w;
        for (int t = 0; t < k; ++t) w.push_back((bits >> t & 1u) ? '1' : '0');
        count += a.states[static_cast<std::size_t>(a.state_after(w))].swap;
    }
    return count % 2;
}

LiftedNSymbol random_lift(Rng& rng, int leaves = 4, int states = 3) {
    const auto g = random_n(rng, leaves, states);
    return lift_with_word(g, random_section(rng, g.leaf_map));
}

LiftedNSymbol pure_lift(const QBWord& p) {
    const int depth = p.n == 4 ? 2 : 3;
    REQUIRE(p.n == (1 << depth));
    const BinaryTree t = BinaryTree::complete(depth);
    return lift_v({t, t, Perm::identity(p.n)}, p);
}

}  // namespace

TEST_CASE("ring of eventual sequences") {
    const RClassBit a({1, 0, 1}, {0, 1, 0, 1});
    CHECK(a.period.size() == 2);
    CHECK(a.preperiod.size() == 0);
    CHECK(a.at(0) == 1);
    CHECK(RClassBit({1, 1, 1}, {0}) == RClassBit::zero());
    CHECK(RClassBit::one() + RClassBit::one() == RClassBit::zero());
    CHECK(RClassBit::embed(1) == RClassBit::one());
    CHECK(RClassBit::embed(0) != RClassBit::embed(1));
    CHECK(RClassBit({}, {0, 1}) != RClassBit({}, {1, 0}));
    CHECK(RClassBit({}, {0, 1}) + RClassBit({}, {1, 0}) == RClassBit::one());
    CHECK(RClassBit({0}, {1, 0}).constant_value() == -1);
    CHECK_THROWS_AS(RClassBit({}, {}), InputError);

    Rng rng(11);
    for (int t = 0; t < 300; ++t) {
        const auto x = random_class(rng), y = random_class(rng), z = random_class(rng);
        CHECK((x + y) + z == x + (y + z));
        CHECK(x + y == y + x);
        CHECK(x + x == RClassBit::zero());
        CHECK(x + RClassBit::zero() == x);
        for (std::size_t k = 0; k < 40; ++k) CHECK((x + y).at(k) == (x.at(k) ^ y.at(k)));
    }
    for (int u : {0, 1})
        for (int v : {0, 1}) CHECK(RClassBit::embed(u) + RClassBit::embed(v) == RClassBit::embed(u ^ v));
}

TEST_CASE("swap parity sequences") {
    const auto id = swap_parity_sequence(Automaton::identity());
    CHECK(id == RClassBit::zero());
    CHECK(id.preperiod.empty());
    const auto root = swap_parity_sequence(Automaton::root_swap());
    CHECK(root.at(0) == 1);
    for (std::size_t k = 1; k < 20; ++k) CHECK(root.at(k) == 0);
    for (int d = 0; d <= 4; ++d) {
        const auto s = swap_parity_sequence(Automaton::spine_swap(d));
        for (int k = 0; k < 20; ++k) CHECK(s.at(static_cast<std::size_t>(k)) == (k >= d ? 1 : 0));
    }
    Rng rng(12);
    for (int t = 0; t < 60; ++t) {
        const auto a = random_automaton(rng, 4);
        const auto s = swap_parity_sequence(a);
        for (int k = 0; k <= 11; ++k) CHECK(s.at(static_cast<std::size_t>(k)) == brute_swaps_at_depth(a, k));
    }
    const RClassBit c = cumulative_sum(RClassBit({0}, {1}));
    for (std::size_t k = 0; k < 12; ++k) CHECK(c.at(k) == (k >= 2 ? (k - 1) % 2 : 0));
}

TEST_CASE("stable length agrees with explicit expansion") {
    Rng rng(13);
    for (int t = 0; t < 60; ++t) {
        const auto f = random_lift(rng);
        const auto cls = stable_length_seq(f);
        const int d0 = f.base.source.depth();
        for (int k = d0; k <= d0 + 5; ++k) CHECK(level_length(f, k) == cls.at(static_cast<std::size_t>(k)));
        const auto e = lifted_expand_to_complete(f, d0 + 1);
        e.validate();
        CHECK(stable_length_seq(e) == cls);
    }
}

TEST_CASE("stable length examples") {
    CHECK(stable_length_seq(canonical_lift(SpheromorphismSymbol::identity())) == RClassBit::zero());
    CHECK(stable_length_seq(pure_lift(pure_quasibraid_p())) == RClassBit::one());
    const auto alpha = canonical_lift(spine_swap_element(1));
    CHECK(stable_length_seq(alpha) == RClassBit({0, 0}, {1, 0}));
    // alpha_{k+1} = exp(alpha_k) alpha_(12) at the level words.
    for (int k = 2; k <= 6; ++k) {
        const QBWord lk = lifted_expand_to_complete(alpha, k).word;
        const QBWord lk1 = lifted_expand_to_complete(alpha, k + 1).word;
        CHECK(phi(lk1) == phi(expand_word(lk) * QBWord(lk1.n, {{1, 2}})));
        CHECK(length(lk1) == (length(lk) + 1) % 2);
    }
    Rng rng(14);
    for (int t = 0; t < 50; ++t) {
        const auto v = random_v(rng, 8);
        const QBWord word = random_section(rng, v.perm);
        CHECK(stable_length_seq(lift_v(v, word)) == RClassBit::embed(length(word)));
    }
}

TEST_CASE("lifted composition") {
    Rng rng(15);
    for (int t = 0; t < 60; ++t) {
        const auto f = random_lift(rng), g = random_lift(rng);
        const auto fg = lifted_compose(f, g);
        fg.validate();
        CHECK(equal_n(fg.base, compose_n(f.base, g.base)));
        const auto id = canonical_lift(SpheromorphismSymbol::identity());
        CHECK(stable_length_seq(lifted_compose(f, id)) == stable_length_seq(f));
        CHECK(stable_length_seq(lifted_compose(id, f)) == stable_length_seq(f));
        const auto inv = lifted_inverse(f);
        inv.validate();
        CHECK(equal_n(inv.base, inverse_n(f.base)));
    }
}

TEST_CASE("equivariance with pure quasi-braids") {
    Rng rng(16);
    for (int t = 0; t < 60; ++t) {
        const auto f = random_lift(rng);
        const int n = rng() % 2 ? 4 : 8;
        const auto p = pure_lift(random_pure_word(rng, n, 1 + static_cast<int>(rng() % 4)));
        const auto lp = stable_length_seq(p);
        CHECK(lp == RClassBit::embed(length(p.word)));
        CHECK(stable_length_seq(lifted_compose(p, f)) == lp + stable_length_seq(f));
        CHECK(stable_length_seq(lifted_compose(f, p)) == lp + stable_length_seq(f));
    }
    for (int t = 0; t < 30; ++t) {
        const auto a = random_v(rng, 6), b = random_v(rng, 6);
        const auto la = lift_v(a, section_word(a.perm)), lb = lift_v(b, section_word(b.perm));
        CHECK(stable_length_seq(lifted_commutator(la, lb)).constant_value() >= 0);
    }
}

TEST_CASE("euler cocycle") {
    Rng rng(17);
    const auto id = SpheromorphismSymbol::identity();
    for (int t = 0; t < 100; ++t) {
        const auto f = random_n(rng, 4, 3), g = random_n(rng, 4, 3), h = random_n(rng, 4, 3);
        CHECK(euler_cocycle(id, g) == RClassBit::zero());
        CHECK(euler_cocycle(f, id) == RClassBit::zero());
        const auto lhs = euler_cocycle(f, g) + euler_cocycle(compose_n(f, g), h);
        const auto rhs = euler_cocycle(f, compose_n(g, h)) + euler_cocycle(g, h);
        CHECK(lhs == rhs);
    }
    for (int t = 0; t < 50; ++t) {
        const auto f = random_lift(rng), g = random_lift(rng);
        const auto f2 = lift_with_word(f.base, random_section(rng, f.base.leaf_map));
        CHECK(euler_cocycle_lifted(f, g) == euler_cocycle_lifted(f2, g));
        CHECK(euler_cocycle_lifted(f, g) == euler_cocycle(f.base, g.base));
    }
    for (int t = 0; t < 50; ++t) {
        const auto f = random_lift(rng), g = random_lift(rng);
        const auto p = pure_lift(random_pure_word(rng, 4, 3));
        CHECK(euler_cocycle_lifted(lifted_compose(p, f), g) == euler_cocycle_lifted(f, g));
    }
}

TEST_CASE("pairing with the relation 2-cycle") {
    const auto rel = resolve_euler_relation();
    CHECK(rel.spine_start == 1);
    CHECK(equal_n(rel.tau, commutator_n(rel.delta, rel.alpha)));
    CHECK(equal_n(rel.tau, commutator_n(rel.tau1, rel.sigma)));
    CHECK_FALSE(equal_n(rel.tau, commutator_n(rel.delta, spine_swap_element(2))));
    const auto id = SpheromorphismSymbol::identity();
    CHECK(pair_with_cycle({{id, id}}) == 0);
    CHECK(pair_with_cycle({}) == 0);
    CHECK(pair_with_cycle({{rel.tau1, rel.sigma}, {rel.alpha, rel.delta}}) == 1);
    CHECK_THROWS_AS(pair_with_cycle({{rel.tau1, rel.sigma}}), InputError);

    // Explicit lifts: tau1 by a[1,3], sigma by a(12)a(34) on the tree's first four leaves.
    const LiftedNSymbol t1{rel.tau1, QBWord(5, {{1, 3}})}, sg{rel.sigma, QBWord(5, {{1, 2}, {3, 4}})};
    const auto la = lift_with_word(rel.alpha, QBWord(1, {})), ld = lift_with_word(rel.delta, QBWord(3, {}));
    CHECK(pair_with_cycle_lifted({{t1, sg}, {la, ld}}) == 1);
    const auto prod = lifted_compose(lifted_commutator(t1, sg), lifted_commutator(la, ld));
    CHECK(equal_n(prod.base, id));
    CHECK(is_pure(prod.word));
    CHECK(length(prod.word) == 1);

    Rng rng(18);
    for (int t = 0; t < 20; ++t) {
        auto relift = [&](const SpheromorphismSymbol& g) {
            const auto c = canonical_lift(g);
            return lift_with_word(c.base, random_section(rng, c.base.leaf_map));
        };
        CHECK(pair_with_cycle_lifted({{relift(rel.tau1), relift(rel.sigma)}, {relift(rel.alpha), relift(rel.delta)}}) ==
              1);
        const auto h = to_spheromorphism(random_v(rng, 6));
        auto conj = [&](const SpheromorphismSymbol& g) { return compose_n(compose_n(h, g), inverse_n(h)); };
        CHECK(pair_with_cycle({{conj(rel.tau1), conj(rel.sigma)}, {conj(rel.alpha), conj(rel.delta)}}) == 1);
        // Commutators of V-elements carry no Euler class.
        const auto a = to_spheromorphism(random_v(rng, 6)), b = to_spheromorphism(random_v(rng, 6));
        CHECK(pair_with_cycle({{a, b}, {b, a}}) == 0);
    }
}
