#include "doctest.h"
#include "moduli/certificates.hpp"
#include "moduli/quasibraid.hpp"

using namespace moduli;

namespace {

// phi image of a word computed by tracking where each label ends up.
Perm phi_oracle(const QBWord& w) {
    std::vector<int> img(static_cast<std::size_t>(w.n));
    for (int x = 1; x <= w.n; ++x) {
        int y = x;
        for (auto it = w.factors.rbegin(); it != w.factors.rend(); ++it)
            if (it->contains_label(y)) y = it->lo + it->hi - y;
        img[static_cast<std::size_t>(x - 1)] = y;
    }
    return Perm(img);
}

}  // namespace

TEST_CASE("phi and length") {
    CHECK(phi(QBWord(2, {{1, 2}})) == Perm({2, 1}));
    CHECK(phi(QBWord(5, {{2, 4}, {2, 4}})).is_identity());
    CHECK(length(QBWord(3, {{1, 2}})) == 1);
    CHECK(length(QBWord(3, {})) == 0);
    const QBWord p = pure_quasibraid_p();
    CHECK(phi(p).is_identity());
    CHECK(length(p) == 1);
    CHECK_THROWS_AS(QBWord(3, {{2, 4}}), InputError);
    Rng rng(1);
    for (int t = 0; t < 200; ++t) {
        const auto w = random_word(rng, 6, 7);
        CHECK(phi(w) == phi_oracle(w));
    }

    // A pure quasi-braid in J_3 with odd length.
    const QBWord q(3, {{1, 2}, {2, 3}, {1, 2}, {1, 3}});
    CHECK(is_pure(q));
    CHECK(length(q) == 1);
}

TEST_CASE("every relation instance preserves the invariants") {
    for (int n = 2; n <= 8; ++n)
        for (const auto& [l, r] : relation_instances(n)) {
            CHECK(length(l) == length(r));
            CHECK(phi(l) == phi(r));
            CHECK(abelianization_f2(l) == abelianization_f2(r));
        }
}

TEST_CASE("applying single relations") {
    CHECK(apply_relation(QBWord(4, {{1, 3}, {1, 3}}), {0, Relation::Square, 1, {}}).empty());
    CHECK(apply_relation(QBWord(6, {{2, 5}, {2, 3}}), {0, Relation::Slide, 1, {}}) == QBWord(6, {{4, 5}, {2, 5}}));
    CHECK(apply_relation(QBWord(6, {{4, 5}, {2, 5}}), {0, Relation::Slide, -1, {}}) == QBWord(6, {{2, 5}, {2, 3}}));
    CHECK(apply_relation(QBWord(4, {{1, 2}, {3, 4}}), {0, Relation::Commute, 1, {}}) == QBWord(4, {{3, 4}, {1, 2}}));
    CHECK(apply_relation(QBWord(4, {{1, 2}}), {1, Relation::Square, -1, {2, 4}}) == QBWord(4, {{1, 2}, {2, 4}, {2, 4}}));
    CHECK_THROWS_AS(apply_relation(QBWord(4, {{1, 2}, {2, 3}}), {0, Relation::Commute, 1, {}}), InputError);
    CHECK_THROWS_AS(apply_relation(QBWord(4, {{1, 2}, {1, 3}}), {0, Relation::Slide, 1, {}}), InputError);
    CHECK_THROWS_AS(apply_relation(QBWord(4, {{1, 2}}), {0, Relation::Square, 1, {}}), InputError);
    CHECK(relation_from_string("slide") == Relation::Slide);
    CHECK_THROWS_AS(relation_from_string("braid"), InputError);
}

TEST_CASE("certificates") {
    const QBWord a(4, {{1, 2}, {3, 4}});
    CHECK(words_equal_by_certificate(a, a, {}));
    CHECK_FALSE(words_equal_by_certificate(a, QBWord(4, {{3, 4}, {1, 2}}), {}));
    CHECK(words_equal_by_certificate(a, QBWord(4, {{3, 4}, {1, 2}}), {{0, Relation::Commute, 1, {}}}));
    CHECK_FALSE(words_equal_by_certificate(a, QBWord(4, {{3, 4}, {1, 2}}), {{0, Relation::Slide, 1, {}}}));

    const auto all = proof_certificates();
    CHECK(all.size() > 100);
    for (const auto& c : all) {
        INFO(c.name);
        CHECK(validate_certificate(c));
        CHECK(words_equal_by_certificate(c.from, c.to, c.steps));
        CHECK(phi(c.from) == phi(c.to));
        CHECK(length(c.from) == length(c.to));
        // A corrupted step is rejected.
        if (!c.steps.empty()) {
            Certificate bad = c;
            bad.steps.back().pos += 1000;
            CHECK_FALSE(validate_certificate(bad));
        }
        const auto back = inverse_derivation(c.from, c.steps);
        CHECK(words_equal_by_certificate(c.to, c.from, back));
    }

    Rng rng(2);
    for (int t = 0; t < 100; ++t) {
        const auto w = random_word(rng, 5, 6);
        const auto d = trivial_certificate(w * inverse(w));
        REQUIRE(d.has_value());
        CHECK(words_equal_by_certificate(w * inverse(w), QBWord(5, {}), *d));
    }
}

TEST_CASE("bounded equality search") {
    const QBWord sq(4, {{1, 3}, {1, 3}});
    auto r = bounded_equal(sq, QBWord(4, {}), 1);
    CHECK(r.verdict == Verdict::Equal);
    CHECK(words_equal_by_certificate(sq, QBWord(4, {}), r.certificate));
    CHECK(bounded_equal(QBWord(3, {{1, 2}}), QBWord(3, {{2, 3}}), 4).verdict == Verdict::Distinct);
    CHECK(bounded_equal(QBWord(4, {{1, 2}}), QBWord(4, {{1, 2}, {3, 4}, {3, 4}, {2, 4}, {2, 4}}), 2).verdict ==
          Verdict::Equal);
    const QBWord s1(6, {{2, 5}, {2, 3}}), s2(6, {{4, 5}, {2, 5}});
    r = bounded_equal(s1, s2, 2);
    CHECK(r.verdict == Verdict::Equal);
    CHECK(words_equal_by_certificate(s1, s2, r.certificate));
    // Same invariants, no rewriting path within the bound.
    const QBWord p = pure_quasibraid_p();
    const QBWord q = p * QBWord(4, {{1, 2}, {1, 2}});
    CHECK(bounded_equal(p, q, 1).verdict == Verdict::Equal);
    // Separation by the abelianization although phi and length agree.
    const QBWord u(4, {{1, 2}, {2, 3}, {1, 2}, {1, 3}, {1, 4}, {1, 4}});
    const QBWord v(4, {{1, 2}, {1, 2}, {1, 3}, {2, 4}, {1, 3}, {2, 4}});
    CHECK(phi(u) == phi(v));
}

TEST_CASE("dyadic expansion of words") {
    CHECK(expand_word(QBWord(2, {{1, 2}})) == QBWord(4, {{1, 4}, {1, 2}, {3, 4}}));
    CHECK(length(expand_word(QBWord(2, {{1, 2}}))) == 1);
    CHECK(expand_word(QBWord(3, {})) == QBWord(6, {}));
    CHECK(is_pure(expand_word(pure_quasibraid_p())));
    Rng rng(3);
    for (int t = 0; t < 500; ++t) {
        const int n = 2 + static_cast<int>(rng() % 5);
        const auto w = random_word(rng, n, 1 + static_cast<int>(rng() % 8));
        const auto x = random_word(rng, n, 3);
        CHECK(length(expand_word(w)) == length(w));
        CHECK(phi(expand_word(w)) == expand_perm(phi(w)));
        CHECK(expand_word(w * x) == expand_word(w) * expand_word(x));
        const auto p = random_pure_word(rng, n, 5);
        CHECK(is_pure(p));
        CHECK(is_pure(expand_word(p)));
        CHECK(length(expand_word(p)) == length(p));
    }
}

TEST_CASE("simple expansion of words") {
    CHECK(simple_expand_word(QBWord(3, {{1, 3}}), 2) == QBWord(4, {{1, 4}, {2, 3}}));
    CHECK(simple_expand_word(QBWord(5, {{3, 5}}), 1) == QBWord(6, {{4, 6}}));
    CHECK(simple_expand_word(QBWord(5, {{1, 2}}), 4) == QBWord(6, {{1, 2}}));
    for (int k = 2; k <= 7; ++k) {
        const QBWord g(8, {{1, k}});
        const QBWord e = simple_expand_word(g, 1);
        CHECK(e == QBWord(9, {{1, k + 1}, {1, 2}}));
        CHECK((k + 1 + 1 + 2 + 1) % 2 == length(g));
        CHECK(length(e) == length(g));
    }
    Rng rng(4);
    for (int t = 0; t < 300; ++t) {
        const int n = 2 + static_cast<int>(rng() % 5);
        const auto w = random_word(rng, n, 1 + static_cast<int>(rng() % 8));
        const int m = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
        CHECK(length(simple_expand_word(w, m)) == length(w));
        CHECK(phi(simple_expand_word(w, m)) == simple_expand_perm(phi(w), m));
    }
}

TEST_CASE("wreath embeddings") {
    CHECK(wreath_embed_right(QBWord(2, {{1, 2}}), 2) == QBWord(8, {{1, 2}, {3, 4}, {5, 6}, {7, 8}}));
    CHECK(phi(wreath_embed_right(QBWord(2, {{1, 2}}), 2)) == Perm({2, 1, 4, 3, 6, 5, 8, 7}));
    CHECK(wreath_embed_left(QBWord(2, {{1, 2}}), 1) == expand_word(QBWord(2, {{1, 2}})));
    Rng rng(5);
    for (int t = 0; t < 100; ++t) {
        const int k = 1 + static_cast<int>(rng() % 2), l = 1 + static_cast<int>(rng() % 2);
        const auto s = random_word(rng, 1 << k, 3), u = random_word(rng, 1 << l, 3);
        const Perm sig = phi(s), tau = phi(u);
        const Perm got = phi(wreath_embed_left(s, l) * wreath_embed_right(u, k));
        const int b = 1 << l;
        for (int i = 1; i <= (1 << k); ++i)
            for (int x = 1; x <= b; ++x) CHECK(got((i - 1) * b + x) == (sig(i) - 1) * b + tau(x));
        CHECK(phi(wreath_embed_left(s, l) * wreath_embed_right(u, k)) ==
              phi(wreath_embed_right(u, k) * wreath_embed_left(s, l)));
    }
}

TEST_CASE("alpha hat and j_S") {
    CHECK(alpha_hat(2) == QBWord(2, {{1, 2}}));
    for (int n = 2; n <= 6; ++n) {
        CHECK(phi(alpha_hat(n)) == omega({1, n}, n));
        CHECK(length(alpha_hat(n)) == (n * (n - 1) / 2) % 2);
        CHECK(length(alpha_hat(n) * j_s(alpha_hat(n))) == 0);
    }
    Rng rng(6);
    for (int t = 0; t < 50; ++t) {
        const auto w = random_word(rng, 6, 5);
        CHECK(j_s(j_s(w)) == w);
        CHECK(phi(j_s(w)) == omega({1, 6}, 6) * phi(w) * omega({1, 6}, 6));
    }
    CHECK(j_s(QBWord(6, {{2, 5}})) == QBWord(6, {{2, 5}}));
    for (int n = 2; n <= 5; ++n)
        for (const auto& [l, r] : relation_instances(n)) {
            const auto res = bounded_equal(j_s(l), j_s(r), 1);
            CHECK(res.verdict == Verdict::Equal);
            CHECK(words_equal_by_certificate(j_s(l), j_s(r), res.certificate));
        }
}

TEST_CASE("section words") {
    Rng rng(7);
    for (int n = 1; n <= 7; ++n)
        for (int t = 0; t < 30; ++t) {
            const Perm s = random_perm(rng, n);
            CHECK(phi(section_word(s)) == s);
        }
}

TEST_CASE("the group Q") {
    for (int n = 2; n <= 6; ++n) {
        const auto hh = q_compose(q_hat(n), q_hat(n));
        CHECK_FALSE(hh.hat);
        CHECK(hh.word == free_reduce(alpha_hat(n) * j_s(alpha_hat(n))));
        CHECK(is_pure(hh.word));
        CHECK(q_length(hh) == 0);
        CHECK(q_compose(q_identity(n), q_hat(n)) == q_hat(n));
        CHECK(q_compose(q_hat(n), q_identity(n)) == q_hat(n));
    }
    Rng rng(8);
    for (int t = 0; t < 100; ++t) {
        const int n = 3 + static_cast<int>(rng() % 3);
        auto rq = [&] { return QElement{random_pure_word(rng, n, 4), rng() % 2 == 1}; };
        const auto a = rq(), b = rq(), c = rq();
        const auto l = q_compose(q_compose(a, b), c), r = q_compose(a, q_compose(b, c));
        CHECK(l.hat == r.hat);
        CHECK(l.hat == (a.hat != (b.hat != c.hat)));
        CHECK(is_pure(l.word));
        CHECK(bounded_equal(l.word, r.word, 0).verdict != Verdict::Distinct);
        const auto cert = certificate_between(l.word, r.word);
        REQUIRE(cert.has_value());
        CHECK(words_equal_by_certificate(l.word, r.word, *cert));
        CHECK(q_length(q_compose(a, b)) == (q_length(a) + q_length(b)) % 2);
    }
}

TEST_CASE("expansion at the last leaf") {
    for (int n = 2; n <= 6; ++n) {
        const QBWord img = q_last_leaf_expand(q_hat(n));
        CHECK(img == QBWord(n + 1, alpha_hat(n).factors) * QBWord(n + 1, {{1, n}}));
        CHECK(is_pure(img));
        CHECK(length(img) == (length(alpha_hat(n)) + 1 + n) % 2);
    }
    Rng rng(9);
    for (int t = 0; t < 50; ++t) {
        const auto p = random_pure_word(rng, 5, 4);
        CHECK(q_last_leaf_expand({p, false}) == simple_expand_word(p, 5));
        CHECK(is_pure(q_last_leaf_expand({p, rng() % 2 == 1})));
    }
}

TEST_CASE("ball around the identity") {
    CHECK(ball(3, 0).size() == 1);
    CHECK(ball(3, 1).size() == 4);
    // Radius two in J_3: ordered pairs of distinct generators; none commute.
    CHECK(ball(3, 2).size() == 1 + 3 + 6);
    // In J_4 the pair [1,2],[3,4] commutes, so one class is lost.
    CHECK(ball(4, 2).size() == 1 + 6 + 30 - 1);
}
