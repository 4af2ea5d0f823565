#include "moduli/certificates.hpp"

namespace moduli {

Derivation offset(const Derivation& d, int k) {
    Derivation out = d;
    for (auto& st : out) st.pos += k;
    return out;
}

bool validate_certificate(const Certificate& c) {
    if (c.from.n != c.to.n) return false;
    const Perm p = phi(c.from);
    const int l = length(c.from);
    QBWord cur = c.from;
    try {
        for (const auto& st : c.steps) {
            cur = apply_relation(cur, st);
            if (phi(cur) != p || length(cur) != l) return false;
        }
    } catch (const InputError&) {
        return false;
    }
    return cur == c.to;
}

QBWord pure_quasibraid_p() {
    QBWord p(4, {{1, 3}, {1, 2}, {3, 4}, {1, 3}, {1, 4}});
    if (!is_pure(p) || length(p) != 1) throw ComputationError("p lost its defining properties");
    return p;
}

std::vector<std::pair<QBWord, QBWord>> relation_instances(int n) {
    std::vector<Interval> gens;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) gens.push_back({a, b});
    std::vector<std::pair<QBWord, QBWord>> out;
    for (const auto& t : gens) out.push_back({QBWord(n, {t, t}), QBWord(n, {})});
    for (const auto& t : gens)
        for (const auto& u : gens) {
            if (t.contains(u) && t != u) out.push_back({QBWord(n, {t, u}), QBWord(n, {conjugate_interval(t, u), t})});
            if (t.label_disjoint(u)) out.push_back({QBWord(n, {t, u}), QBWord(n, {u, t})});
        }
    return out;
}

namespace {

Certificate solved(std::string name, const QBWord& a, const QBWord& b) {
    auto d = certificate_between(a, b);
    if (!d) throw ComputationError("no certificate found for " + name);
    return {std::move(name), a, b, *d};
}

}  // namespace

std::vector<Certificate> proof_certificates() {
    std::vector<Certificate> out;

    // The single slide relating two labelings of one tree.
    out.push_back({"slide-example", QBWord(6, {{2, 5}, {2, 3}}), QBWord(6, {{4, 5}, {2, 5}}),
                   {{0, Relation::Slide, 1, {}}}});

    // p as a commutator times the expansion of a transposition.
    {
        const QBWord a(4, {{1, 3}}), b(4, {{1, 2}, {3, 4}});
        const QBWord comm = a * b * inverse(a) * inverse(b);
        const QBWord e = expand_word(QBWord(2, {{1, 2}}));
        const QBWord flat(4, {{1, 2}, {3, 4}, {1, 4}});
        auto head = certificate_between(e, flat);
        if (!head) throw ComputationError("expansion rewrite failed");
        Derivation d = offset(*head, static_cast<int>(comm.size()));
        d.push_back({5, Relation::Square, 1, {}});
        d.push_back({4, Relation::Square, 1, {}});
        out.push_back({"p-commutator", comm * e, pure_quasibraid_p(), d});
    }

    for (int n = 2; n <= 4; ++n)
        for (const auto& [l, r] : relation_instances(n)) {
            out.push_back(solved("exp-relation-n" + std::to_string(n), expand_word(l), expand_word(r)));
            for (int m = 1; m <= n; ++m)
                out.push_back(solved("simple-exp-relation-n" + std::to_string(n) + "-m" + std::to_string(m),
                                     simple_expand_word(l, m), simple_expand_word(r, m)));
        }

    // exp(alpha_T) with the caret factors moved in front.
    for (int n = 2; n <= 4; ++n)
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b) {
                QBWord front(2 * n, {});
                for (int i = a; i <= b; ++i) front.factors.push_back({2 * i - 1, 2 * i});
                front.factors.push_back({2 * a - 1, 2 * b});
                out.push_back(solved("exp-caret-front", expand_word(QBWord(n, {{a, b}})), front));
            }

    // Iterated expansion and the commuting wreath embeddings.
    for (auto [k, l] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{1, 2}}) {
        const int nk = 1 << k, nl = 1 << l, block = nl;
        for (int a = 1; a <= nk; ++a)
            for (int b = a + 1; b <= nk; ++b) {
                const QBWord s(nk, {{a, b}});
                const QBWord left = wreath_embed_left(s, l);
                QBWord closed(nk * nl, {{(a - 1) * block + 1, b * block}});
                for (int i = a; i <= b; ++i) closed.factors.push_back({(i - 1) * block + 1, i * block});
                out.push_back(solved("iterated-exp-closed-form", left, closed));
                for (int c = 1; c <= nl; ++c)
                    for (int d = c + 1; d <= nl; ++d) {
                        const QBWord right = wreath_embed_right(QBWord(nl, {{c, d}}), k);
                        out.push_back(solved("wreath-commute-k" + std::to_string(k) + "-l" + std::to_string(l),
                                             left * right, right * left));
                    }
            }
    }
    return out;
}

}  // namespace moduli
