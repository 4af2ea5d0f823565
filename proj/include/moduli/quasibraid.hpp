#pragma once

#include <optional>
#include <string>
#include <vector>

#include "moduli/random.hpp"
#include "moduli/tree.hpp"

namespace moduli {

// Word alpha_{T_1} ... alpha_{T_r} in J_n. Under phi the rightmost factor acts first.
struct QBWord {
    int n = 0;
    std::vector<Interval> factors;

    QBWord() = default;
    QBWord(int ambient, std::vector<Interval> f);

    std::size_t size() const { return factors.size(); }
    bool empty() const { return factors.empty(); }
    void validate() const;
    std::string str() const;

    friend bool operator==(const QBWord&, const QBWord&) = default;
    friend auto operator<=>(const QBWord&, const QBWord&) = default;
};

QBWord operator*(const QBWord& a, const QBWord& b);
QBWord inverse(const QBWord& w);
// Repeatedly cancels adjacent equal factors.
QBWord free_reduce(const QBWord& w);
// The same word read in a larger ambient J_m.
QBWord widen(const QBWord& w, int m);

Perm phi(const QBWord& w);
int length(const QBWord& w);
bool is_pure(const QBWord& w);
// Parity of the number of factors of each support size 2..n (the mod-2 abelianization).
std::vector<int> abelianization_f2(const QBWord& w);

enum class Relation { Square, Slide, Commute };
std::string to_string(Relation r);
Relation relation_from_string(const std::string& s);

// One rewrite at factors (pos, pos+1), 0-based.
//  square  +1: a a -> empty            -1: inserts (support)(support) before pos
//  slide   +1: T U -> (j_T U) T, U in T  -1: U T -> T (j_T U), U in T
//  commute    : T U -> U T for label-disjoint supports
struct DerivationStep {
    int pos = 0;
    Relation rel = Relation::Square;
    int dir = 1;
    Interval support{};  // used by square insertion only

    friend bool operator==(const DerivationStep&, const DerivationStep&) = default;
};
using Derivation = std::vector<DerivationStep>;

QBWord apply_relation(const QBWord& w, const DerivationStep& step);
bool words_equal_by_certificate(const QBWord& w1, const QBWord& w2, const Derivation& d);
// Steps undoing d, so that apply(apply(w, d), inverse_derivation(w, d)) = w.
Derivation inverse_derivation(const QBWord& w, const Derivation& d);

// Greedy search for a reduction of w to the empty word by transporting a
// factor onto an equal one and cancelling.
std::optional<Derivation> trivial_certificate(const QBWord& w);
// Turns a reduction of w1 * w2^{-1} into a derivation from w1 to w2.
std::optional<Derivation> certificate_between(const QBWord& w1, const QBWord& w2);

enum class Verdict { Equal, Distinct, Unknown };
std::string to_string(Verdict v);
struct BoundedResult {
    Verdict verdict = Verdict::Unknown;
    std::string reason;
    Derivation certificate;  // w1 -> w2, when equal
};
// depth bounds the rewriting rounds applied to each of the two words.
BoundedResult bounded_equal(const QBWord& w1, const QBWord& w2, int depth, std::size_t max_states = 200000);

QBWord expand_word(const QBWord& w);
QBWord simple_expand_word(const QBWord& w, int m);
QBWord wreath_embed_left(const QBWord& w, int l);
QBWord wreath_embed_right(const QBWord& w, int k);

QBWord alpha_hat(int n);
QBWord j_s(const QBWord& w);
// Word in adjacent transpositions with phi equal to sigma.
QBWord section_word(const Perm& sigma);

// w * a^hat in Q_{n+1}; the word is pure.
struct QElement {
    QBWord word;
    bool hat = false;

    friend bool operator==(const QElement&, const QElement&) = default;
};
QElement q_identity(int n);
QElement q_hat(int n);
QElement q_compose(const QElement& a, const QElement& b);
int q_length(const QElement& q);
QBWord q_last_leaf_expand(const QElement& q);

QBWord random_word(Rng& rng, int n, int len);
QBWord random_pure_word(Rng& rng, int n, int len);
// Some word over sigma other than the fixed section: a random prefix, then a section of the rest.
QBWord random_section(Rng& rng, const Perm& sigma);

// Words of length <= radius with no adjacent equal factors, one per class
// under commutation of disjoint neighbours. Debugging aid only.
std::vector<QBWord> ball(int n, int radius);

}  // namespace moduli
