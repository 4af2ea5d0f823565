#include "moduli/quasibraid.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace moduli {

QBWord::QBWord(int ambient, std::vector<Interval> f) : n(ambient), factors(std::move(f)) { validate(); }

void QBWord::validate() const {
    if (n < 1) throw InputError("ambient size must be positive");
    for (const auto& t : factors)
        if (t.lo < 1 || t.lo >= t.hi || t.hi > n)
            throw InputError("generator support [" + std::to_string(t.lo) + "," + std::to_string(t.hi) +
                             "] is not a block of 1.." + std::to_string(n));
}

std::string QBWord::str() const {
    std::ostringstream os;
    os << "J" << n << ":";
    if (factors.empty()) os << " 1";
    for (const auto& t : factors) os << " [" << t.lo << "," << t.hi << "]";
    return os.str();
}

QBWord operator*(const QBWord& a, const QBWord& b) {
    if (a.n != b.n) throw InputError("words live in different groups");
    QBWord out = a;
    out.factors.insert(out.factors.end(), b.factors.begin(), b.factors.end());
    return out;
}

QBWord inverse(const QBWord& w) {
    QBWord out = w;
    std::reverse(out.factors.begin(), out.factors.end());
    return out;
}

QBWord free_reduce(const QBWord& w) {
    QBWord out{w.n, {}};
    for (const auto& t : w.factors) {
        if (!out.factors.empty() && out.factors.back() == t) out.factors.pop_back();
        else out.factors.push_back(t);
    }
    return out;
}

QBWord widen(const QBWord& w, int m) {
    if (m < w.n) throw InputError("cannot shrink the ambient group");
    return QBWord(m, w.factors);
}

Perm phi(const QBWord& w) {
    Perm p = Perm::identity(w.n);
    for (const auto& t : w.factors) p = p * omega(t, w.n);
    return p;
}

int length(const QBWord& w) {
    int s = 0;
    for (const auto& t : w.factors) s += 1 + t.size();
    return s & 1;
}

bool is_pure(const QBWord& w) { return phi(w).is_identity(); }

std::vector<int> abelianization_f2(const QBWord& w) {
    std::vector<int> v(static_cast<std::size_t>(std::max(0, w.n - 1)), 0);
    for (const auto& t : w.factors) v[static_cast<std::size_t>(t.size() - 2)] ^= 1;
    return v;
}

std::string to_string(Relation r) {
    switch (r) {
        case Relation::Square: return "square";
        case Relation::Slide: return "slide";
        case Relation::Commute: return "commute";
    }
    return "?";
}

Relation relation_from_string(const std::string& s) {
    if (s == "square") return Relation::Square;
    if (s == "slide") return Relation::Slide;
    if (s == "commute") return Relation::Commute;
    throw InputError("unknown relation '" + s + "'");
}

namespace {

bool proper_sub(const Interval& u, const Interval& t) { return t.contains(u) && u != t; }

}  // namespace

QBWord apply_relation(const QBWord& w, const DerivationStep& st) {
    auto& f = w.factors;
    const auto fail = [&](const std::string& why) {
        return InputError("step " + to_string(st.rel) + " at " + std::to_string(st.pos) + ": " + why);
    };
    if (st.dir != 1 && st.dir != -1) throw fail("direction must be +1 or -1");
    QBWord out = w;
    const auto pos = static_cast<std::size_t>(st.pos);
    if (st.rel == Relation::Square && st.dir == -1) {
        if (st.pos < 0 || pos > f.size()) throw fail("position out of range");
        QBWord pair(w.n, {st.support, st.support});
        out.factors.insert(out.factors.begin() + st.pos, pair.factors.begin(), pair.factors.end());
        return out;
    }
    if (st.pos < 0 || pos + 1 >= f.size()) throw fail("position out of range");
    const Interval a = f[pos], b = f[pos + 1];
    switch (st.rel) {
        case Relation::Square:
            if (a != b) throw fail("factors differ");
            out.factors.erase(out.factors.begin() + st.pos, out.factors.begin() + st.pos + 2);
            return out;
        case Relation::Commute:
            if (!a.label_disjoint(b)) throw fail("supports are not label-disjoint");
            std::swap(out.factors[pos], out.factors[pos + 1]);
            return out;
        case Relation::Slide:
            if (st.dir == 1) {
                if (!proper_sub(b, a)) throw fail("second support is not inside the first");
                out.factors[pos] = conjugate_interval(a, b);
                out.factors[pos + 1] = a;
            } else {
                if (!proper_sub(a, b)) throw fail("first support is not inside the second");
                out.factors[pos] = b;
                out.factors[pos + 1] = conjugate_interval(b, a);
            }
            return out;
    }
    throw fail("unknown relation");
}

bool words_equal_by_certificate(const QBWord& w1, const QBWord& w2, const Derivation& d) {
    if (w1.n != w2.n) return false;
    QBWord cur = w1;
    try {
        for (const auto& st : d) cur = apply_relation(cur, st);
    } catch (const InputError&) {
        return false;
    }
    return cur == w2;
}

Derivation inverse_derivation(const QBWord& w, const Derivation& d) {
    Derivation inv;
    QBWord cur = w;
    for (const auto& st : d) {
        DerivationStep back = st;
        if (st.rel == Relation::Square) {
            back.dir = -st.dir;
            if (st.dir == 1) back.support = cur.factors[static_cast<std::size_t>(st.pos)];
        } else if (st.rel == Relation::Slide) {
            back.dir = -st.dir;
        }
        inv.push_back(back);
        cur = apply_relation(cur, st);
    }
    std::reverse(inv.begin(), inv.end());
    return inv;
}

namespace {

// Moves factor j left to position i+1; returns the steps or nothing.
std::optional<Derivation> transport_left(QBWord& w, std::size_t i, std::size_t j) {
    QBWord cur = w;
    Derivation steps;
    for (std::size_t p = j; p > i + 1; --p) {
        const Interval x = cur.factors[p - 1], y = cur.factors[p];
        DerivationStep st{static_cast<int>(p - 1), Relation::Commute, 1, {}};
        if (x.label_disjoint(y)) st.rel = Relation::Commute;
        else if (proper_sub(y, x)) st = {static_cast<int>(p - 1), Relation::Slide, 1, {}};
        else if (proper_sub(x, y)) st = {static_cast<int>(p - 1), Relation::Slide, -1, {}};
        else return std::nullopt;
        cur = apply_relation(cur, st);
        steps.push_back(st);
    }
    if (cur.factors[i] != cur.factors[i + 1]) return std::nullopt;
    w = cur;
    return steps;
}

std::optional<Derivation> transport_right(QBWord& w, std::size_t i, std::size_t j) {
    QBWord cur = w;
    Derivation steps;
    for (std::size_t p = i; p + 1 < j; ++p) {
        const Interval x = cur.factors[p], z = cur.factors[p + 1];
        DerivationStep st{static_cast<int>(p), Relation::Commute, 1, {}};
        if (x.label_disjoint(z)) st.rel = Relation::Commute;
        else if (proper_sub(x, z)) st = {static_cast<int>(p), Relation::Slide, -1, {}};
        else if (proper_sub(z, x)) st = {static_cast<int>(p), Relation::Slide, 1, {}};
        else return std::nullopt;
        cur = apply_relation(cur, st);
        steps.push_back(st);
    }
    if (cur.factors[j - 1] != cur.factors[j]) return std::nullopt;
    w = cur;
    return steps;
}

}  // namespace

std::optional<Derivation> trivial_certificate(const QBWord& w) {
    QBWord cur = w;
    Derivation out;
    while (!cur.empty()) {
        bool done = false;
        const std::size_t m = cur.size();
        for (std::size_t gap = 1; gap < m && !done; ++gap)
            for (std::size_t i = 0; i + gap < m && !done; ++i) {
                const std::size_t j = i + gap;
                for (int side = 0; side < 2 && !done; ++side) {
                    QBWord trial = cur;
                    auto steps = side == 0 ? transport_left(trial, i, j) : transport_right(trial, i, j);
                    if (!steps) continue;
                    const std::size_t at = side == 0 ? i : j - 1;
                    DerivationStep cancel{static_cast<int>(at), Relation::Square, 1, {}};
                    cur = apply_relation(trial, cancel);
                    out.insert(out.end(), steps->begin(), steps->end());
                    out.push_back(cancel);
                    done = true;
                }
            }
        if (!done) return std::nullopt;
    }
    return out;
}

std::optional<Derivation> certificate_between(const QBWord& w1, const QBWord& w2) {
    if (w1.n != w2.n) throw InputError("words live in different groups");
    auto core = trivial_certificate(w1 * inverse(w2));
    if (!core) return std::nullopt;
    Derivation d;
    const int a = static_cast<int>(w1.size()), b = static_cast<int>(w2.size());
    for (int k = 1; k <= b; ++k)
        d.push_back({a + k - 1, Relation::Square, -1, w2.factors[static_cast<std::size_t>(b - k)]});
    d.insert(d.end(), core->begin(), core->end());
    return d;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Equal: return "equal";
        case Verdict::Distinct: return "distinct";
        case Verdict::Unknown: return "unknown";
    }
    return "?";
}

namespace {

std::vector<DerivationStep> local_moves(const QBWord& w) {
    std::vector<DerivationStep> mv;
    for (std::size_t p = 0; p + 1 < w.size(); ++p) {
        const Interval a = w.factors[p], b = w.factors[p + 1];
        const int ip = static_cast<int>(p);
        if (a == b) mv.push_back({ip, Relation::Square, 1, {}});
        else if (a.label_disjoint(b)) mv.push_back({ip, Relation::Commute, 1, {}});
        else if (proper_sub(b, a)) mv.push_back({ip, Relation::Slide, 1, {}});
        else if (proper_sub(a, b)) mv.push_back({ip, Relation::Slide, -1, {}});
    }
    return mv;
}

struct Visit {
    QBWord parent;
    DerivationStep step;
    bool root = false;
};

Derivation path_to(const std::map<QBWord, Visit>& seen, QBWord w) {
    Derivation d;
    for (;;) {
        const Visit& v = seen.at(w);
        if (v.root) break;
        d.push_back(v.step);
        w = v.parent;
    }
    std::reverse(d.begin(), d.end());
    return d;
}

}  // namespace

BoundedResult bounded_equal(const QBWord& w1, const QBWord& w2, int depth, std::size_t max_states) {
    if (w1.n != w2.n) throw InputError("words live in different groups");
    if (phi(w1) != phi(w2)) return {Verdict::Distinct, "phi images differ", {}};
    if (length(w1) != length(w2)) return {Verdict::Distinct, "lengths differ", {}};
    if (abelianization_f2(w1) != abelianization_f2(w2)) return {Verdict::Distinct, "abelianizations differ", {}};

    std::map<QBWord, Visit> from1, from2;
    from1.emplace(w1, Visit{w1, {}, true});
    from2.emplace(w2, Visit{w2, {}, true});
    std::vector<QBWord> f1{w1}, f2{w2};
    auto meet = [&](const QBWord& x) -> BoundedResult {
        Derivation d = path_to(from1, x);
        const Derivation back = path_to(from2, x);
        const Derivation inv = inverse_derivation(w2, back);
        d.insert(d.end(), inv.begin(), inv.end());
        return {Verdict::Equal, "rewriting path found", d};
    };
    if (w1 == w2) return {Verdict::Equal, "identical words", {}};
    // Cancellations and slides are not closed under inversion, so both
    // words are rewritten for the full number of rounds.
    for (int round = 0; round < depth; ++round) {
        for (int side = 0; side < 2; ++side) {
            auto& seen = side == 0 ? from1 : from2;
            auto& other = side == 0 ? from2 : from1;
            auto& frontier = side == 0 ? f1 : f2;
            std::vector<QBWord> next;
            for (const auto& w : frontier)
                for (const auto& st : local_moves(w)) {
                    QBWord x = apply_relation(w, st);
                    if (seen.count(x)) continue;
                    seen.emplace(x, Visit{w, st, false});
                    if (other.count(x)) return meet(x);
                    next.push_back(std::move(x));
                    if (from1.size() + from2.size() > max_states)
                        return {Verdict::Unknown, "state budget exhausted", {}};
                }
            frontier = std::move(next);
        }
    }
    return {Verdict::Unknown, "no rewriting path within the depth bound", {}};
}

QBWord expand_word(const QBWord& w) {
    QBWord out{2 * w.n, {}};
    for (const auto& t : w.factors) {
        out.factors.push_back({2 * t.lo - 1, 2 * t.hi});
        for (int i = t.lo; i <= t.hi; ++i) out.factors.push_back({2 * i - 1, 2 * i});
    }
    return out;
}

QBWord simple_expand_word(const QBWord& w, int m) {
    if (m < 1 || m > w.n) throw InputError("expansion label out of range");
    std::vector<Interval> rev;
    int cur = m;
    for (auto it = w.factors.rbegin(); it != w.factors.rend(); ++it) {
        const Interval t = *it;
        if (t.contains_label(cur)) {
            rev.push_back({cur, cur + 1});
            rev.push_back({t.lo, t.hi + 1});
            cur = t.lo + t.hi - cur;
        } else if (t.lo > cur) {
            rev.push_back({t.lo + 1, t.hi + 1});
        } else {
            rev.push_back(t);
        }
    }
    std::reverse(rev.begin(), rev.end());
    return QBWord(w.n + 1, std::move(rev));
}

QBWord wreath_embed_left(const QBWord& w, int l) {
    if (l < 0) throw InputError("expansion count must be non-negative");
    QBWord out = w;
    for (int k = 0; k < l; ++k) out = expand_word(out);
    return out;
}

QBWord wreath_embed_right(const QBWord& w, int k) {
    if (k < 0 || k > 20) throw InputError("copy exponent out of range");
    const int copies = 1 << k;
    QBWord out{w.n * copies, {}};
    for (const auto& t : w.factors)
        for (int i = 1; i <= copies; ++i) out.factors.push_back({(i - 1) * w.n + t.lo, (i - 1) * w.n + t.hi});
    return out;
}

QBWord alpha_hat(int n) {
    if (n < 1) throw InputError("ambient size must be positive");
    QBWord out{n, {}};
    for (int top = 2; top <= n; ++top)
        for (int i = top - 1; i >= 1; --i) out.factors.push_back({i, i + 1});
    return out;
}

QBWord j_s(const QBWord& w) {
    QBWord out = w;
    for (auto& t : out.factors) t = conjugate_interval({1, w.n}, t);
    return out;
}

QBWord section_word(const Perm& sigma) {
    std::vector<int> img = sigma.images();
    std::vector<Interval> swaps;
    // Right multiplication by (a a+1) swaps the images at a and a+1.
    for (std::size_t pass = 0; pass < img.size(); ++pass)
        for (std::size_t a = 0; a + 1 < img.size(); ++a)
            if (img[a] > img[a + 1]) {
                std::swap(img[a], img[a + 1]);
                swaps.push_back({static_cast<int>(a) + 1, static_cast<int>(a) + 2});
            }
    std::reverse(swaps.begin(), swaps.end());
    return QBWord(sigma.size(), std::move(swaps));
}

QElement q_identity(int n) { return {QBWord{n, {}}, false}; }

QElement q_hat(int n) { return {QBWord{n, {}}, true}; }

QElement q_compose(const QElement& a, const QElement& b) {
    if (a.word.n != b.word.n) throw InputError("elements live in different groups");
    const int n = a.word.n;
    if (!a.hat) return {free_reduce(a.word * b.word), b.hat};
    // hat * q = ahat j_S(q) ahat^{-1} * hat, and hat^2 = ahat j_S(ahat).
    const QBWord ah = alpha_hat(n);
    QBWord w = a.word * ah * j_s(b.word) * inverse(ah);
    if (b.hat) w = w * ah * j_s(ah);
    return {free_reduce(w), !b.hat};
}

int q_length(const QElement& q) { return length(q.word); }

QBWord q_last_leaf_expand(const QElement& q) {
    const int n = q.word.n;
    QBWord out = simple_expand_word(q.word, n);
    if (q.hat) out = out * QBWord(n + 1, alpha_hat(n).factors) * QBWord(n + 1, {{1, n}});
    return out;
}

QBWord random_word(Rng& rng, int n, int len) {
    if (n < 2) throw InputError("J_n needs n >= 2 for generators");
    std::uniform_int_distribution<int> lo(1, n - 1);
    QBWord w{n, {}};
    for (int k = 0; k < len; ++k) {
        const int a = lo(rng);
        const int b = std::uniform_int_distribution<int>(a + 1, n)(rng);
        w.factors.push_back({a, b});
    }
    return w;
}

QBWord random_section(Rng& rng, const Perm& sigma) {
    const int n = sigma.size();
    if (n < 2) return QBWord(n, {});
    const QBWord r = random_word(rng, n, static_cast<int>(rng() % 4));
    return r * section_word(phi(r).inverse() * sigma);
}

QBWord random_pure_word(Rng& rng, int n, int len) {
    const QBWord w = random_word(rng, n, len);
    return w * inverse(section_word(phi(w)));
}

namespace {

// Lexicographically least word equivalent under commuting disjoint neighbours.
QBWord commutation_normal_form(const QBWord& w) {
    std::vector<Interval> rest = w.factors, out;
    while (!rest.empty()) {
        std::size_t best = rest.size();
        for (std::size_t k = 0; k < rest.size(); ++k) {
            bool movable = true;
            for (std::size_t p = 0; p < k && movable; ++p) movable = rest[p].label_disjoint(rest[k]);
            if (movable && (best == rest.size() || rest[k] < rest[best])) best = k;
        }
        out.push_back(rest[best]);
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
    }
    return {w.n, out};
}

}  // namespace

std::vector<QBWord> ball(int n, int radius) {
    if (n < 2 || radius < 0 || radius > 6) throw InputError("ball parameters out of range");
    std::vector<Interval> gens;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) gens.push_back({a, b});
    std::set<QBWord> seen{QBWord{n, {}}};
    std::vector<QBWord> layer{QBWord{n, {}}};
    for (int r = 0; r < radius; ++r) {
        std::vector<QBWord> next;
        for (const auto& w : layer)
            for (const auto& g : gens) {
                if (!w.empty() && w.factors.back() == g) continue;
                QBWord x = w;
                x.factors.push_back(g);
                x = commutation_normal_form(x);
                if (seen.insert(x).second) next.push_back(x);
            }
        layer = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

}  // namespace moduli
