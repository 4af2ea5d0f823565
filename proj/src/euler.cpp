#include "moduli/euler.hpp"

#include <map>
#include <numeric>
#include <sstream>

namespace moduli {

namespace {

constexpr std::size_t kMaxPeriod = std::size_t{1} << 22;

std::size_t checked_lcm(std::size_t a, std::size_t b) {
    const std::size_t l = std::lcm(a, b);
    if (l > kMaxPeriod) throw ComputationError("period of the length sequence is too long");
    return l;
}

// Generic constructor from a value function with known preperiod/period bounds.
template <class F>
RClassBit from_values(std::size_t pre, std::size_t per, F value) {
    std::vector<std::uint8_t> a(pre), b(per);
    for (std::size_t k = 0; k < pre; ++k) a[k] = value(k);
    for (std::size_t k = 0; k < per; ++k) b[k] = value(pre + k);
    return RClassBit(std::move(a), std::move(b));
}

RClassBit shifted(const RClassBit& s, std::size_t d) {
    return from_values(s.preperiod.size() + d, s.period.size(),
                       [&](std::size_t k) -> std::uint8_t { return k < d ? 0 : s.at(k - d); });
}

int leaf_depth(const BinaryTree& t, const std::string& leaf) {
    return static_cast<int>(leaf.size()) - (t.roots == 3 ? 1 : 0);
}

}  // namespace

RClassBit::RClassBit(std::vector<std::uint8_t> pre, std::vector<std::uint8_t> per)
    : preperiod(std::move(pre)), period(std::move(per)) {
    if (period.empty()) throw InputError("period must be nonempty");
    for (auto* v : {&preperiod, &period})
        for (auto& x : *v) {
            if (x > 1) throw InputError("sequence entries must be bits");
        }
    const std::size_t p = period.size();
    for (std::size_t d = 1; d <= p; ++d) {
        if (p % d) continue;
        bool ok = true;
        for (std::size_t k = d; k < p && ok; ++k) ok = period[k] == period[k - d];
        if (ok) {
            period.resize(d);
            break;
        }
    }
    while (!preperiod.empty() && preperiod.back() == period.back()) {
        std::rotate(period.rbegin(), period.rbegin() + 1, period.rend());
        preperiod.pop_back();
    }
}

std::uint8_t RClassBit::at(std::size_t k) const {
    if (k < preperiod.size()) return preperiod[k];
    return period[(k - preperiod.size()) % period.size()];
}

int RClassBit::constant_value() const { return period.size() == 1 ? period[0] : -1; }

std::string RClassBit::str() const {
    std::ostringstream os;
    for (auto b : preperiod) os << int(b);
    os << '(';
    for (auto b : period) os << int(b);
    os << ")*";
    return os.str();
}

RClassBit operator+(const RClassBit& a, const RClassBit& b) {
    const std::size_t pre = std::max(a.preperiod.size(), b.preperiod.size());
    const std::size_t per = checked_lcm(a.period.size(), b.period.size());
    return from_values(pre, per, [&](std::size_t k) -> std::uint8_t { return a.at(k) ^ b.at(k); });
}

bool operator==(const RClassBit& a, const RClassBit& b) {
    if (a.period.size() != b.period.size()) return false;
    const std::size_t start = std::max(a.preperiod.size(), b.preperiod.size());
    for (std::size_t k = start; k < start + a.period.size(); ++k)
        if (a.at(k) != b.at(k)) return false;
    return true;
}

RClassBit swap_parity_sequence(const Automaton& a0) {
    const Automaton a = a0.canonical();
    const std::size_t m = a.states.size();
    std::vector<std::uint8_t> v(m, 0);
    v[static_cast<std::size_t>(a.initial)] = 1;
    std::map<std::vector<std::uint8_t>, std::size_t> seen;
    std::vector<std::uint8_t> s;
    while (true) {
        auto [it, fresh] = seen.emplace(v, s.size());
        if (!fresh) {
            const std::size_t j = it->second;
            return RClassBit({s.begin(), s.begin() + static_cast<std::ptrdiff_t>(j)},
                             {s.begin() + static_cast<std::ptrdiff_t>(j), s.end()});
        }
        if (s.size() > kMaxPeriod) throw ComputationError("swap sequence did not become periodic");
        std::uint8_t bit = 0;
        std::vector<std::uint8_t> next(m, 0);
        for (std::size_t q = 0; q < m; ++q) {
            if (!v[q]) continue;
            const auto& st = a.states[q];
            bit ^= static_cast<std::uint8_t>(st.swap);
            next[static_cast<std::size_t>(st.left)] ^= 1;
            next[static_cast<std::size_t>(st.right)] ^= 1;
        }
        s.push_back(bit);
        v = std::move(next);
    }
}

RClassBit cumulative_sum(const RClassBit& s) {
    const std::size_t pre = s.preperiod.size(), p = s.period.size();
    const std::size_t len = pre + 2 * p;
    std::vector<std::uint8_t> c(len);
    std::uint8_t acc = 0;
    for (std::size_t k = 0; k < len; ++k) {
        c[k] = acc;
        acc ^= s.at(k);
    }
    return RClassBit({c.begin(), c.begin() + static_cast<std::ptrdiff_t>(pre)},
                     {c.begin() + static_cast<std::ptrdiff_t>(pre), c.end()});
}

void LiftedNSymbol::validate() const {
    base.validate();
    if (word.n != base.leaf_count()) throw InputError("quasi-braid word size differs from the leaf count");
    if (phi(word) != base.leaf_map) throw InputError("quasi-braid word does not induce the leaf map");
}

LiftedNSymbol lift_v(const TreePairSymbol& s, const QBWord& w) {
    LiftedNSymbol f{to_spheromorphism(s), w};
    f.validate();
    return f;
}

LiftedNSymbol canonical_lift(const SpheromorphismSymbol& g) {
    SpheromorphismSymbol r = reduce_spheromorphism(g);
    QBWord w = section_word(r.leaf_map);
    return {std::move(r), std::move(w)};
}

LiftedNSymbol lift_with_word(const SpheromorphismSymbol& g, const QBWord& w) {
    LiftedNSymbol f{g, w};
    for (auto& a : f.base.automata) a = a.canonical();
    f.validate();
    return f;
}

LiftedNSymbol lifted_expand(const LiftedNSymbol& f, int i) {
    if (i < 1 || i > f.base.leaf_count()) throw InputError("leaf index out of range");
    const Automaton& q = f.base.automata[static_cast<std::size_t>(i - 1)];
    const bool swap = q.states[static_cast<std::size_t>(q.initial)].swap;
    LiftedNSymbol out{expand_spheromorphism(f.base, i), simple_expand_word(f.word, i)};
    if (swap) out.word = out.word * QBWord(out.word.n, {{i, i + 1}});
    return out;
}

LiftedNSymbol lifted_expand_to_complete(const LiftedNSymbol& f, int depth) {
    LiftedNSymbol cur = f;
    for (std::size_t i = 0; i < cur.base.source.leaves.size();) {
        const int d = leaf_depth(cur.base.source, cur.base.source.leaves[i]);
        if (d > depth) throw InputError("source tree is deeper than the requested level");
        if (d < depth) {
            cur = lifted_expand(cur, static_cast<int>(i) + 1);
        } else {
            ++i;
        }
    }
    return cur;
}

LiftedNSymbol lifted_compose(const LiftedNSymbol& f0, const LiftedNSymbol& g0) {
    f0.validate();
    g0.validate();
    if (f0.base.roots() != g0.base.roots()) throw InputError("elements act on different trees");
    LiftedNSymbol f = f0, g = g0;
    while (g.base.target != f.base.source) {
        bool moved = false;
        const auto& fs = f.base.source.leaves;
        const auto& gt = g.base.target.leaves;
        for (std::size_t a = 0; a < fs.size() && !moved; ++a)
            for (std::size_t b = 0; b < gt.size() && !moved; ++b) {
                if (fs[a] == gt[b]) continue;
                if (gt[b].compare(0, fs[a].size(), fs[a]) == 0) {
                    f = lifted_expand(f, static_cast<int>(a) + 1);
                    moved = true;
                } else if (fs[a].compare(0, gt[b].size(), gt[b]) == 0) {
                    g = lifted_expand(g, g.base.leaf_map.inverse()(static_cast<int>(b) + 1));
                    moved = true;
                }
            }
        if (!moved) throw ComputationError("trees have no common refinement");
    }
    LiftedNSymbol out;
    out.base.target = f.base.target;
    out.base.source = g.base.source;
    out.base.leaf_map = f.base.leaf_map * g.base.leaf_map;
    for (int i = 1; i <= g.base.leaf_count(); ++i)
        out.base.automata.push_back(
            automaton_compose(f.base.automata[static_cast<std::size_t>(g.base.leaf_map(i) - 1)],
                              g.base.automata[static_cast<std::size_t>(i - 1)])
                .canonical());
    out.word = f.word * g.word;
    return out;
}

LiftedNSymbol lifted_inverse(const LiftedNSymbol& f) {
    f.validate();
    const Perm inv = f.base.leaf_map.inverse();
    LiftedNSymbol out;
    out.base.target = f.base.source;
    out.base.source = f.base.target;
    out.base.leaf_map = inv;
    for (int j = 1; j <= inv.size(); ++j)
        out.base.automata.push_back(automaton_inverse(f.base.automata[static_cast<std::size_t>(inv(j) - 1)]).canonical());
    out.word = inverse(f.word);
    return out;
}

LiftedNSymbol lifted_commutator(const LiftedNSymbol& f, const LiftedNSymbol& g) {
    return lifted_compose(lifted_compose(f, g), lifted_compose(lifted_inverse(f), lifted_inverse(g)));
}

RClassBit stable_length_seq(const LiftedNSymbol& f) {
    f.validate();
    RClassBit total = RClassBit::embed(length(f.word));
    for (int i = 1; i <= f.base.leaf_count(); ++i) {
        const auto& q = f.base.automata[static_cast<std::size_t>(i - 1)];
        if (q.is_identity()) continue;
        const int d = leaf_depth(f.base.source, f.base.source.leaves[static_cast<std::size_t>(i - 1)]);
        total = total + shifted(cumulative_sum(swap_parity_sequence(q)), static_cast<std::size_t>(d));
    }
    return total;
}

int level_length(const LiftedNSymbol& f, int k) { return length(lifted_expand_to_complete(f, k).word); }

RClassBit euler_cocycle_lifted(const LiftedNSymbol& f, const LiftedNSymbol& g) {
    return stable_length_seq(lifted_compose(f, g)) + stable_length_seq(f) + stable_length_seq(g);
}

RClassBit euler_cocycle(const SpheromorphismSymbol& f, const SpheromorphismSymbol& g) {
    return euler_cocycle_lifted(canonical_lift(f), canonical_lift(g));
}

SpheromorphismSymbol commutator_n(const SpheromorphismSymbol& a, const SpheromorphismSymbol& b) {
    return compose_n(compose_n(a, b), compose_n(inverse_n(a), inverse_n(b)));
}

int pair_with_cycle_lifted(const std::vector<std::pair<LiftedNSymbol, LiftedNSymbol>>& rel) {
    if (rel.empty()) return 0;
    const int roots = rel.front().first.base.roots();
    SpheromorphismSymbol base = SpheromorphismSymbol::identity(roots);
    for (const auto& [f, g] : rel) base = compose_n(base, commutator_n(f.base, g.base));
    if (!equal_n(base, SpheromorphismSymbol::identity(roots)))
        throw InputError("the product of commutators is not the identity");
    LiftedNSymbol prod{SpheromorphismSymbol::identity(roots), QBWord(roots == 3 ? 3 : 1, {})};
    if (roots == 3) prod.base = SpheromorphismSymbol::identity(3);
    for (const auto& [f, g] : rel) prod = lifted_compose(prod, lifted_commutator(f, g));
    const int v = stable_length_seq(prod).constant_value();
    if (v < 0) throw ComputationError("lifted relation has a non-constant length class");
    return v;
}

int pair_with_cycle(const std::vector<std::pair<SpheromorphismSymbol, SpheromorphismSymbol>>& rel) {
    std::vector<std::pair<LiftedNSymbol, LiftedNSymbol>> lifted;
    for (const auto& [f, g] : rel) lifted.emplace_back(canonical_lift(f), canonical_lift(g));
    return pair_with_cycle_lifted(lifted);
}

SpheromorphismSymbol spine_translation(bool forward) {
    BinaryTree a{1, {"0", "10", "11"}}, b{1, {"00", "01", "1"}};
    SpheromorphismSymbol s{b, a, Perm::identity(3), std::vector<Automaton>(3, Automaton::identity())};
    if (!forward) std::swap(s.target, s.source);
    return s;
}

SpheromorphismSymbol spine_swap_element(int start) {
    return {BinaryTree::trivial(), BinaryTree::trivial(), Perm::identity(1), {Automaton::spine_swap(start).canonical()}};
}

BinaryTree euler_relation_tree() { return BinaryTree{1, {"000", "001", "010", "011", "1"}}; }

EulerRelation resolve_euler_relation() {
    const BinaryTree t = euler_relation_tree();
    auto on_tree = [&](std::vector<int> img) {
        return SpheromorphismSymbol{t, t, Perm(std::move(img)), std::vector<Automaton>(5, Automaton::identity())};
    };
    EulerRelation r;
    r.tau1 = on_tree({3, 2, 1, 4, 5});
    r.sigma = on_tree({2, 1, 4, 3, 5});
    r.tau = on_tree({3, 4, 1, 2, 5});
    r.delta = spine_translation(true);
    for (int start : {1, 2}) {
        const auto alpha = spine_swap_element(start);
        if (!equal_n(r.tau, commutator_n(r.delta, alpha))) continue;
        r.alpha = alpha;
        r.spine_start = start;
        return r;
    }
    throw ComputationError("no candidate spine offset realizes the commutator relation");
}

}  // namespace moduli
