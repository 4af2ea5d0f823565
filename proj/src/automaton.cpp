#include "moduli/automaton.hpp"

#include <functional>
#include <map>
#include <queue>
#include <set>

#include "moduli/perm.hpp"

namespace moduli {

Automaton Automaton::identity() { return {{{false, 0, 0}}, 0}; }

Automaton Automaton::root_swap() { return {{{true, 1, 1}, {false, 1, 1}}, 0}; }

Automaton Automaton::spine_swap(int start) {
    if (start < 0) throw InputError("spine swap start depth must be non-negative");
    // States 0..start-1 walk down the spine without swapping, state start
    // swaps forever along it, and the last state is the identity.
    const int id = start + 1;
    Automaton a;
    for (int k = 0; k < start; ++k) a.states.push_back({false, k + 1, id});
    a.states.push_back({true, start, id});
    a.states.push_back({false, id, id});
    return a;
}

void Automaton::validate() const {
    const int m = static_cast<int>(states.size());
    if (m == 0) throw InputError("automaton has no states");
    if (initial < 0 || initial >= m) throw InputError("initial state out of range");
    for (const auto& s : states)
        if (s.left < 0 || s.left >= m || s.right < 0 || s.right >= m) throw InputError("successor state out of range");
}

Word Automaton::act(const Word& w) const {
    Word out = w;
    int q = initial;
    for (auto& ch : out) {
        if (ch != '0' && ch != '1') throw InputError("word must be binary");
        const auto& s = states[static_cast<std::size_t>(q)];
        const bool bit = ch == '1';
        q = bit ? s.right : s.left;
        ch = (bit != s.swap) ? '1' : '0';
    }
    return out;
}

int Automaton::state_after(const Word& w) const {
    int q = initial;
    for (char ch : w) {
        const auto& s = states[static_cast<std::size_t>(q)];
        q = ch == '1' ? s.right : s.left;
    }
    return q;
}

Automaton Automaton::restrict_to(const Word& w) const { return at_state(state_after(w)); }

Automaton Automaton::at_state(int q) const {
    Automaton a = *this;
    a.initial = q;
    return a;
}

Automaton Automaton::canonical() const {
    validate();
    // Moore refinement on the reachable part.
    std::vector<int> reach;
    std::vector<int> seen(states.size(), -1);
    std::queue<int> bfs;
    bfs.push(initial);
    seen[static_cast<std::size_t>(initial)] = 0;
    while (!bfs.empty()) {
        const int q = bfs.front();
        bfs.pop();
        reach.push_back(q);
        for (int nx : {states[static_cast<std::size_t>(q)].left, states[static_cast<std::size_t>(q)].right})
            if (seen[static_cast<std::size_t>(nx)] < 0) {
                seen[static_cast<std::size_t>(nx)] = 0;
                bfs.push(nx);
            }
    }
    std::vector<int> cls(states.size(), 0);
    for (int q : reach) cls[static_cast<std::size_t>(q)] = states[static_cast<std::size_t>(q)].swap ? 1 : 0;
    for (;;) {
        std::map<std::tuple<int, int, int>, int> sig;
        std::vector<int> next(states.size(), 0);
        for (int q : reach) {
            const auto& s = states[static_cast<std::size_t>(q)];
            auto key = std::make_tuple(cls[static_cast<std::size_t>(q)], cls[static_cast<std::size_t>(s.left)],
                                       cls[static_cast<std::size_t>(s.right)]);
            auto it = sig.emplace(key, static_cast<int>(sig.size())).first;
            next[static_cast<std::size_t>(q)] = it->second;
        }
        std::set<int> before, after;
        for (int q : reach) {
            before.insert(cls[static_cast<std::size_t>(q)]);
            after.insert(next[static_cast<std::size_t>(q)]);
        }
        cls = next;
        if (after.size() == before.size()) break;
    }
    // Breadth-first renumbering of the classes.
    std::map<int, int> id;
    std::vector<int> rep;
    std::queue<int> order;
    auto visit = [&](int q) {
        const int c = cls[static_cast<std::size_t>(q)];
        if (id.emplace(c, static_cast<int>(rep.size())).second) {
            rep.push_back(q);
            order.push(q);
        }
    };
    visit(initial);
    while (!order.empty()) {
        const int q = order.front();
        order.pop();
        visit(states[static_cast<std::size_t>(q)].left);
        visit(states[static_cast<std::size_t>(q)].right);
    }
    Automaton out;
    out.initial = 0;
    for (int q : rep) {
        const auto& s = states[static_cast<std::size_t>(q)];
        out.states.push_back({s.swap, id.at(cls[static_cast<std::size_t>(s.left)]),
                              id.at(cls[static_cast<std::size_t>(s.right)])});
    }
    return out;
}

bool Automaton::is_identity() const {
    const Automaton c = canonical();
    return c.states.size() == 1 && !c.states[0].swap;
}

bool Automaton::is_finitary() const {
    const Automaton c = canonical();
    // Non-identity states must form a DAG: a cycle through one of them swaps infinitely often.
    const int m = static_cast<int>(c.states.size());
    // In a minimal machine the identity is the unique non-swapping self-loop state.
    std::vector<bool> ident(static_cast<std::size_t>(m), false);
    for (int q = 0; q < m; ++q) {
        const auto& s = c.states[static_cast<std::size_t>(q)];
        ident[static_cast<std::size_t>(q)] = !s.swap && s.left == q && s.right == q;
    }
    std::vector<int> color(static_cast<std::size_t>(m), 0);
    bool cyclic = false;
    std::function<void(int)> dfs = [&](int q) {
        if (ident[static_cast<std::size_t>(q)] || cyclic) return;
        color[static_cast<std::size_t>(q)] = 1;
        for (int nx : {c.states[static_cast<std::size_t>(q)].left, c.states[static_cast<std::size_t>(q)].right}) {
            if (ident[static_cast<std::size_t>(nx)]) continue;
            if (color[static_cast<std::size_t>(nx)] == 1) cyclic = true;
            else if (color[static_cast<std::size_t>(nx)] == 0) dfs(nx);
        }
        color[static_cast<std::size_t>(q)] = 2;
    };
    dfs(c.initial);
    return !cyclic;
}

Automaton automaton_compose(const Automaton& a, const Automaton& b) {
    a.validate();
    b.validate();
    std::map<std::pair<int, int>, int> id;
    std::vector<std::pair<int, int>> todo;
    auto get = [&](int qa, int qb) {
        auto [it, fresh] = id.emplace(std::make_pair(qa, qb), static_cast<int>(todo.size()));
        if (fresh) todo.emplace_back(qa, qb);
        return it->second;
    };
    get(a.initial, b.initial);
    Automaton out;
    for (std::size_t k = 0; k < todo.size(); ++k) {
        const auto [qa, qb] = todo[k];
        const auto& sa = a.states[static_cast<std::size_t>(qa)];
        const auto& sb = b.states[static_cast<std::size_t>(qb)];
        // Letter c enters b; b emits c xor sb.swap, which a then reads.
        auto a_after = [&](bool c) { return (c != sb.swap) ? sa.right : sa.left; };
        const int l = get(a_after(false), sb.left);
        const int r = get(a_after(true), sb.right);
        out.states.push_back({sa.swap != sb.swap, l, r});
    }
    out.initial = 0;
    return out;
}

Automaton automaton_inverse(const Automaton& a) {
    a.validate();
    Automaton out = a;
    for (auto& s : out.states)
        if (s.swap) std::swap(s.left, s.right);
    return out;
}

bool automaton_equal(const Automaton& a, const Automaton& b) {
    a.validate();
    b.validate();
    std::set<std::pair<int, int>> seen{{a.initial, b.initial}};
    std::queue<std::pair<int, int>> bfs;
    bfs.push({a.initial, b.initial});
    while (!bfs.empty()) {
        const auto [p, q] = bfs.front();
        bfs.pop();
        const auto& sp = a.states[static_cast<std::size_t>(p)];
        const auto& sq = b.states[static_cast<std::size_t>(q)];
        if (sp.swap != sq.swap) return false;
        for (auto nx : {std::make_pair(sp.left, sq.left), std::make_pair(sp.right, sq.right)})
            if (seen.insert(nx).second) bfs.push(nx);
    }
    return true;
}

Automaton automaton_join(bool swap, const Automaton& l, const Automaton& r) {
    l.validate();
    r.validate();
    Automaton out;
    const int ol = 1, orr = 1 + static_cast<int>(l.states.size());
    out.states.push_back({swap, ol + l.initial, orr + r.initial});
    for (auto s : l.states) out.states.push_back({s.swap, s.left + ol, s.right + ol});
    for (auto s : r.states) out.states.push_back({s.swap, s.left + orr, s.right + orr});
    out.initial = 0;
    return out.canonical();
}

}  // namespace moduli
