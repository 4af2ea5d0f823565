#include "moduli/strata.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace moduli {

std::vector<std::pair<NestedCollection, Perm>> class_representatives(const NestedCollection& c,
                                                                     const Perm& sigma) {
    if (sigma.size() != c.n) throw InputError("permutation size differs from leaf count");
    std::vector<Interval> order = c.items;
    std::stable_sort(order.begin(), order.end(),
                     [](const Interval& a, const Interval& b) { return a.size() < b.size(); });
    const std::size_t k = order.size();
    std::vector<std::pair<NestedCollection, Perm>> reps;
    reps.reserve(std::size_t{1} << k);
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        NestedCollection cur = c;
        Perm p = sigma;
        for (std::size_t i = 0; i < k; ++i) {
            if (!(mask >> i & 1u)) continue;
            cur = conjugate_collection(order[i], cur);
            p = p * omega(order[i], c.n);
        }
        reps.emplace_back(std::move(cur), std::move(p));
    }
    return reps;
}

StratumClass canonicalize_bruteforce(const NestedCollection& c, const Perm& sigma) {
    StratumClass best{c, sigma};
    for (auto& [cc, p] : class_representatives(c, sigma)) {
        StratumClass cand{std::move(cc), std::move(p)};
        if (cand < best) best = std::move(cand);
    }
    return best;
}

StratumClass canonicalize(const NestedCollection& c, const Perm& sigma) {
    if (sigma.size() != c.n) throw InputError("permutation size differs from leaf count");
    if (!is_nested(c.items)) throw InputError("collection is not nested");
    const int n = c.n;
    if (c.items.empty()) return {c, sigma};

    // Vertices: index 0 is the root [1,n], then the collection's intervals.
    std::vector<Interval> verts{{1, n}};
    std::vector<Interval> sorted = c.items;
    std::sort(sorted.begin(), sorted.end(), [](const Interval& a, const Interval& b) {
        return a.lo != b.lo ? a.lo < b.lo : a.hi > b.hi;
    });
    verts.insert(verts.end(), sorted.begin(), sorted.end());

    // Children in left-to-right order; a child is a leaf (encoded as -label) or a vertex.
    std::vector<std::vector<int>> kids(verts.size());
    std::vector<int> parent(verts.size(), -1);
    std::vector<int> stack{0};
    for (std::size_t v = 1; v < verts.size(); ++v) {
        while (!verts[static_cast<std::size_t>(stack.back())].contains(verts[v])) stack.pop_back();
        parent[v] = stack.back();
        stack.push_back(static_cast<int>(v));
    }
    std::vector<std::vector<int>> sub(verts.size());
    for (std::size_t v = 1; v < verts.size(); ++v) sub[static_cast<std::size_t>(parent[v])].push_back(static_cast<int>(v));
    for (std::size_t v = 0; v < verts.size(); ++v) {
        int x = verts[v].lo;
        std::size_t s = 0;
        while (x <= verts[v].hi) {
            if (s < sub[v].size() && verts[static_cast<std::size_t>(sub[v][s])].lo == x) {
                kids[v].push_back(sub[v][s]);
                x = verts[static_cast<std::size_t>(sub[v][s])].hi + 1;
                ++s;
            } else {
                kids[v].push_back(-x);
                ++x;
            }
        }
    }

    auto less_seq = [&](const std::vector<int>& a, const std::vector<int>& b) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (sigma(a[i]) != sigma(b[i])) return sigma(a[i]) < sigma(b[i]);
        return false;
    };
    std::function<std::vector<int>(int)> arrange = [&](int v) {
        std::vector<std::vector<int>> parts;
        for (int ch : kids[static_cast<std::size_t>(v)]) {
            if (ch < 0) parts.push_back({-ch});
            else parts.push_back(arrange(ch));
        }
        std::vector<int> fwd, bwd;
        for (const auto& p : parts) fwd.insert(fwd.end(), p.begin(), p.end());
        if (v == 0) return fwd;
        for (auto it = parts.rbegin(); it != parts.rend(); ++it) bwd.insert(bwd.end(), it->begin(), it->end());
        return less_seq(bwd, fwd) ? bwd : fwd;
    };
    const std::vector<int> order = arrange(0);

    std::vector<int> newpos(static_cast<std::size_t>(n) + 1);
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        newpos[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] = k + 1;
        img[static_cast<std::size_t>(k)] = sigma(order[static_cast<std::size_t>(k)]);
    }
    NestedCollection out;
    out.n = n;
    for (const auto& t : c.items) {
        int a = n, b = 1;
        for (int x = t.lo; x <= t.hi; ++x) {
            a = std::min(a, newpos[static_cast<std::size_t>(x)]);
            b = std::max(b, newpos[static_cast<std::size_t>(x)]);
        }
        out.items.push_back({a, b});
    }
    std::sort(out.items.begin(), out.items.end());
    return {std::move(out), Perm(std::move(img))};
}

bool is_face(const StratumClass& a, const StratumClass& b) {
    if (a.n() != b.n()) throw InputError("cells live in different ambient sizes");
    if (a.collection.size() < b.collection.size()) return false;
    const auto ra = class_representatives(a.collection, a.perm);
    const auto rb = class_representatives(b.collection, b.perm);
    for (const auto& [cb, pb] : rb)
        for (const auto& [ca, pa] : ra) {
            if (pa != pb) continue;
            if (std::includes(ca.items.begin(), ca.items.end(), cb.items.begin(), cb.items.end())) return true;
        }
    return false;
}

StratumClass antipodal(const StratumClass& c) {
    const int n = c.n();
    NestedCollection j = conjugate_collection({1, n}, c.collection);
    return canonicalize(j, c.perm * Perm::reversal(n, 1, n));
}

StratumClass bar_canonical(const StratumClass& c) {
    StratumClass a = canonicalize(c.collection, c.perm);
    StratumClass b = antipodal(a);
    return std::min(a, b);
}

StratumClass stabilize_stratum(const StratumClass& c) {
    return canonicalize(expand_collection(c.collection), expand_perm(c.perm));
}

std::vector<std::pair<StratumClass, int>> cofaces(const StratumClass& c) {
    std::map<StratumClass, int> acc;
    for (const auto& t : c.collection.items) {
        ++acc[canonicalize(c.collection.without(t), c.perm)];
        NestedCollection flipped = conjugate_collection(t, c.collection);
        ++acc[canonicalize(flipped.without(t), c.perm * omega(t, c.n()))];
    }
    return {acc.begin(), acc.end()};
}

std::vector<UnrootedLabeledTree> unrooted_orbit(const UnrootedLabeledTree& ut) {
    std::set<UnrootedLabeledTree> seen{ut};
    std::vector<UnrootedLabeledTree> frontier{ut};
    while (!frontier.empty()) {
        std::vector<UnrootedLabeledTree> next;
        for (const auto& t : frontier) {
            std::vector<UnrootedLabeledTree> nb{t.rotated(1), t.mirrored()};
            for (auto e : t.splits) {
                nb.push_back(nabla_bar_down(t, e));
                nb.push_back(nabla_bar_up(t, e));
            }
            for (auto& x : nb)
                if (seen.insert(x).second) next.push_back(std::move(x));
        }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

UnrootedLabeledTree unrooted_canonical_bfs(const UnrootedLabeledTree& ut) { return unrooted_orbit(ut).front(); }

UnrootedLabeledTree unrooted_canonical(const UnrootedLabeledTree& ut) {
    const int N = ut.N;
    int p0 = 0;
    while (ut.labels[static_cast<std::size_t>(p0)] != 0) ++p0;
    const UnrootedLabeledTree r = ut.rotated(-p0);
    NestedCollection c;
    c.n = N - 1;
    for (auto s : r.splits) {
        const auto pos = split_positions(s, N);
        c.items.push_back({pos.front(), pos.back()});
    }
    std::sort(c.items.begin(), c.items.end());
    std::vector<int> img(r.labels.begin() + 1, r.labels.end());
    const StratumClass b = bar_canonical(StratumClass{c, Perm(std::move(img))});
    return UnrootedLabeledTree::from_rooted(b.collection, b.perm);
}

std::vector<std::pair<UnrootedLabeledTree, int>> unrooted_cofaces(const UnrootedLabeledTree& ut) {
    std::map<UnrootedLabeledTree, int> acc;
    for (auto e : ut.splits) {
        ++acc[unrooted_canonical_bfs(ut.without(e))];
        ++acc[unrooted_canonical_bfs(nabla_bar_down(ut, e).without(e))];
    }
    return {acc.begin(), acc.end()};
}

std::vector<long long> CellComplexModel::f_vector() const {
    std::vector<long long> f(static_cast<std::size_t>(std::max(0, top_dim() + 1)), 0);
    for (int d : dims) ++f[static_cast<std::size_t>(d)];
    return f;
}

long long CellComplexModel::euler_characteristic() const {
    long long chi = 0;
    for (int d : dims) chi += (d % 2 == 0) ? 1 : -1;
    return chi;
}

namespace {

void check_range(int n, int max_n) {
    if (n < 3) throw InputError("moduli complexes need n >= 3");
    if (n > max_n) throw InputError("n exceeds the configured bound " + std::to_string(max_n));
}

template <class Cell, class Cofaces>
void assemble(CellComplexModel& m, std::vector<Cell>& cells, std::vector<Cell>& store, Cofaces&& cof,
              auto&& dim_of) {
    std::sort(cells.begin(), cells.end(), [&](const Cell& a, const Cell& b) {
        const int da = dim_of(a), db = dim_of(b);
        return da != db ? da < db : a < b;
    });
    std::map<Cell, int> index;
    for (std::size_t i = 0; i < cells.size(); ++i) index.emplace(cells[i], static_cast<int>(i));
    m.dims.clear();
    for (const auto& c : cells) m.dims.push_back(dim_of(c));
    m.faces.assign(cells.size(), {});
    for (std::size_t i = 0; i < cells.size(); ++i)
        for (const auto& [up, mult] : cof(cells[i])) {
            auto it = index.find(up);
            if (it == index.end()) throw ComputationError("coface missing from the cell list");
            m.faces[static_cast<std::size_t>(it->second)].emplace_back(static_cast<int>(i), mult);
        }
    for (auto& f : m.faces) std::sort(f.begin(), f.end());
    store = std::move(cells);
}

}  // namespace

CellComplexModel build_tilde_complex(int n, int max_n) {
    check_range(n, max_n);
    std::vector<StratumClass> cells;
    for (const auto& c : all_nested_collections(n)) {
        std::vector<int> img(static_cast<std::size_t>(n));
        std::iota(img.begin(), img.end(), 1);
        do {
            Perm p(img);
            StratumClass k = canonicalize(c, p);
            if (k.perm == p && k.collection == c) cells.push_back(std::move(k));
        } while (std::next_permutation(img.begin(), img.end()));
    }
    CellComplexModel m;
    m.n = n;
    m.variant = "tilde";
    assemble(m, cells, m.strata, [](const StratumClass& c) { return cofaces(c); },
             [](const StratumClass& c) { return c.dim(); });
    return m;
}

CellComplexModel build_bar_complex(int n, int max_n) {
    const CellComplexModel t = build_tilde_complex(n, max_n);
    std::set<StratumClass> reps;
    for (const auto& c : t.strata) reps.insert(bar_canonical(c));
    std::vector<StratumClass> cells(reps.begin(), reps.end());
    CellComplexModel m;
    m.n = n;
    m.variant = "bar";
    auto cof = [](const StratumClass& c) {
        std::map<StratumClass, int> acc;
        for (const auto& [up, mult] : cofaces(c)) acc[bar_canonical(up)] += mult;
        return std::vector<std::pair<StratumClass, int>>(acc.begin(), acc.end());
    };
    assemble(m, cells, m.strata, cof, [](const StratumClass& c) { return c.dim(); });
    return m;
}

CellComplexModel build_bar_complex_unrooted(int n, int max_n) {
    check_range(n, max_n);
    const int N = n + 1;
    std::set<UnrootedLabeledTree> seen;
    std::vector<UnrootedLabeledTree> cells;
    for (const auto& d : all_dissections(N)) {
        std::vector<int> lab(static_cast<std::size_t>(N));
        std::iota(lab.begin(), lab.end(), 0);
        do {
            UnrootedLabeledTree t(N, d, lab);
            if (seen.count(t)) continue;
            auto orbit = unrooted_orbit(t);
            cells.push_back(orbit.front());
            seen.insert(orbit.begin(), orbit.end());
        } while (std::next_permutation(lab.begin(), lab.end()));
    }
    CellComplexModel m;
    m.n = n;
    m.variant = "bar-unrooted";
    assemble(m, cells, m.unrooted, [](const UnrootedLabeledTree& c) { return unrooted_cofaces(c); },
             [](const UnrootedLabeledTree& c) { return c.dim(); });
    return m;
}

}  // namespace moduli
