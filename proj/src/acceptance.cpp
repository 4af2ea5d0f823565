#include "moduli/acceptance.hpp"

#include <chrono>
#include <functional>
#include <future>
#include <map>
#include <mutex>
#include <sstream>

#include "moduli/certificates.hpp"
#include "moduli/euler.hpp"
#include "moduli/f2.hpp"
#include "moduli/tower.hpp"

namespace moduli {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string join(const std::vector<long long>& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}

std::vector<long long> widen(const std::vector<int>& v) { return {v.begin(), v.end()}; }

// Complexes are shared between criteria and built at most once.
class ComplexCache {
public:
    const CellComplexModel& get(const std::string& variant, int n) {
        std::shared_future<CellComplexModel> f;
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto key = std::make_pair(variant, n);
            auto it = cache_.find(key);
            if (it == cache_.end()) {
                std::promise<CellComplexModel> p;
                f = p.get_future().share();
                cache_.emplace(key, f);
                try {
                    p.set_value(build(variant, n));
                } catch (...) {
                    p.set_exception(std::current_exception());
                }
            } else {
                f = it->second;
            }
        }
        return f.get();
    }

private:
    static CellComplexModel build(const std::string& variant, int n) {
        if (variant == "tilde") return build_tilde_complex(n);
        if (variant == "bar") return build_bar_complex(n);
        return build_bar_complex_unrooted(n);
    }
    std::mutex mu_;
    std::map<std::pair<std::string, int>, std::shared_future<CellComplexModel>> cache_;
};

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            if (pass) detail.str("");
            pass = false;
            detail << "failed: " << what << "; ";
        }
    }
};

long long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

void tiling_counts(ComplexCache& cc, Rng&, Outcome& o) {
    const auto t0 = Clock::now();
    for (int n = 3; n <= 6; ++n) {
        const auto ft = cc.get("tilde", n).f_vector(), fb = cc.get("bar", n).f_vector();
        o.require(ft.back() == factorial(n), "tilde top cells for n=" + std::to_string(n));
        o.require(fb.back() == factorial(n) / 2, "bar top cells for n=" + std::to_string(n));
    }
    const double s = since(t0);
    o.require(s < 10, "time budget");
    if (o.pass) o.detail << "top cells n!, n!/2 for n=3..6 within 10 s";
}

void f_vectors(ComplexCache& cc, Rng&, Outcome& o) {
    struct Row {
        const char* variant;
        int n;
        std::vector<long long> f;
        long long chi;
    };
    const std::vector<Row> rows{{"tilde", 3, {6, 6}, 0},
                                {"bar", 3, {3, 3}, 0},
                                {"tilde", 4, {30, 60, 24}, -6},
                                {"bar", 4, {15, 30, 12}, -3}};
    for (const auto& r : rows) {
        const auto& m = cc.get(r.variant, r.n);
        o.require(m.f_vector() == r.f, std::string(r.variant) + " f-vector " + join(m.f_vector()));
        o.require(m.euler_characteristic() == r.chi, std::string(r.variant) + " Euler characteristic");
        if (o.pass) o.detail << r.variant << r.n << '=' << join(r.f) << " chi=" << r.chi << "; ";
    }
}

void model_cross_check(ComplexCache& cc, Rng&, Outcome& o) {
    for (int n = 3; n <= 5; ++n) {
        const auto& a = cc.get("bar", n);
        const auto& b = cc.get("bar-unrooted", n);
        const auto ha = homology_f2(chain_complex(a)), hb = homology_f2(chain_complex(b));
        o.require(a.f_vector() == b.f_vector(), "f-vectors differ for n=" + std::to_string(n));
        o.require(ha == hb, "Betti numbers differ for n=" + std::to_string(n));
        if (o.pass) o.detail << "n=" << n << ' ' << join(a.f_vector()) << " betti " << join(widen(ha)) << "; ";
    }
}

void boundary_and_antipode(ComplexCache& cc, Rng&, Outcome& o) {
    int complexes = 0;
    for (int n = 3; n <= 6; ++n)
        for (const char* v : {"tilde", "bar", "bar-unrooted"}) {
            if (std::string(v) == "bar-unrooted" && n > 5) continue;
            const auto& m = cc.get(v, n);
            o.require(boundary_squared_zero(chain_complex(m)), std::string(v) + " boundary squared, n=" + std::to_string(n));
            ++complexes;
        }
    std::size_t cells = 0;
    for (int n = 3; n <= 6; ++n) {
        for (const auto& c : cc.get("tilde", n).strata) {
            const auto a = antipodal(c);
            o.require(a != c, "antipodal fixed cell");
            o.require(antipodal(a) == c, "antipodal map is not an involution");
            ++cells;
        }
    }
    if (o.pass) o.detail << complexes << " complexes with zero squared boundary; antipode free on " << cells << " cells";
}

void betti_numbers(ComplexCache& cc, Rng&, Outcome& o) {
    const auto hb = homology_f2(chain_complex(cc.get("bar", 4)));
    const auto ht = homology_f2(chain_complex(cc.get("tilde", 4)));
    o.require(hb == std::vector<int>{1, 5, 1}, "bar n=4 Betti " + join(widen(hb)));
    o.require(ht == std::vector<int>{1, 8, 1}, "tilde n=4 Betti " + join(widen(ht)));
    for (const char* v : {"tilde", "bar"})
        for (int n = 3; n <= 6; ++n) {
            const auto h = homology_f2(chain_complex(cc.get(v, n)));
            long long chi = 0;
            for (std::size_t i = 0; i < h.size(); ++i) chi += (i % 2 ? -1 : 1) * h[i];
            o.require(chi == cc.get(v, n).euler_characteristic(), "Betti numbers disagree with chi");
        }
    if (o.pass) o.detail << "bar (1,5,1), tilde (1,8,1); chi consistent for n=3..6";
}

void length_well_defined(ComplexCache&, Rng&, Outcome& o) {
    std::size_t count = 0;
    for (int n = 2; n <= 8; ++n)
        for (const auto& [l, r] : relation_instances(n)) {
            o.require(length(l) == length(r), "relation changes length: " + l.str() + " vs " + r.str());
            o.require(phi(l) == phi(r), "relation changes phi");
            ++count;
        }
    if (o.pass) o.detail << count << " relation instances for n<=8";
}

void expansion_compatibility(ComplexCache&, Rng& rng, Outcome& o) {
    for (int t = 0; t < 500; ++t) {
        const int n = 2 + static_cast<int>(rng() % 5);
        const auto w = random_word(rng, n, 1 + static_cast<int>(rng() % 8));
        const auto e = expand_word(w);
        o.require(length(e) == length(w), "length changed by expansion of " + w.str());
        o.require(phi(e) == expand_perm(phi(w)), "phi does not commute with expansion");
        const auto p = random_pure_word(rng, n, 1 + static_cast<int>(rng() % 6));
        o.require(phi(expand_word(p)).is_identity(), "expansion of a pure word is not pure");
        o.require(length(expand_word(p)) == length(p), "length of a pure word changed");
    }
    if (o.pass) o.detail << "500 random words and 500 pure words, n<=6";
}

void pure_braid_p(ComplexCache&, Rng&, Outcome& o) {
    const auto t0 = Clock::now();
    const QBWord p = pure_quasibraid_p();
    const bool pure = phi(p).is_identity();
    const int l = length(p);
    const double s = since(t0);
    o.require(p.n == 4 && pure, "phi(p) is not the identity of S_4");
    o.require(l == 1, "length of p");
    o.require(s < 1e-3, "time budget");
    if (o.pass) o.detail << "p=" << p.str() << " phi=id length=1";
}

void certificate_suite(ComplexCache&, Rng&, Outcome& o) {
    const auto all = proof_certificates();
    std::map<std::string, int> families;
    for (const auto& c : all) {
        o.require(validate_certificate(c), "certificate " + c.name);
        o.require(phi(c.from) == phi(c.to) && length(c.from) == length(c.to), "invariants across " + c.name);
        families[c.name.substr(0, c.name.find(' '))]++;
    }
    o.require(!all.empty(), "no certificates");
    if (o.pass) {
        o.detail << all.size() << " certificates:";
        for (const auto& [k, v] : families) o.detail << ' ' << k << '=' << v;
    }
}

void group_axioms(ComplexCache&, Rng& rng, Outcome& o) {
    const auto idv = TreePairSymbol::identity();
    for (int t = 0; t < 100; ++t) {
        const auto a = random_v(rng, 8), b = random_v(rng, 8), c = random_v(rng, 8);
        o.require(equal_v(compose_v(compose_v(a, b), c), compose_v(a, compose_v(b, c))), "V associativity");
        o.require(equal_v(compose_v(a, idv), a) && equal_v(compose_v(idv, a), a), "V identity");
        o.require(equal_v(compose_v(a, inverse_v(a)), idv) && equal_v(compose_v(inverse_v(a), a), idv), "V inverse");
    }
    const auto idn = SpheromorphismSymbol::identity();
    for (int t = 0; t < 100; ++t) {
        const auto a = random_n(rng, 5, 4), b = random_n(rng, 5, 4), c = random_n(rng, 5, 4);
        o.require(equal_n(compose_n(compose_n(a, b), c), compose_n(a, compose_n(b, c))), "N associativity");
        o.require(equal_n(compose_n(a, idn), a) && equal_n(compose_n(idn, a), a), "N identity");
        o.require(equal_n(compose_n(a, inverse_n(a)), idn) && equal_n(compose_n(inverse_n(a), a), idn), "N inverse");
    }
    if (o.pass) o.detail << "100 triples in V, 100 triples in N with automata of at most 4 states";
}

SpheromorphismSymbol sample_element(Rng& rng, int roots, bool automata) {
    if (automata) return random_n(rng, roots == 3 ? 4 : 5, 3, roots);
    return to_spheromorphism(random_v(rng, roots == 3 ? 5 : 8, roots));
}

void action_law(ComplexCache&, Rng& rng, Outcome& o) {
    const auto t0 = Clock::now();
    for (int roots : {1, 3}) {
        const auto v = roots == 1 ? TowerVariant::Tilde : TowerVariant::BarCyclic;
        int checked = 0;
        for (int t = 0; t < 1000 && checked < 100; ++t) {
            const bool autos = t % 2 == 1;
            const auto g = sample_element(rng, roots, autos), h = sample_element(rng, roots, autos);
            const auto c = random_tower_cell(rng, v, roots == 1 ? 1 + t % 3 : t % 2);
            try {
                const auto ref = act(g, c);
                o.require(same_cell(act(compose_n(g, h), c), act(g, act(h, c))), "left action law");
                o.require(same_cell(act(g, stabilize_once(c)), ref), "action and stabilization");
                // Representative change.
                TowerCell raw = c;
                if (roots == 1) {
                    const auto reps = class_representatives(c.rooted.collection, c.rooted.perm);
                    const auto& [coll, perm] = reps[rng() % reps.size()];
                    raw.rooted = StratumClass{coll, perm};
                } else {
                    const auto orbit = unrooted_orbit(c.unrooted);
                    raw.unrooted = orbit[rng() % orbit.size()];
                }
                o.require(same_cell(act(g, raw), ref), "representative change");
                ++checked;
            } catch (const ComputationError&) {
                // Image beyond the largest supported stage; draw again.
            }
        }
        o.require(checked >= 100, "fewer than 100 usable pairs");
        if (o.pass) o.detail << (roots == 1 ? "tilde " : "cyclic ") << checked << " pairs; ";
    }
    const double s = since(t0);
    o.require(s < 60, "time budget");
}

CyclicSymbol sample_t(Rng& rng) {
    auto v = random_v(rng, 5, 3);
    const int L = v.perm.size();
    const int k = static_cast<int>(rng() % static_cast<unsigned>(L));
    std::vector<int> img(static_cast<std::size_t>(L));
    for (int i = 1; i <= L; ++i) img[static_cast<std::size_t>(i - 1)] = (i - 1 + k) % L + 1;
    v.perm = Perm(img);
    return to_spheromorphism(v);
}

void k_infinity(ComplexCache&, Rng& rng, Outcome& o) {
    std::vector<TowerCell> cells{cyclic_base_point()};
    for (int t = 0; t < 30; ++t) cells.push_back(random_k_infinity_cell(rng, t % 3));
    int elements = 0, images = 0;
    for (int t = 0; t < 20; ++t) {
        const auto g = sample_t(rng);
        o.require(membership(g) == Membership::T || membership(g) == Membership::F, "sampled element is not in T");
        std::vector<TowerCell> ok;
        for (const auto& c : cells) {
            try {
                act(g, c);
                ok.push_back(c);
            } catch (const ComputationError&) {
            }
        }
        o.require(check_t_stabilizes(g, ok), "an element of T leaves the associahedron");
        images += static_cast<int>(ok.size());
        ++elements;
    }
    o.require(check_inv(cells), "Inv leaves the associahedron");
    const CyclicSymbol swap01{BinaryTree::trivial(3), BinaryTree::trivial(3), Perm({2, 1, 3}),
                              std::vector<Automaton>(3, Automaton::identity())};
    const auto top = top_cell(TowerVariant::BarCyclic, 1);
    o.require(in_k_infinity(top), "top cell not in the associahedron");
    o.require(!in_k_infinity(act(swap01, top)), "the branch transposition preserves the associahedron");
    if (o.pass)
        o.detail << elements << " elements of T on " << images << " cell images, Inv on " << cells.size()
                 << " cells; (12) on branches leaves K_inf";
}

void cocycle(ComplexCache&, Rng& rng, Outcome& o) {
    for (int t = 0; t < 100; ++t) {
        const auto f = random_n(rng, 4, 3), g = random_n(rng, 4, 3), h = random_n(rng, 4, 3);
        const auto lhs = euler_cocycle(f, g) + euler_cocycle(compose_n(f, g), h);
        const auto rhs = euler_cocycle(f, compose_n(g, h)) + euler_cocycle(g, h);
        o.require(lhs == rhs, "cocycle identity");
    }
    for (int t = 0; t < 20; ++t) {
        const auto f = random_n(rng, 4, 3), g = random_n(rng, 4, 3);
        const auto cf = canonical_lift(f), cg = canonical_lift(g);
        const auto f2 = lift_with_word(cf.base, random_section(rng, cf.base.leaf_map));
        const auto g2 = lift_with_word(cg.base, random_section(rng, cg.base.leaf_map));
        o.require(euler_cocycle_lifted(f2, g2) == euler_cocycle(f, g), "lift dependence");
    }
    if (o.pass) o.detail << "100 triples satisfy the cocycle identity; 20 resampled sections agree";
}

void pairing(ComplexCache&, Rng& rng, Outcome& o) {
    const auto t0 = Clock::now();
    const auto r = resolve_euler_relation();
    const auto prod = compose_n(commutator_n(r.tau1, r.sigma), commutator_n(r.alpha, r.delta));
    o.require(equal_n(prod, SpheromorphismSymbol::identity()), "relation does not hold in N");
    const int v = pair_with_cycle({{r.tau1, r.sigma}, {r.alpha, r.delta}});
    o.require(v == 1, "pairing value " + std::to_string(v));
    for (int t = 0; t < 10; ++t) {
        auto relift = [&](const SpheromorphismSymbol& g) {
            const auto c = canonical_lift(g);
            return lift_with_word(c.base, random_section(rng, c.base.leaf_map));
        };
        o.require(pair_with_cycle_lifted({{relift(r.tau1), relift(r.sigma)}, {relift(r.alpha), relift(r.delta)}}) == 1,
                  "pairing changed under re-lifting");
    }
    const double s = since(t0);
    o.require(s < 10, "time budget");
    if (o.pass) o.detail << "spine offset d=" << r.spine_start << ", relation holds, pairing 1, stable under 10 re-liftings";
}

void last_leaf_expansion(ComplexCache&, Rng&, Outcome& o) {
    for (int n = 2; n <= 6; ++n) {
        const QBWord img = q_last_leaf_expand(q_hat(n));
        const QBWord shape = QBWord(n + 1, alpha_hat(n).factors) * QBWord(n + 1, {{1, n}});
        o.require(phi(img).is_identity(), "image is not pure for n=" + std::to_string(n));
        o.require(img == shape, "image shape for n=" + std::to_string(n));
    }
    if (o.pass) o.detail << "pure with shape hat(alpha) alpha_(1..n) for n=2..6";
}

using Check = void (*)(ComplexCache&, Rng&, Outcome&);

struct Entry {
    const char* name;
    Check fn;
};

const std::vector<Entry>& entries() {
    static const std::vector<Entry> e{
        {"tiling counts", tiling_counts},
        {"f-vectors and Euler characteristics", f_vectors},
        {"rooted and unrooted bar models agree", model_cross_check},
        {"boundary squared zero and free antipode", boundary_and_antipode},
        {"F2 Betti numbers", betti_numbers},
        {"length is well defined on J_n", length_well_defined},
        {"expansion compatibility", expansion_compatibility},
        {"pure quasi-braid p", pure_braid_p},
        {"certificate suite", certificate_suite},
        {"group axioms for V and N", group_axioms},
        {"tower action law", action_law},
        {"stabilizer of K_inf", k_infinity},
        {"Euler cocycle", cocycle},
        {"pairing with the relation cycle", pairing},
        {"last-leaf expansion of hat(alpha)", last_leaf_expansion},
    };
    return e;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(std::uint64_t seed, int jobs) {
    ComplexCache cache;
    const auto& es = entries();
    auto run_one = [&](std::size_t i) {
        CriterionResult r;
        r.id = static_cast<int>(i) + 1;
        r.name = es[i].name;
        Rng rng(seed + 7919 * i);
        Outcome o;
        const auto t0 = Clock::now();
        try {
            es[i].fn(cache, rng, o);
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        r.seconds = since(t0);
        r.pass = o.pass;
        r.detail = o.detail.str();
        return r;
    };
    std::vector<CriterionResult> out(es.size());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < es.size(); ++i) out[i] = run_one(i);
        return out;
    }
    std::size_t next = 0;
    std::mutex mu;
    std::vector<std::future<void>> workers;
    for (int w = 0; w < jobs; ++w)
        workers.push_back(std::async(std::launch::async, [&] {
            while (true) {
                std::size_t i;
                {
                    std::lock_guard<std::mutex> lock(mu);
                    if (next >= es.size()) return;
                    i = next++;
                }
                out[i] = run_one(i);
            }
        }));
    for (auto& w : workers) w.get();
    return out;
}

std::string format_result(const CriterionResult& r) {
    std::ostringstream os;
    os << (r.pass ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << " -- " << r.detail;
    return os.str();
}

}  // namespace moduli
