#include "moduli/io.hpp"

#include <fstream>
#include <functional>
#include <sstream>

namespace moduli::io {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object()) throw InputError(std::string("expected an object with member '") + key + "'");
    auto it = j.find(key);
    if (it == j.end()) throw InputError(std::string("missing member '") + key + "'");
    return *it;
}

int as_int(const Json& j, const char* what) {
    if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
    return j.get<int>();
}

Interval interval_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw InputError("interval must be a pair [lo, hi]");
    return {as_int(j[0], "interval bound"), as_int(j[1], "interval bound")};
}

}  // namespace

Json document(const std::string& kind) { return Json{{"schema_version", kSchemaVersion}, {"kind", kind}}; }

void expect_kind(const Json& j, const std::string& kind) {
    if (!j.is_object()) throw InputError("expected a JSON object for " + kind);
    if (auto it = j.find("schema_version"); it != j.end() && *it != kSchemaVersion)
        throw InputError("unsupported schema_version");
    if (auto it = j.find("kind"); it != j.end() && *it != kind)
        throw InputError("expected a " + kind + " document, got " + it->dump());
}

Json parse(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

Json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

Json to_json(const Perm& p) { return p.images(); }

Perm perm_from_json(const Json& j) {
    if (!j.is_array()) throw InputError("permutation must be an array of images");
    std::vector<int> img;
    for (const auto& x : j) img.push_back(as_int(x, "permutation entry"));
    try {
        return Perm(std::move(img));
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

Json to_json(const PlanarTree& t) {
    int next = 1;
    std::function<Json(const PlanarTree&)> rec = [&](const PlanarTree& v) -> Json {
        if (v.is_leaf()) return next++;
        Json a = Json::array();
        for (const auto& c : v.children) a.push_back(rec(c));
        return a;
    };
    return rec(t);
}

PlanarTree planar_tree_from_json(const Json& j) {
    int next = 1;
    std::function<PlanarTree(const Json&)> rec = [&](const Json& v) -> PlanarTree {
        if (v.is_number_integer()) {
            if (v.get<int>() != next) throw InputError("tree leaves must be numbered 1..n from left to right");
            ++next;
            return PlanarTree::leaf();
        }
        if (!v.is_array() || v.empty()) throw InputError("tree node must be a leaf number or a nonempty array");
        PlanarTree node;
        for (const auto& c : v) node.children.push_back(rec(c));
        return node;
    };
    return rec(j);
}

Json to_json(const LabeledTree& t) { return Json{{"tree", to_json(t.tree)}, {"perm", to_json(t.perm)}}; }

LabeledTree labeled_tree_from_json(const Json& j) {
    LabeledTree t{planar_tree_from_json(field(j, "tree")), perm_from_json(field(j, "perm"))};
    if (t.perm.size() != t.tree.leaf_count()) throw InputError("permutation size differs from leaf count");
    return t;
}

Json to_json(const NestedCollection& c) {
    Json a = Json::array();
    for (const auto& t : c.items) a.push_back({t.lo, t.hi});
    return a;
}

NestedCollection collection_from_json(const Json& j, int n) {
    if (!j.is_array()) throw InputError("collection must be an array of [lo, hi] pairs");
    std::vector<Interval> items;
    for (const auto& x : j) items.push_back(interval_from_json(x));
    return NestedCollection(n, std::move(items));
}

Json to_json(const BinaryTree& t) {
    int next = 1;
    std::size_t k = 0;
    // Leaves are sorted, so the subtree below a prefix is a contiguous run.
    std::function<Json(const std::string&)> rec = [&](const std::string& prefix) -> Json {
        if (k < t.leaves.size() && t.leaves[k] == prefix) {
            ++k;
            return next++;
        }
        return Json::array({rec(prefix + "0"), rec(prefix + "1")});
    };
    if (t.roots == 3) return Json::array({rec("0"), rec("1"), rec("2")});
    return rec("");
}

BinaryTree binary_tree_from_json(const Json& j) {
    BinaryTree t;
    int next = 1;
    std::function<void(const Json&, const std::string&)> rec = [&](const Json& v, const std::string& prefix) {
        if (v.is_number_integer()) {
            if (v.get<int>() != next) throw InputError("tree leaves must be numbered 1..n from left to right");
            ++next;
            t.leaves.push_back(prefix);
            return;
        }
        if (!v.is_array() || v.size() != 2) throw InputError("binary tree node must be a leaf number or a pair");
        rec(v[0], prefix + "0");
        rec(v[1], prefix + "1");
    };
    if (j.is_array() && j.size() == 3) {
        t.roots = 3;
        for (int b = 0; b < 3; ++b) rec(j[static_cast<std::size_t>(b)], std::string(1, static_cast<char>('0' + b)));
    } else {
        rec(j, "");
    }
    t.validate();
    return t;
}

Json to_json(const Automaton& a0) {
    const Automaton a = a0.canonical();
    Json states = Json::array();
    for (const auto& s : a.states) states.push_back({{"swap", s.swap}, {"left", s.left}, {"right", s.right}});
    return Json{{"states", states}, {"initial", a.initial}};
}

Automaton automaton_from_json(const Json& j) {
    Automaton a;
    const Json& st = field(j, "states");
    if (!st.is_array()) throw InputError("automaton states must be an array");
    for (const auto& s : st) {
        const Json& sw = field(s, "swap");
        if (!sw.is_boolean()) throw InputError("swap must be a boolean");
        a.states.push_back({sw.get<bool>(), as_int(field(s, "left"), "left"), as_int(field(s, "right"), "right")});
    }
    a.initial = j.contains("initial") ? as_int(j["initial"], "initial") : 0;
    a.validate();
    return a;
}

Json to_json(const SpheromorphismSymbol& s) {
    Json j = document("symbol");
    j["target"] = to_json(s.target);
    j["source"] = to_json(s.source);
    j["perm"] = to_json(s.leaf_map);
    if (!std::all_of(s.automata.begin(), s.automata.end(), [](const Automaton& a) { return a.is_identity(); })) {
        Json a = Json::array();
        for (const auto& x : s.automata) a.push_back(to_json(x));
        j["automata"] = a;
    }
    return j;
}

Json to_json(const TreePairSymbol& s) { return to_json(to_spheromorphism(s)); }

SpheromorphismSymbol symbol_from_json(const Json& j) {
    expect_kind(j, "symbol");
    SpheromorphismSymbol s;
    s.target = binary_tree_from_json(field(j, "target"));
    s.source = binary_tree_from_json(field(j, "source"));
    s.leaf_map = perm_from_json(field(j, "perm"));
    if (auto it = j.find("automata"); it != j.end()) {
        if (!it->is_array()) throw InputError("automata must be an array");
        for (const auto& a : *it) s.automata.push_back(automaton_from_json(a));
    } else {
        s.automata.assign(static_cast<std::size_t>(s.source.leaf_count()), Automaton::identity());
    }
    s.validate();
    return s;
}

LiftedNSymbol lifted_from_json(const Json& j) {
    const auto s = symbol_from_json(j);
    if (auto it = j.find("word"); it != j.end()) return lift_with_word(s, word_from_json(*it));
    return canonical_lift(s);
}

Json to_json(const LiftedNSymbol& s) {
    Json j = to_json(s.base);
    j["word"] = to_json(s.word);
    return j;
}

Json relation_to_json(const std::vector<std::pair<LiftedNSymbol, LiftedNSymbol>>& pairs) {
    Json j = document("relation");
    Json a = Json::array();
    for (const auto& [x, y] : pairs) a.push_back(Json::array({to_json(x), to_json(y)}));
    j["pairs"] = a;
    return j;
}

RelationDocument relation_from_json(const Json& j) {
    expect_kind(j, "relation");
    const Json& a = field(j, "pairs");
    if (!a.is_array()) throw InputError("pairs must be an array");
    RelationDocument out;
    for (const auto& p : a) {
        if (!p.is_array() || p.size() != 2) throw InputError("each relation entry must be a pair of symbols");
        out.lifted = out.lifted || p[0].contains("word") || p[1].contains("word");
        out.pairs.emplace_back(lifted_from_json(p[0]), lifted_from_json(p[1]));
    }
    return out;
}

Json to_json(const QBWord& w) {
    Json f = Json::array();
    for (const auto& t : w.factors) f.push_back({t.lo, t.hi});
    Json j = document("word");
    j["n"] = w.n;
    j["factors"] = f;
    return j;
}

QBWord word_from_json(const Json& j) {
    expect_kind(j, "word");
    const int n = as_int(field(j, "n"), "n");
    std::vector<Interval> f;
    const Json& a = field(j, "factors");
    if (!a.is_array()) throw InputError("factors must be an array");
    for (const auto& x : a) f.push_back(interval_from_json(x));
    return QBWord(n, std::move(f));
}

Json to_json(const DerivationStep& s) {
    Json j{{"pos", s.pos}, {"rel", to_string(s.rel)}, {"dir", s.dir}};
    if (s.rel == Relation::Square && s.dir < 0) j["support"] = {s.support.lo, s.support.hi};
    return j;
}

DerivationStep step_from_json(const Json& j) {
    DerivationStep s;
    s.pos = as_int(field(j, "pos"), "pos");
    const Json& rel = field(j, "rel");
    if (!rel.is_string()) throw InputError("rel must be a string");
    s.rel = relation_from_string(rel.get<std::string>());
    s.dir = as_int(field(j, "dir"), "dir");
    if (s.dir != 1 && s.dir != -1) throw InputError("dir must be 1 or -1");
    if (auto it = j.find("support"); it != j.end()) s.support = interval_from_json(*it);
    return s;
}

Json to_json(const Certificate& c) {
    Json j = document("certificate");
    j["name"] = c.name;
    j["from"] = to_json(c.from);
    j["to"] = to_json(c.to);
    Json steps = Json::array();
    for (const auto& s : c.steps) steps.push_back(to_json(s));
    j["steps"] = steps;
    return j;
}

Certificate certificate_from_json(const Json& j) {
    expect_kind(j, "certificate");
    Certificate c;
    c.name = j.value("name", std::string{});
    c.from = word_from_json(field(j, "from"));
    c.to = word_from_json(field(j, "to"));
    const Json& steps = field(j, "steps");
    if (!steps.is_array()) throw InputError("steps must be an array");
    for (const auto& s : steps) c.steps.push_back(step_from_json(s));
    return c;
}

Json to_json(const RClassBit& r) {
    Json pre = Json::array(), per = Json::array();
    for (auto b : r.preperiod) pre.push_back(int(b));
    for (auto b : r.period) per.push_back(int(b));
    return Json{{"preperiod", pre}, {"period", per}};
}

RClassBit rclass_from_json(const Json& j) {
    auto bits = [](const Json& a) {
        if (!a.is_array()) throw InputError("bit string must be an array");
        std::vector<std::uint8_t> out;
        for (const auto& x : a) {
            const int b = as_int(x, "bit");
            if (b != 0 && b != 1) throw InputError("bits must be 0 or 1");
            out.push_back(static_cast<std::uint8_t>(b));
        }
        return out;
    };
    return RClassBit(bits(field(j, "preperiod")), bits(field(j, "period")));
}

Json to_json(const StratumClass& c) {
    return Json{{"dim", c.dim()}, {"collection", to_json(c.collection)}, {"perm", to_json(c.perm)}};
}

Json to_json(const UnrootedLabeledTree& t) {
    Json sp = Json::array();
    for (auto s : t.splits) {
        Json side = Json::array();
        for (int p = 0; p < t.N; ++p)
            if (s >> p & 1u) side.push_back(p);
        sp.push_back(side);
    }
    return Json{{"dim", t.dim()}, {"leaves", t.N}, {"splits", sp}, {"labels", t.labels}};
}

UnrootedLabeledTree unrooted_from_json(const Json& j) {
    const int N = as_int(field(j, "leaves"), "leaves");
    if (N < 3 || N > 63) throw InputError("unrooted tree needs 3..63 leaves");
    std::vector<std::uint64_t> splits;
    const Json& sp = field(j, "splits");
    if (!sp.is_array()) throw InputError("splits must be an array of position lists");
    for (const auto& side : sp) {
        if (!side.is_array()) throw InputError("split must be a list of positions");
        std::uint64_t m = 0;
        for (const auto& p : side) {
            const int x = as_int(p, "position");
            if (x < 0 || x >= N) throw InputError("split position out of range");
            m |= std::uint64_t{1} << x;
        }
        splits.push_back(m);
    }
    std::vector<int> labels;
    const Json& lab = field(j, "labels");
    if (!lab.is_array()) throw InputError("labels must be an array");
    for (const auto& x : lab) labels.push_back(as_int(x, "label"));
    return UnrootedLabeledTree(N, std::move(splits), std::move(labels));
}

Json to_json(const TowerCell& c) {
    Json j = document("cell");
    j["variant"] = to_string(c.variant);
    j["level"] = c.level;
    const Json body = c.variant == TowerVariant::Tilde ? to_json(c.rooted) : to_json(c.unrooted);
    for (auto it = body.begin(); it != body.end(); ++it) j[it.key()] = it.value();
    if (c.variant == TowerVariant::BarCyclic) j["in_k_infinity"] = in_k_infinity(c);
    return j;
}

TowerCell cell_from_json(const Json& j) {
    expect_kind(j, "cell");
    const Json& v = field(j, "variant");
    if (!v.is_string()) throw InputError("variant must be a string");
    const TowerVariant variant = tower_variant_from_string(v.get<std::string>());
    const int level = as_int(field(j, "level"), "level");
    if (variant == TowerVariant::BarCyclic) return make_cyclic_cell(level, unrooted_from_json(j));
    if (level < 1 || level > kMaxTildeLevel) throw InputError("tower stage out of range");
    const int n = 1 << level;
    const Perm p = j.contains("perm") ? perm_from_json(j["perm"]) : Perm::identity(n);
    if (j.contains("tree")) {
        const PlanarTree t = planar_tree_from_json(j["tree"]);
        if (t.leaf_count() != n) throw InputError("tree size does not match the tower stage");
        return make_tilde_cell(level, tree_to_nested(t), p);
    }
    return make_tilde_cell(level, collection_from_json(field(j, "collection"), n), p);
}

Json to_json(const CellComplexModel& m) {
    Json j = document("complex");
    j["n"] = m.n;
    j["variant"] = m.variant;
    Json cells = Json::array(), inc = Json::array(), mult = Json::array();
    bool regular = true;
    for (std::size_t i = 0; i < m.cell_count(); ++i) {
        cells.push_back(m.variant == "bar-unrooted" ? to_json(m.unrooted[i]) : to_json(m.strata[i]));
        Json faces = Json::array(), count = Json::array();
        for (const auto& [f, k] : m.faces[i]) {
            faces.push_back(f);
            count.push_back(k);
            regular &= k == 1;
        }
        inc.push_back(faces);
        mult.push_back(count);
    }
    j["cells"] = cells;
    j["incidence"] = inc;
    // Multiplicities are listed only for a non-regular complex.
    if (!regular) j["multiplicities"] = mult;
    return j;
}

}  // namespace moduli::io
