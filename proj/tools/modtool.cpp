// Batch front end: every subcommand reads JSON files, computes, and writes a
// single JSON report. Exit status 0 on success, 1 on a computation error,
// 2 on malformed input or command line.

#include <openssl/evp.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "moduli/acceptance.hpp"
#include "moduli/io.hpp"

using namespace moduli;
using io::Json;

namespace {

struct Context {
    std::vector<std::string> argv;
    std::string out;
    std::uint64_t seed = kDefaultSeed;
    int jobs = 1;
    bool timings = false;
    Json inputs = Json::object();
};

std::string sha256_hex(const std::string& bytes) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
        throw ComputationError("SHA-256 digest failed");
    std::ostringstream os;
    for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
    return os.str();
}

Json load(Context& ctx, const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string text = ss.str();
    ctx.inputs[path] = sha256_hex(text);
    return io::parse(text);
}

void emit(const Context& ctx, const Json& result, double seconds) {
    Json r = io::document("report");
    r["command"] = ctx.argv;
    r["inputs"] = ctx.inputs;
    r["result"] = result;
    if (ctx.timings) r["seconds"] = seconds;
    const std::string text = r.dump(2) + "\n";
    if (ctx.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(ctx.out, std::ios::binary);
        if (!f) throw InputError("cannot write " + ctx.out);
        f << text;
    }
}

SpheromorphismSymbol load_symbol(Context& ctx, const std::string& path) {
    return io::symbol_from_json(load(ctx, path));
}

Json symbol_result(const SpheromorphismSymbol& s) {
    if (auto v = to_tree_pair(s)) return io::to_json(reduce_symbol(*v));
    return io::to_json(reduce_spheromorphism(s));
}

Json cmd_moduli(int n, const std::string& variant, const std::string& what) {
    if (n < 3 || n > kDefaultMaxLeaves) throw InputError("--n must lie in 3.." + std::to_string(kDefaultMaxLeaves));
    CellComplexModel m;
    if (variant == "tilde") m = build_tilde_complex(n);
    else if (variant == "bar") m = build_bar_complex(n);
    else if (variant == "bar-unrooted") m = build_bar_complex_unrooted(n);
    else throw InputError("unknown variant " + variant);
    Json r{{"n", n}, {"variant", variant}};
    if (what == "fvector") r["fvector"] = m.f_vector();
    else if (what == "chi") r["chi"] = m.euler_characteristic();
    else if (what == "betti") r["betti"] = homology_f2(chain_complex(m));
    else if (what == "complex") r["complex"] = io::to_json(m);
    else throw InputError("unknown --emit " + what);
    return r;
}

Json cmd_group(Context& ctx, const std::string& op, const std::vector<std::string>& files) {
    auto need = [&](std::size_t k) {
        if (files.size() != k) throw InputError("group " + op + " takes " + std::to_string(k) + " symbol file(s)");
    };
    if (op == "compose") {
        if (files.empty()) throw InputError("group compose takes at least one symbol file");
        // The product f1 f2 ... fk, with fk applied first.
        SpheromorphismSymbol acc = load_symbol(ctx, files[0]);
        for (std::size_t i = 1; i < files.size(); ++i) acc = compose_n(acc, load_symbol(ctx, files[i]));
        return Json{{"symbol", symbol_result(acc)}, {"class", to_string(membership(acc))}};
    }
    if (op == "inverse") {
        need(1);
        const auto s = load_symbol(ctx, files[0]);
        return Json{{"symbol", symbol_result(inverse_n(s))}};
    }
    if (op == "reduce") {
        need(1);
        return Json{{"symbol", symbol_result(load_symbol(ctx, files[0]))}};
    }
    if (op == "classify") {
        need(1);
        return Json{{"class", to_string(membership(load_symbol(ctx, files[0])))}};
    }
    if (op == "equal") {
        need(2);
        return Json{{"equal", equal_n(load_symbol(ctx, files[0]), load_symbol(ctx, files[1]))}};
    }
    throw InputError("unknown group operation " + op);
}

Json word_stats(const QBWord& w) {
    return Json{{"word", io::to_json(w)}, {"phi", io::to_json(phi(w))}, {"length", length(w)}, {"pure", is_pure(w)}};
}

Json cmd_qb(Context& ctx, const std::string& op, const std::vector<std::string>& files, int leaf, int n, int radius,
            int depth) {
    auto word = [&](std::size_t i) {
        if (i >= files.size()) throw InputError("qb " + op + " needs a word file");
        return io::word_from_json(load(ctx, files[i]));
    };
    if (op == "phi") return Json{{"phi", io::to_json(phi(word(0)))}};
    if (op == "len") return Json{{"length", length(word(0))}};
    if (op == "expand") return word_stats(leaf > 0 ? simple_expand_word(word(0), leaf) : expand_word(word(0)));
    if (op == "check-cert") {
        if (files.size() != 1) throw InputError("qb check-cert takes one certificate file");
        const auto c = io::certificate_from_json(load(ctx, files[0]));
        const bool ok = validate_certificate(c);
        Json r{{"name", c.name}, {"valid", ok}, {"steps", c.steps.size()}};
        if (ok) r["length"] = length(c.from), r["phi"] = io::to_json(phi(c.from));
        return r;
    }
    if (op == "ball") {
        if (n < 1 || radius < 0) throw InputError("qb ball needs --n >= 1 and --radius >= 0");
        const auto b = ball(n, radius);
        Json words = Json::array();
        int odd = 0, pure = 0;
        for (const auto& w : b) {
            odd += length(w);
            pure += is_pure(w);
            words.push_back(w.str());
        }
        return Json{{"n", n}, {"radius", radius}, {"size", b.size()}, {"odd_length", odd}, {"pure", pure}, {"words", words}};
    }
    if (op == "equal") {
        const auto r = bounded_equal(word(0), word(1), depth);
        Json out{{"verdict", to_string(r.verdict)}, {"reason", r.reason}};
        if (r.verdict == Verdict::Equal) {
            Json steps = Json::array();
            for (const auto& s : r.certificate) steps.push_back(io::to_json(s));
            out["certificate"] = steps;
        }
        return out;
    }
    throw InputError("unknown qb operation " + op);
}

Json cmd_tower(Context& ctx, const std::string& op, const std::string& group, const std::string& cell, int level) {
    if (cell.empty()) throw InputError("tower " + op + " needs --cell");
    const TowerCell c = io::cell_from_json(load(ctx, cell));
    if (op == "act") {
        if (group.empty()) throw InputError("tower act needs --group");
        const auto g = load_symbol(ctx, group);
        const auto img = act(g, c);
        Json r{{"cell", io::to_json(img)}};
        if (c.variant == TowerVariant::BarCyclic) r["in_k_infinity"] = Json{{"before", in_k_infinity(c)}, {"after", in_k_infinity(img)}};
        return r;
    }
    if (op == "kinf") {
        if (c.variant != TowerVariant::BarCyclic) throw InputError("K_inf membership is defined on the cyclic tower");
        return Json{{"in_k_infinity", in_k_infinity(c)}};
    }
    if (op == "stabilize") {
        const int to = level < 0 ? c.level + 1 : level;
        if (to < c.level) throw InputError("--level is below the cell's level");
        return Json{{"cell", io::to_json(stabilize_to(c, to))}};
    }
    throw InputError("unknown tower operation " + op);
}

Json euler_relation_document() {
    const auto r = resolve_euler_relation();
    // tau1 and sigma lifted by explicit words on the four grandchildren of the left child.
    const LiftedNSymbol t1{r.tau1, QBWord(5, {{1, 3}})}, sg{r.sigma, QBWord(5, {{1, 2}, {3, 4}})};
    const auto la = lift_with_word(r.alpha, QBWord(1, {})), ld = lift_with_word(r.delta, QBWord(3, {}));
    Json j = io::relation_to_json({{t1, sg}, {la, ld}});
    j["spine_start"] = r.spine_start;
    return j;
}

Json cmd_euler(Context& ctx, const std::string& op, const std::string& f, const std::string& g,
               const std::string& relation) {
    if (op == "cocycle") {
        if (f.empty() || g.empty()) throw InputError("euler cocycle needs -f and -g");
        const Json jf = load(ctx, f), jg = load(ctx, g);
        const auto lf = io::lifted_from_json(jf), lg = io::lifted_from_json(jg);
        const auto c = euler_cocycle_lifted(lf, lg);
        Json r{{"cocycle", io::to_json(c)}, {"string", c.str()}};
        if (const int v = c.constant_value(); v >= 0) r["value"] = v;
        return r;
    }
    if (op == "pair") {
        if (relation.empty()) throw InputError("euler pair needs --relation");
        const auto doc = io::relation_from_json(load(ctx, relation));
        int v;
        if (doc.lifted) {
            v = pair_with_cycle_lifted(doc.pairs);
        } else {
            std::vector<std::pair<SpheromorphismSymbol, SpheromorphismSymbol>> base;
            for (const auto& [a, b] : doc.pairs) base.emplace_back(a.base, b.base);
            v = pair_with_cycle(base);
        }
        return Json{{"pairing", v}, {"pairs", doc.pairs.size()}, {"explicit_lifts", doc.lifted}};
    }
    if (op == "p-check") {
        const QBWord p = pure_quasibraid_p();
        return word_stats(p);
    }
    if (op == "relation") return Json{{"relation", euler_relation_document()}};
    throw InputError("unknown euler operation " + op);
}

Json cmd_verify(const Context& ctx, const std::string& suite, bool& ok) {
    if (suite != "acceptance") throw InputError("unknown suite " + suite);
    Json rows = Json::array();
    ok = true;
    for (const auto& r : run_acceptance(ctx.seed, ctx.jobs)) {
        std::cerr << format_result(r) << '\n';
        Json row{{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}};
        if (ctx.timings) row["seconds"] = r.seconds;
        rows.push_back(row);
        ok = ok && r.pass;
    }
    return Json{{"suite", suite}, {"seed", ctx.seed}, {"criteria", rows}, {"pass", ok}};
}

int report_error(int code, const std::string& kind, const std::string& message) {
    Json e = io::document("error");
    e["error"] = kind;
    e["message"] = message;
    std::cerr << e.dump() << '\n';
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    Context ctx;
    for (int i = 1; i < argc; ++i) ctx.argv.emplace_back(argv[i]);

    CLI::App app{"Moduli complexes, Thompson-Neretin groups, quasi-braids and the Euler class"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--out", ctx.out, "Write the report to this file instead of stdout");
    app.add_option("--seed", ctx.seed, "Seed for randomized suites");
    app.add_option("--jobs", ctx.jobs, "Worker threads for suites")->check(CLI::Range(1, 64));
    app.add_flag("--timings", ctx.timings, "Include wall-clock timings (breaks byte-identical output)");

    int n = 4, leaf = 0, radius = 2, depth = 3, level = -1;
    std::string variant = "bar", what = "fvector", op, group, cell, f, g, relation, suite = "acceptance";
    std::vector<std::string> files;

    auto* moduli = app.add_subcommand("moduli", "Build a moduli complex and report invariants");
    moduli->add_option("--n", n, "Number of leaves")->required();
    moduli->add_option("--variant", variant, "tilde, bar or bar-unrooted")
        ->check(CLI::IsMember({"tilde", "bar", "bar-unrooted"}));
    moduli->add_option("--emit", what, "fvector, chi, betti or complex")
        ->check(CLI::IsMember({"fvector", "chi", "betti", "complex"}));

    auto* grp = app.add_subcommand("group", "Operations on symbols of V and N");
    grp->add_option("op", op, "compose, inverse, reduce, classify or equal")
        ->required()
        ->check(CLI::IsMember({"compose", "inverse", "reduce", "classify", "equal"}));
    grp->add_option("files", files, "Symbol files");

    auto* qb = app.add_subcommand("qb", "Quasi-braid words and certificates");
    qb->add_option("op", op, "phi, len, expand, check-cert, ball or equal")
        ->required()
        ->check(CLI::IsMember({"phi", "len", "expand", "check-cert", "ball", "equal"}));
    qb->add_option("files", files, "Word or certificate files");
    qb->add_option("--leaf", leaf, "Expand only at this leaf (1-based)");
    qb->add_option("--n", n, "Strands for ball");
    qb->add_option("--radius", radius, "Radius for ball");
    qb->add_option("--depth", depth, "Rewriting rounds per word for equal");

    auto* tower = app.add_subcommand("tower", "Action on the towers");
    tower->add_option("op", op, "act, kinf or stabilize")->required()->check(CLI::IsMember({"act", "kinf", "stabilize"}));
    tower->add_option("--group", group, "Symbol file");
    tower->add_option("--cell", cell, "Cell file");
    tower->add_option("--level", level, "Target level for stabilize");

    auto* euler = app.add_subcommand("euler", "Stable length, Euler cocycle and pairing");
    euler->add_option("op", op, "cocycle, pair, p-check or relation")
        ->required()
        ->check(CLI::IsMember({"cocycle", "pair", "p-check", "relation"}));
    euler->add_option("-f", f, "First symbol");
    euler->add_option("-g", g, "Second symbol");
    euler->add_option("--relation", relation, "Relation file");

    auto* verify = app.add_subcommand("verify", "Run a test suite");
    verify->add_option("--suite", suite, "Suite name")->check(CLI::IsMember({"acceptance"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const auto t0 = std::chrono::steady_clock::now();
    try {
        Json result;
        bool ok = true;
        if (*moduli) result = cmd_moduli(n, variant, what);
        else if (*grp) result = cmd_group(ctx, op, files);
        else if (*qb) result = cmd_qb(ctx, op, files, leaf, n, radius, depth);
        else if (*tower) result = cmd_tower(ctx, op, group, cell, level);
        else if (*euler) result = cmd_euler(ctx, op, f, g, relation);
        else if (*verify) result = cmd_verify(ctx, suite, ok);
        emit(ctx, result, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
        return ok ? 0 : 1;
    } catch (const InputError& e) {
        return report_error(2, "input", e.what());
    } catch (const Json::exception& e) {
        return report_error(2, "input", e.what());
    } catch (const ComputationError& e) {
        return report_error(1, "computation", e.what());
    } catch (const std::exception& e) {
        return report_error(1, "computation", e.what());
    }
}
