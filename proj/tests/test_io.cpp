#include <string>

#include "doctest.h"
#include "moduli/io.hpp"

using namespace moduli;
using io::Json;

namespace {

const std::string kData = MODULI_TEST_DATA;

Json reparse(const Json& j) { return io::parse(j.dump()); }

}  // namespace

TEST_CASE("round trips of combinatorial objects") {
    Rng rng(5);
    for (int n = 3; n <= 6; ++n)
        for (const auto& c : all_nested_collections(n)) {
            const PlanarTree t = nested_to_tree(c);
            CHECK(io::planar_tree_from_json(reparse(io::to_json(t))) == t);
            CHECK(io::collection_from_json(reparse(io::to_json(c)), n) == c);
            const LabeledTree lt{t, random_perm(rng, n)};
            CHECK(io::labeled_tree_from_json(reparse(io::to_json(lt))) == lt);
        }
    for (int t = 0; t < 50; ++t) {
        const auto b1 = random_tree(rng, 1 + static_cast<int>(rng() % 9));
        const auto b3 = random_tree(rng, 3 + static_cast<int>(rng() % 7), 3);
        CHECK(io::binary_tree_from_json(reparse(io::to_json(b1))) == b1);
        CHECK(io::binary_tree_from_json(reparse(io::to_json(b3))) == b3);
        const auto a = random_automaton(rng, 4);
        CHECK(automaton_equal(io::automaton_from_json(reparse(io::to_json(a))), a));
    }
    CHECK_THROWS_AS(io::perm_from_json(io::parse("[1, 1, 2]")), InputError);
    CHECK_THROWS_AS(io::planar_tree_from_json(io::parse("[[1, 3], 2]")), InputError);
    CHECK_THROWS_AS(io::collection_from_json(io::parse("[[1, 3], [2, 4]]"), 5), InputError);
    CHECK_THROWS_AS(io::binary_tree_from_json(io::parse("[1, [2, 3, 4]]")), InputError);
}

TEST_CASE("round trips of group elements and words") {
    Rng rng(6);
    for (int t = 0; t < 60; ++t) {
        const auto v = random_v(rng, 7, t % 2 ? 3 : 1);
        CHECK(equal_v(to_tree_pair(io::symbol_from_json(reparse(io::to_json(v)))).value(), v));
        const auto g = random_n(rng, 5, 3, t % 2 ? 3 : 1);
        CHECK(equal_n(io::symbol_from_json(reparse(io::to_json(g))), g));
        const auto w = random_word(rng, 2 + t % 5, t % 7);
        CHECK(io::word_from_json(reparse(io::to_json(w))) == w);
        const auto l = lift_with_word(g, random_section(rng, g.leaf_map));
        const auto back = io::lifted_from_json(reparse(io::to_json(l)));
        CHECK(equal_n(back.base, l.base));
        CHECK(back.word == l.word);
    }
    for (const auto& c : proof_certificates()) {
        const auto back = io::certificate_from_json(reparse(io::to_json(c)));
        CHECK(back.from == c.from);
        CHECK(back.to == c.to);
        CHECK(validate_certificate(back));
    }
    const RClassBit r({1, 0}, {0, 1, 1});
    CHECK(io::rclass_from_json(reparse(io::to_json(r))) == r);
    CHECK_THROWS_AS(io::symbol_from_json(io::parse(R"({"kind": "word", "n": 2, "factors": []})")), InputError);
    CHECK_THROWS_AS(io::word_from_json(io::parse(R"({"schema_version": 9, "kind": "word", "n": 2, "factors": []})")),
                    InputError);
    CHECK_THROWS_AS(io::word_from_json(io::parse(R"({"n": 3, "factors": [[2, 5]]})")), InputError);
}

TEST_CASE("round trips of tower cells") {
    Rng rng(8);
    for (int t = 0; t < 40; ++t) {
        const auto v = t % 2 ? TowerVariant::Tilde : TowerVariant::BarCyclic;
        const auto c = random_tower_cell(rng, v, v == TowerVariant::Tilde ? 1 + t % 3 : t % 3);
        CHECK(same_cell(io::cell_from_json(reparse(io::to_json(c))), c));
    }
    CHECK_THROWS_AS(io::unrooted_from_json(io::parse(R"({"leaves": 5, "splits": [[1, 3]], "labels": [0, 1, 2, 3, 4]})")),
                    InputError);
}

TEST_CASE("fixture files") {
    CHECK(length(io::word_from_json(io::read_file(kData + "/p.json"))) == 1);
    CHECK(membership(io::symbol_from_json(io::read_file(kData + "/rotation.json"))) == Membership::T);
    CHECK(membership(io::symbol_from_json(io::read_file(kData + "/branch-swap.json"))) == Membership::V);
    CHECK(membership(io::symbol_from_json(io::read_file(kData + "/caret-shift.json"))) == Membership::F);
    CHECK(in_k_infinity(io::cell_from_json(io::read_file(kData + "/base-cell.json"))));
    CHECK(io::cell_from_json(io::read_file(kData + "/tilde-cell.json")).dim() == 1);
    CHECK(validate_certificate(io::certificate_from_json(io::read_file(kData + "/p-commutator-cert.json"))));
    const auto rel = io::relation_from_json(io::read_file(kData + "/omega-relation.json"));
    CHECK(rel.lifted);
    CHECK(pair_with_cycle_lifted(rel.pairs) == 1);
    CHECK_THROWS_AS(io::read_file(kData + "/missing.json"), InputError);
}
