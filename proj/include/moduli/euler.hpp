#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "moduli/quasibraid.hpp"
#include "moduli/symbols.hpp"

namespace moduli {

// An eventually periodic F2 sequence, read as a class in the ring of
// sequences modulo the finitely supported ones. The stored form is
// normalized (shortest period, then shortest preperiod); equality and
// arithmetic only look at the tail.
struct RClassBit {
    std::vector<std::uint8_t> preperiod;
    std::vector<std::uint8_t> period{0};

    RClassBit() = default;
    RClassBit(std::vector<std::uint8_t> pre, std::vector<std::uint8_t> per);

    static RClassBit zero() { return {}; }
    static RClassBit one() { return RClassBit({}, {1}); }
    // 0 goes to the zero class, 1 to the unit.
    static RClassBit embed(int bit) { return bit ? one() : zero(); }

    std::uint8_t at(std::size_t k) const;
    // The tail value when the class is constant, -1 otherwise.
    int constant_value() const;
    std::string str() const;

    friend RClassBit operator+(const RClassBit& a, const RClassBit& b);
    friend bool operator==(const RClassBit& a, const RClassBit& b);
};

// s_k = number of depth-k nodes swapped by the automaton, mod 2.
RClassBit swap_parity_sequence(const Automaton& a);
// c_k = s_0 + ... + s_{k-1}.
RClassBit cumulative_sum(const RClassBit& s);

// A spheromorphism symbol together with a quasi-braid word on its leaves
// whose underlying permutation is the leaf map.
struct LiftedNSymbol {
    SpheromorphismSymbol base;
    QBWord word;

    void validate() const;
};

// Lifts of V-elements are the ones with trivial automata.
LiftedNSymbol lift_v(const TreePairSymbol& s, const QBWord& w);
// Fixed lift: the reduced symbol with the bubble-sort section word.
LiftedNSymbol canonical_lift(const SpheromorphismSymbol& g);
LiftedNSymbol lift_with_word(const SpheromorphismSymbol& g, const QBWord& w);

// Expansion at source leaf i; a swapping state contributes the
// transposition of the two new strands.
LiftedNSymbol lifted_expand(const LiftedNSymbol& f, int i);
LiftedNSymbol lifted_expand_to_complete(const LiftedNSymbol& f, int depth);
LiftedNSymbol lifted_compose(const LiftedNSymbol& f, const LiftedNSymbol& g);
LiftedNSymbol lifted_inverse(const LiftedNSymbol& f);
LiftedNSymbol lifted_commutator(const LiftedNSymbol& f, const LiftedNSymbol& g);

// Class of k -> length of the word at the complete source of depth k.
RClassBit stable_length_seq(const LiftedNSymbol& f);
// Length of that word computed by explicit expansion, for k >= source depth.
int level_length(const LiftedNSymbol& f, int k);

RClassBit euler_cocycle(const SpheromorphismSymbol& f, const SpheromorphismSymbol& g);
RClassBit euler_cocycle_lifted(const LiftedNSymbol& f, const LiftedNSymbol& g);

// Value of the cocycle on the 2-cycle of the relation prod [f_i, g_i] = 1.
// Throws InputError when the relation fails in N.
int pair_with_cycle(const std::vector<std::pair<SpheromorphismSymbol, SpheromorphismSymbol>>& rel);
int pair_with_cycle_lifted(const std::vector<std::pair<LiftedNSymbol, LiftedNSymbol>>& rel);

SpheromorphismSymbol commutator_n(const SpheromorphismSymbol& a, const SpheromorphismSymbol& b);

// Elements entering the distinguished relation [tau1, sigma][alpha, delta] = 1.
struct EulerRelation {
    SpheromorphismSymbol tau1, sigma, alpha, delta, tau;
    int spine_start = 0;
};
// The four cones below the left child, plus the right half: the tree on
// which tau1, sigma and tau are transpositions.
BinaryTree euler_relation_tree();
SpheromorphismSymbol spine_translation(bool forward);
SpheromorphismSymbol spine_swap_element(int start);
// Tries the admissible spine offsets, keeping the first with
// tau = [delta, alpha]; throws when none works.
EulerRelation resolve_euler_relation();

}  // namespace moduli
