#pragma once

#include <string>
#include <vector>

namespace moduli {

// Binary words are strings over {'0','1'}.
using Word = std::string;

struct AutState {
    bool swap = false;
    int left = 0;   // successor after reading '0'
    int right = 0;  // successor after reading '1'

    friend bool operator==(const AutState&, const AutState&) = default;
    friend auto operator<=>(const AutState&, const AutState&) = default;
};

// Finite-state automorphism of the rooted binary tree. State q on the word
// b.w outputs b xor swap(q), then continues with the successor for b.
struct Automaton {
    std::vector<AutState> states;
    int initial = 0;

    static Automaton identity();
    static Automaton root_swap();
    // Swaps at the nodes 0^k for every k >= start (k counts letters read).
    static Automaton spine_swap(int start);

    void validate() const;
    Word act(const Word& w) const;
    int state_after(const Word& w) const;
    // Same machine started at the state reached after reading w.
    Automaton restrict_to(const Word& w) const;
    Automaton at_state(int q) const;

    // Minimal machine with breadth-first numbering from the initial state;
    // equal automorphisms give identical canonical machines.
    Automaton canonical() const;
    bool is_identity() const;
    // Only finitely many nodes swap: the element is a finite permutation of cones.
    bool is_finitary() const;

    friend bool operator==(const Automaton&, const Automaton&) = default;
    friend auto operator<=>(const Automaton&, const Automaton&) = default;
};

// (a o b)(w) = a(b(w)).
Automaton automaton_compose(const Automaton& a, const Automaton& b);
Automaton automaton_inverse(const Automaton& a);
// Pair-state exploration; no minimization involved.
bool automaton_equal(const Automaton& a, const Automaton& b);

// Automaton whose root has the given swap bit and whose two subtrees act by l and r.
Automaton automaton_join(bool swap, const Automaton& l, const Automaton& r);

}  // namespace moduli
