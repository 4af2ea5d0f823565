#pragma once

#include <string>
#include <vector>

#include "moduli/quasibraid.hpp"

namespace moduli {

struct Certificate {
    std::string name;
    QBWord from;
    QBWord to;
    Derivation steps;
};

// Shifts every step of d by k positions (d acting on a suffix after k letters).
Derivation offset(const Derivation& d, int k);

// Checks the derivation and that phi and length agree along every step.
bool validate_certificate(const Certificate& c);

// The listed rewriting proofs:
//  - the commutator expression of the pure quasi-braid p,
//  - images of every defining relation under the dyadic expansion (n <= 4)
//    and under one-leaf expansions (n <= 4),
//  - commutation of the two wreath embeddings for small (k, l),
//  - the closed form of iterated expansions of a generator.
std::vector<Certificate> proof_certificates();

// Relation instances of J_n as (lhs, rhs) word pairs.
std::vector<std::pair<QBWord, QBWord>> relation_instances(int n);

QBWord pure_quasibraid_p();

}  // namespace moduli
