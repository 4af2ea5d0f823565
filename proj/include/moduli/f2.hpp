#pragma once

#include <vector>

#include "moduli/strata.hpp"

namespace moduli {

// Sparse column: sorted row indices with coefficient 1.
using F2Column = std::vector<int>;

struct Incidence {
    int cell = 0;
    int face = 0;
    int multiplicity = 0;
};

struct ChainComplexF2 {
    std::vector<int> ranks;  // dim C_d
    // boundary[d][j] = faces of the j-th d-cell among the (d-1)-cells; boundary[0] is empty.
    std::vector<std::vector<F2Column>> boundary;
    // Face incidences whose multiplicity is not 1. A regular CW structure has none.
    std::vector<Incidence> irregular;

    bool regular() const { return irregular.empty(); }
};

ChainComplexF2 chain_complex(const CellComplexModel& m);
bool boundary_squared_zero(const ChainComplexF2& cc);
int rank_f2(std::vector<F2Column> columns);
std::vector<int> homology_f2(const ChainComplexF2& cc);

}  // namespace moduli
