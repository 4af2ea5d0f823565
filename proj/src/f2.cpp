#include "moduli/f2.hpp"

#include <algorithm>
#include <unordered_map>

namespace moduli {

namespace {

void add_into(F2Column& a, const F2Column& b) {
    F2Column out;
    out.reserve(a.size() + b.size());
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    a.swap(out);
}

}  // namespace

ChainComplexF2 chain_complex(const CellComplexModel& m) {
    ChainComplexF2 cc;
    const int top = m.top_dim();
    if (m.cell_count() == 0) return cc;
    cc.ranks.assign(static_cast<std::size_t>(top + 1), 0);
    cc.boundary.assign(static_cast<std::size_t>(top + 1), {});
    std::vector<int> local(m.cell_count());
    for (std::size_t i = 0; i < m.cell_count(); ++i)
        local[i] = cc.ranks[static_cast<std::size_t>(m.dims[i])]++;
    for (std::size_t i = 0; i < m.cell_count(); ++i) {
        const int d = m.dims[i];
        if (d == 0) continue;
        F2Column col;
        for (const auto& [f, mult] : m.faces[i]) {
            if (m.dims[static_cast<std::size_t>(f)] != d - 1) throw ComputationError("face of wrong dimension");
            if (mult != 1) cc.irregular.push_back({static_cast<int>(i), f, mult});
            if (mult % 2 == 1) col.push_back(local[static_cast<std::size_t>(f)]);
        }
        std::sort(col.begin(), col.end());
        cc.boundary[static_cast<std::size_t>(d)].push_back(std::move(col));
    }
    return cc;
}

bool boundary_squared_zero(const ChainComplexF2& cc) {
    for (std::size_t d = 2; d < cc.boundary.size(); ++d)
        for (const auto& col : cc.boundary[d]) {
            F2Column acc;
            for (int f : col) add_into(acc, cc.boundary[d - 1][static_cast<std::size_t>(f)]);
            if (!acc.empty()) return false;
        }
    return true;
}

int rank_f2(std::vector<F2Column> columns) {
    // Column reduction keyed by the largest row index.
    std::unordered_map<int, std::size_t> pivot_of;
    int rank = 0;
    for (std::size_t j = 0; j < columns.size(); ++j) {
        auto& col = columns[j];
        while (!col.empty()) {
            auto it = pivot_of.find(col.back());
            if (it == pivot_of.end()) break;
            add_into(col, columns[it->second]);
        }
        if (!col.empty()) {
            pivot_of.emplace(col.back(), j);
            ++rank;
        }
    }
    return rank;
}

std::vector<int> homology_f2(const ChainComplexF2& cc) {
    const std::size_t dims = cc.ranks.size();
    std::vector<int> rk(dims + 1, 0);
    for (std::size_t d = 1; d < dims; ++d) rk[d] = rank_f2(cc.boundary[d]);
    std::vector<int> betti(dims);
    for (std::size_t d = 0; d < dims; ++d) betti[d] = cc.ranks[d] - rk[d] - rk[d + 1];
    return betti;
}

}  // namespace moduli
