#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace moduli {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

inline constexpr std::uint64_t kDefaultSeed = 20240601;

// Runs the fifteen acceptance checks; with jobs > 1 they run concurrently,
// results are always returned in criterion order.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed = kDefaultSeed, int jobs = 1);
std::string format_result(const CriterionResult& r);

}  // namespace moduli
