#pragma once

#include "subtrop/condition.hpp"

#include <cstdint>
#include <optional>

namespace subtrop::oracle {

// Brute-force cross-checks. Shares no solving code with the lra module.

enum class Verdict { Sat, Unsat };

inline constexpr std::uint64_t kMaxSelections = 1'000'000;
inline constexpr std::uint64_t kMaxGridPoints = 10'000'000;

struct GridSpec {
    std::int64_t radius = 1; // search box [-radius, radius]^d, radius >= 1
};

// Tries every one-literal-per-clause selection with a textbook
// Fourier-Motzkin. Throws TooManySelections above kMaxSelections.
Verdict exhaustive_decide(const LinearCondition& cond);

// First satisfying integer point of the box in lexicographic order, or
// nullopt. Throws BoxTooLarge above kMaxGridPoints.
std::optional<ExponentSolution> grid_search(const LinearCondition& cond, GridSpec grid);

// Textbook Fourier-Motzkin feasibility of { row . n >= 1 }.
bool fm_feasible(std::size_t dim, const std::vector<std::vector<Exponent>>& rows);

} // namespace subtrop::oracle
