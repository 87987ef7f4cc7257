#pragma once

#include "subtrop/condition.hpp"
#include "subtrop/lra.hpp"
#include "subtrop/system.hpp"

#include <optional>

namespace subtrop {

enum class Status { Sat, Unsat };

// Outcome of the full decision: does f > 0 admit a parametric positive solution?
struct Decision {
    Status status = Status::Unsat;
    LinearCondition condition;
    bool condition_satisfiable = false;
    // First identically zero row; such a row forces Unsat even when the condition holds.
    std::optional<std::size_t> zero_row;
    std::optional<RationalModel> model;
    std::optional<ExponentSolution> n;
};

struct DecideOptions {
    bool shrink = false;
};

Decision decide(const SignedSystem& sys, DecideOptions options = {});

} // namespace subtrop
