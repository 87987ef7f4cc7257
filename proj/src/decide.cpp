#include "subtrop/decide.hpp"

namespace subtrop {

Decision decide(const SignedSystem& sys, DecideOptions options) {
    Decision out;
    out.condition = build_cnf(sys);
    out.model = solve_cnf(out.condition);
    out.condition_satisfiable = out.model.has_value();
    if (out.model) {
        ExponentSolution n = scale_to_integer(*out.model);
        if (options.shrink) n = shrink_solution(out.condition, std::move(n));
        out.n = std::move(n);
    }
    if (const auto zero = sys.zero_rows(); !zero.empty()) out.zero_row = zero.front();
    out.status = out.condition_satisfiable && !out.zero_row ? Status::Sat : Status::Unsat;
    return out;
}

} // namespace subtrop
