#include "subtrop/oracle.hpp"

#include "subtrop/error.hpp"

namespace subtrop::oracle {

namespace {

// Inequality sum_l coef[l] * n_l + constant >= 0.
struct Ineq {
    std::vector<BigRational> coef;
    BigRational constant;
};

bool holds(const std::vector<Exponent>& row, const std::vector<std::int64_t>& point) {
    BigInt acc = 0;
    for (std::size_t l = 0; l < row.size(); ++l) acc += BigInt(static_cast<long>(row[l])) * BigInt(static_cast<long>(point[l]));
    return acc >= 1;
}

} // namespace

bool fm_feasible(std::size_t dim, const std::vector<std::vector<Exponent>>& rows) {
    std::vector<Ineq> system;
    for (const auto& row : rows) {
        Ineq q;
        for (std::size_t l = 0; l < dim; ++l) q.coef.emplace_back(static_cast<long>(row[l]));
        q.constant = BigRational(-1);
        system.push_back(std::move(q));
    }

    // Eliminate n_0, n_1, ... in turn. Each row is first divided by |coef| of
    // the eliminated variable.
    for (std::size_t var = 0; var < dim; ++var) {
        std::vector<Ineq> pos, neg, rest;
        for (auto& q : system) {
            const int s = q.coef[var].sign();
            if (s == 0) {
                rest.push_back(std::move(q));
                continue;
            }
            const BigRational scale = q.coef[var].abs();
            for (auto& c : q.coef) c /= scale;
            q.constant /= scale;
            (s > 0 ? pos : neg).push_back(std::move(q));
        }
        for (const auto& p : pos) {
            for (const auto& m : neg) {
                Ineq sum;
                sum.coef.resize(dim);
                for (std::size_t l = 0; l < dim; ++l) sum.coef[l] = p.coef[l] + m.coef[l];
                sum.constant = p.constant + m.constant;
                rest.push_back(std::move(sum));
            }
        }
        system = std::move(rest);
    }
    for (const auto& q : system)
        if (q.constant.sign() < 0) return false;
    return true;
}

Verdict exhaustive_decide(const LinearCondition& cond) {
    std::uint64_t total = 1;
    for (const auto& clause : cond.clauses) {
        if (clause.literals.empty()) return Verdict::Unsat;
        total *= clause.literals.size();
        if (total > kMaxSelections)
            throw Error(ErrorCode::TooManySelections, "more than " + std::to_string(kMaxSelections) + " literal selections");
    }

    const std::size_t m = cond.clauses.size();
    std::vector<std::size_t> pick(m, 0);
    for (;;) {
        std::vector<std::vector<Exponent>> rows;
        rows.reserve(m);
        for (std::size_t c = 0; c < m; ++c) rows.push_back(cond.clauses[c].literals[pick[c]].coeffs);
        if (fm_feasible(cond.dim, rows)) return Verdict::Sat;

        std::size_t c = m;
        while (c > 0) {
            --c;
            if (++pick[c] < cond.clauses[c].literals.size()) break;
            pick[c] = 0;
            if (c == 0) return Verdict::Unsat;
        }
    }
}

std::optional<ExponentSolution> grid_search(const LinearCondition& cond, GridSpec grid) {
    if (grid.radius < 1) throw Error(ErrorCode::BoxTooLarge, "grid radius must be at least 1");
    const auto side = static_cast<std::uint64_t>(2 * grid.radius + 1);
    std::uint64_t points = 1;
    for (std::size_t l = 0; l < cond.dim; ++l) {
        if (points > kMaxGridPoints / side)
            throw Error(ErrorCode::BoxTooLarge, "search box has more than " + std::to_string(kMaxGridPoints) + " points");
        points *= side;
    }

    std::vector<std::int64_t> point(cond.dim, -grid.radius);
    for (;;) {
        bool all = true;
        for (const auto& clause : cond.clauses) {
            bool any = false;
            for (const auto& lit : clause.literals) {
                if (holds(lit.coeffs, point)) {
                    any = true;
                    break;
                }
            }
            if (!any) {
                all = false;
                break;
            }
        }
        if (all) {
            ExponentSolution out;
            for (auto x : point) out.n.emplace_back(static_cast<long>(x));
            return out;
        }

        std::size_t l = cond.dim;
        for (;;) {
            if (l == 0) return std::nullopt;
            --l;
            if (point[l] < grid.radius) {
                ++point[l];
                break;
            }
            point[l] = -grid.radius;
        }
    }
}

} // namespace subtrop::oracle
