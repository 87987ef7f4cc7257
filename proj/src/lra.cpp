#include "subtrop/lra.hpp"

#include "subtrop/error.hpp"

#include <map>
#include <stdexcept>

namespace subtrop {

namespace {

// a . n >= b with a primitive (gcd of entries 1) unless a == 0.
struct Row {
    std::vector<BigInt> a;
    BigRational b;
};

using RowSet = std::map<std::vector<BigInt>, BigRational>;

// Adds a row to the set, keeping only the tightest bound per direction.
// Returns false when the row is a constant contradiction 0 >= b > 0.
bool insert_row(RowSet& rows, std::vector<BigInt> a, BigRational b) {
    BigInt g = 0;
    for (const auto& x : a) g = gcd(g, x);
    if (g == 0) return b.sign() <= 0;
    if (g != 1) {
        for (auto& x : a) x /= g;
        b /= BigRational(g);
    }
    auto [it, inserted] = rows.emplace(std::move(a), b);
    if (!inserted && it->second < b) it->second = b;
    return true;
}

// Eliminates variable `var` from rows that involve only variables <= var.
std::optional<RowSet> eliminate(const RowSet& rows, std::size_t var) {
    RowSet out;
    std::vector<const RowSet::value_type*> lower;
    std::vector<const RowSet::value_type*> upper;
    for (const auto& row : rows) {
        const int s = sgn(row.first[var]);
        if (s > 0) lower.push_back(&row);
        else if (s < 0) upper.push_back(&row);
        else out.insert(row);
    }
    for (const auto* lo : lower) {
        for (const auto* up : upper) {
            const BigInt lo_scale = -up->first[var];
            const BigInt up_scale = lo->first[var];
            std::vector<BigInt> a(lo->first.size());
            for (std::size_t l = 0; l < a.size(); ++l) a[l] = lo_scale * lo->first[l] + up_scale * up->first[l];
            BigRational b = BigRational(lo_scale) * lo->second + BigRational(up_scale) * up->second;
            if (!insert_row(out, std::move(a), std::move(b))) return std::nullopt;
        }
    }
    return out;
}

} // namespace

std::optional<RationalModel> solve_conjunction(const ConjunctionSystem& sys) {
    const std::size_t d = sys.dim;

    // stages[k] holds rows over variables 0..k-1.
    std::vector<RowSet> stages(d + 1);
    for (const auto& row : sys.rows) {
        if (row.size() != d) throw Error(ErrorCode::Malformed, "conjunction row has the wrong width");
        std::vector<BigInt> a(row.begin(), row.end());
        if (!insert_row(stages[d], std::move(a), BigRational(1))) return std::nullopt;
    }
    for (std::size_t k = d; k-- > 0;) {
        auto next = eliminate(stages[k + 1], k);
        if (!next) return std::nullopt;
        stages[k] = std::move(*next);
    }

    RationalModel model;
    model.n.assign(d, BigRational(0));
    for (std::size_t k = 0; k < d; ++k) {
        std::optional<BigRational> lo;
        std::optional<BigRational> hi;
        for (const auto& [a, b] : stages[k + 1]) {
            if (a[k] == 0) continue;
            BigRational rest(0);
            for (std::size_t l = 0; l < k; ++l)
                if (a[l] != 0) rest += BigRational(a[l]) * model.n[l];
            const BigRational bound = (b - rest) / BigRational(a[k]);
            if (a[k] > 0) {
                if (!lo || *lo < bound) lo = bound;
            } else if (!hi || bound < *hi) {
                hi = bound;
            }
        }
        if (lo && hi) {
            if (*hi < *lo) throw std::logic_error("Fourier-Motzkin back-substitution produced an empty interval");
            model.n[k] = (*lo + *hi) / BigRational(2);
        } else if (lo) {
            model.n[k] = *lo + BigRational(1);
        } else if (hi) {
            model.n[k] = *hi - BigRational(1);
        }
    }

    for (const auto& row : sys.rows) {
        BigRational acc(0);
        for (std::size_t l = 0; l < d; ++l) acc += BigRational(static_cast<long>(row[l])) * model.n[l];
        if (acc < BigRational(1)) throw std::logic_error("conjunction model fails a row");
    }
    return model;
}

namespace {

class CnfSearch {
public:
    explicit CnfSearch(const LinearCondition& cond) : cond_(cond) { partial_.dim = cond.dim; }

    std::optional<RationalModel> run() {
        if (cond_.clauses.empty()) return solve_conjunction(partial_);
        return descend(0);
    }

private:
    std::optional<RationalModel> descend(std::size_t depth) {
        for (const auto& lit : cond_.clauses[depth].literals) {
            partial_.rows.push_back(lit.coeffs);
            auto model = solve_conjunction(partial_);
            if (model) {
                if (depth + 1 == cond_.clauses.size()) return model;
                if (auto found = descend(depth + 1)) return found;
            }
            partial_.rows.pop_back();
        }
        return std::nullopt;
    }

    const LinearCondition& cond_;
    ConjunctionSystem partial_;
};

} // namespace

std::optional<RationalModel> solve_cnf(const LinearCondition& cond) {
    for (const auto& clause : cond.clauses)
        if (clause.literals.empty()) return std::nullopt;
    auto model = CnfSearch(cond).run();
    if (model && !satisfies(cond, model->n)) throw std::logic_error("CNF model fails a clause");
    return model;
}

ExponentSolution scale_to_integer(const RationalModel& model) {
    BigInt delta = 1;
    for (const auto& q : model.n) delta = lcm(delta, q.denominator());
    ExponentSolution out;
    out.n.reserve(model.n.size());
    for (const auto& q : model.n) out.n.push_back(q.numerator() * (delta / q.denominator()));
    return out;
}

ExponentSolution shrink_solution(const LinearCondition& cond, ExponentSolution sol) {
    if (!satisfies(cond, sol.n)) throw Error(ErrorCode::UncertifiedExponent, "cannot shrink a non-solution");
    for (std::size_t l = 0; l < sol.n.size(); ++l) {
        const BigInt original = sol.n[l];
        const int s = sgn(original);
        if (s == 0) continue;
        // Invariant: |good| satisfies, |bad| fails or is the untried 0 end.
        BigInt good = abs(original);
        BigInt bad = -1;
        sol.n[l] = 0;
        if (satisfies(cond, sol.n)) continue;
        bad = 0;
        while (good - bad > 1) {
            const BigInt mid = (good + bad) / 2;
            sol.n[l] = s * mid;
            if (satisfies(cond, sol.n)) good = mid;
            else bad = mid;
        }
        sol.n[l] = s * good;
    }
    return sol;
}

} // namespace subtrop
