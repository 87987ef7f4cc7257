#include "subtrop/condition.hpp"

#include "subtrop/error.hpp"

#include <sstream>

namespace subtrop {

LinearLiteral make_literal(const SignedSystem& sys, std::size_t row, std::size_t pos, std::size_t neg) {
    LinearLiteral lit;
    lit.row = row;
    lit.pos = pos;
    lit.neg = neg;
    const auto ej = sys.monomial(pos);
    const auto ek = sys.monomial(neg);
    lit.coeffs.resize(sys.num_vars());
    for (std::size_t l = 0; l < sys.num_vars(); ++l) lit.coeffs[l] = ej[l] - ek[l];
    return lit;
}

LinearCondition build_cnf(const SignedSystem& sys) {
    LinearCondition cond;
    cond.dim = sys.num_vars();
    for (std::size_t i = 0; i < sys.num_rows(); ++i) {
        const Supports sup = row_supports(sys, i);
        for (std::size_t k : sup.negative) {
            Clause clause{i, k, {}};
            for (std::size_t j : sup.positive) clause.literals.push_back(make_literal(sys, i, j, k));
            cond.clauses.push_back(std::move(clause));
        }
    }
    return cond;
}

std::vector<DnfBranch> build_dnf_single(const SignedSystem& sys) {
    if (sys.num_rows() != 1)
        throw Error(ErrorCode::MultiRow, "single-polynomial decomposition needs exactly one row, got " +
                                             std::to_string(sys.num_rows()));
    const Supports sup = row_supports(sys, 0);
    std::vector<DnfBranch> branches;
    for (std::size_t j : sup.positive) {
        DnfBranch branch{j, {}};
        for (std::size_t k : sup.negative) branch.constraints.push_back(make_literal(sys, 0, j, k));
        branches.push_back(std::move(branch));
    }
    return branches;
}

BigInt evaluate_literal(const LinearLiteral& lit, const std::vector<BigInt>& n) {
    BigInt acc = 0;
    for (std::size_t l = 0; l < lit.coeffs.size(); ++l) acc += BigInt(static_cast<long>(lit.coeffs[l])) * n.at(l);
    return acc;
}

bool satisfies(const LinearLiteral& lit, const std::vector<BigInt>& n) { return evaluate_literal(lit, n) >= 1; }

bool satisfies(const LinearLiteral& lit, const std::vector<BigRational>& n) {
    BigRational acc(0);
    for (std::size_t l = 0; l < lit.coeffs.size(); ++l) acc += BigRational(static_cast<long>(lit.coeffs[l])) * n.at(l);
    return acc >= BigRational(1);
}

namespace {

template <class Scalar>
bool satisfies_all(const LinearCondition& cond, const std::vector<Scalar>& n) {
    if (n.size() != cond.dim) return false;
    for (const auto& clause : cond.clauses) {
        bool any = false;
        for (const auto& lit : clause.literals) {
            if (satisfies(lit, n)) {
                any = true;
                break;
            }
        }
        if (!any) return false;
    }
    return true;
}

} // namespace

bool satisfies(const LinearCondition& cond, const std::vector<BigInt>& n) { return satisfies_all(cond, n); }
bool satisfies(const LinearCondition& cond, const std::vector<BigRational>& n) { return satisfies_all(cond, n); }

std::string to_debug_text(const LinearCondition& cond) {
    std::ostringstream out;
    for (const auto& clause : cond.clauses) {
        out << "clause " << clause.row + 1 << ' ' << clause.neg + 1 << ':';
        if (clause.literals.empty()) out << " []";
        for (const auto& lit : clause.literals) {
            out << " [" << lit.pos + 1 << ':';
            for (Exponent c : lit.coeffs) out << ' ' << c;
            out << ']';
        }
        out << '\n';
    }
    return out.str();
}

} // namespace subtrop
