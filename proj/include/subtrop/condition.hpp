#pragma once

#include "subtrop/system.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace subtrop {

// coeffs . n >= 1, where coeffs = e_pos - e_neg taken from row `row`.
struct LinearLiteral {
    std::vector<Exponent> coeffs;
    std::size_t row = 0;
    std::size_t pos = 0;
    std::size_t neg = 0;

    friend bool operator==(const LinearLiteral&, const LinearLiteral&) = default;
};

// Disjunction for one (row, negative monomial) pair. Empty means false.
struct Clause {
    std::size_t row = 0;
    std::size_t neg = 0;
    std::vector<LinearLiteral> literals;

    friend bool operator==(const Clause&, const Clause&) = default;
};

// Conjunction of clauses over n in Q^d.
struct LinearCondition {
    std::size_t dim = 0;
    std::vector<Clause> clauses;

    friend bool operator==(const LinearCondition&, const LinearCondition&) = default;
};

struct DnfBranch {
    std::size_t pivot = 0;
    std::vector<LinearLiteral> constraints;

    friend bool operator==(const DnfBranch&, const DnfBranch&) = default;
};

LinearLiteral make_literal(const SignedSystem& sys, std::size_t row, std::size_t pos, std::size_t neg);

// One clause per (i, k) with s_ik < 0 in lexicographic order; literals over
// j with s_ij > 0 ascending. Depends on the signs and exponents only.
LinearCondition build_cnf(const SignedSystem& sys);

// Single-polynomial decomposition: one branch per positive monomial, each a
// conjunction over all negative monomials. Throws MultiRow unless u == 1.
std::vector<DnfBranch> build_dnf_single(const SignedSystem& sys);

BigInt evaluate_literal(const LinearLiteral& lit, const std::vector<BigInt>& n);
bool satisfies(const LinearLiteral& lit, const std::vector<BigInt>& n);
bool satisfies(const LinearLiteral& lit, const std::vector<BigRational>& n);
bool satisfies(const LinearCondition& cond, const std::vector<BigInt>& n);
bool satisfies(const LinearCondition& cond, const std::vector<BigRational>& n);

// `clause i k: [j: c1 c2] ...` with 1-based indices, one clause per line.
std::string to_debug_text(const LinearCondition& cond);

} // namespace subtrop
