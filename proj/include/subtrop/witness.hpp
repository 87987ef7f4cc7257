#pragma once

#include "subtrop/system.hpp"

#include <optional>
#include <string>
#include <vector>

namespace subtrop {

// c_ik / c_ij for a positive monomial j and a negative monomial k of row i.
struct RatioTerm {
    std::string numerator;
    std::string denominator;
    std::size_t row = 0;
    std::size_t pos = 0;
    std::size_t neg = 0;

    friend bool operator==(const RatioTerm&, const RatioTerm&) = default;
};

// z(c) = t^n with t = 1 + sum of terms.
struct SymbolicWitness {
    std::vector<RatioTerm> terms;
    ExponentSolution n;
    std::vector<std::string> var_names;

    friend bool operator==(const SymbolicWitness&, const SymbolicWitness&) = default;
};

struct VerificationReport {
    BigRational t_value;
    BigRational r_value;
    std::vector<BigRational> point;
    std::vector<BigRational> values;
    bool ok = false;
};

// Guard against runaway number sizes; nullopt means unbounded.
struct SizeLimit {
    std::optional<std::size_t> max_bits;
};

// All same-row (positive, negative) pairs, row-major, then by negative index,
// then by positive index.
std::vector<RatioTerm> ratio_terms(const SignedSystem& sys);

// Throws UncertifiedExponent if n does not satisfy the system's condition.
SymbolicWitness symbolic_t(const SignedSystem& sys, const ExponentSolution& n);

// Binds terms by name. Throws UnboundCoefficient.
BigRational evaluate_t(const SymbolicWitness& w, const CoefficientBinding& binding);
// Binds terms by matrix position.
BigRational evaluate_t(const SymbolicWitness& w, const ConcreteCoefficients& coefficients);

// 1 + v * (sum of every negative-sign coefficient). Needs integer magnitudes >= 1.
BigRational uniform_bound(const SignedSystem& sys);

std::vector<BigRational> evaluate_system_at(const SignedSystem& sys, const std::vector<BigRational>& point,
                                            SizeLimit limit = {});

// r^n coordinate-wise; negative exponents give reciprocals.
std::vector<BigRational> power_point(const BigRational& r, const ExponentSolution& n, SizeLimit limit = {});

// Evaluates the concrete system at r^n. Throws PreconditionViolated when n is
// uncertified or r < t. Identically zero rows are rejected the same way.
// Throws WitnessFailure if any value is not positive.
VerificationReport verify_witness(const SignedSystem& sys, const ExponentSolution& n, const BigRational& r,
                                  SizeLimit limit = {});

// `t = 1 + c11/c12 + ...; z = (t^-12, t^-11)`
std::string to_text(const SymbolicWitness& w);

} // namespace subtrop
