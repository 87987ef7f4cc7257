#pragma once

#include "subtrop/condition.hpp"
#include "subtrop/system.hpp"

#include <random>
#include <string>

namespace subtrop::testing {

struct Shape {
    std::size_t max_rows = 3;
    std::size_t max_monomials = 6;
    std::size_t max_vars = 3;
    Exponent max_exponent = 5;
    // Probability weight of +1 among nonzero signs.
    double positive_bias = 0.5;
};

// Parametric system with distinct monomials, every column used, names c<i>_<j>.
SignedSystem random_parametric(std::mt19937_64& rng, const Shape& shape = {});

// Exactly one row.
SignedSystem random_single_row(std::mt19937_64& rng, const Shape& shape = {});

// Positive coefficients p/q with 1 <= p, q <= 10 (q = 1 when `integers`).
SignedSystem random_instance(const SignedSystem& sys, std::mt19937_64& rng, bool integers = false);

// d <= 3, at most 6 clauses, 1..4 literals each, entries in [-5, 5].
LinearCondition random_condition(std::mt19937_64& rng);

// Source text in either coefficient mode; concrete texts may repeat and cancel monomials.
std::string random_source(std::mt19937_64& rng);

std::string read_golden(const std::string& name);

} // namespace subtrop::testing
