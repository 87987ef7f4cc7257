#include "subtrop/error.hpp"
#include "subtrop/lra.hpp"
#include "subtrop/oracle.hpp"
#include "subtrop/parser.hpp"

#include "support/random_systems.hpp"

#include <doctest.h>

using namespace subtrop;
using subtrop::testing::read_golden;

TEST_CASE("exhaustive decision on golden conditions") {
    CHECK(oracle::exhaustive_decide(build_cnf(parse_system(read_golden("two_rows_sat.spp")))) == oracle::Verdict::Sat);
    CHECK(oracle::exhaustive_decide(build_cnf(parse_system(read_golden("two_rows_unsat.spp")))) == oracle::Verdict::Unsat);
    CHECK(oracle::exhaustive_decide(LinearCondition{2, {}}) == oracle::Verdict::Sat);
    CHECK(oracle::exhaustive_decide(LinearCondition{1, {Clause{0, 0, {}}}}) == oracle::Verdict::Unsat);
}

TEST_CASE("selection guard") {
    LinearCondition big;
    big.dim = 1;
    for (int c = 0; c < 7; ++c) {
        Clause clause{0, 0, {}};
        for (int k = 0; k < 8; ++k) clause.literals.push_back({{1}, 0, 0, 0});
        big.clauses.push_back(clause);
    }
    // 8^7 > 10^6
    CHECK_THROWS_AS(oracle::exhaustive_decide(big), Error);
}

TEST_CASE("grid search") {
    const LinearCondition ex2 = build_cnf(parse_system(read_golden("two_rows_sat.spp")));
    const auto found = oracle::grid_search(ex2, {12});
    REQUIRE(found);
    CHECK(satisfies(ex2, found->n));
    CHECK(satisfies(ex2, std::vector<BigInt>{-12, -11}));

    const LinearCondition f = build_cnf(parse_system(read_golden("quadratic_sat.spp")));
    const auto first = oracle::grid_search(f, {1});
    REQUIRE(first);
    CHECK(first->n == std::vector<BigInt>{-1}); // lexicographically first of {-1, 1}

    CHECK_FALSE(oracle::grid_search(build_cnf(parse_system(read_golden("two_rows_unsat.spp"))), {20}));

    LinearCondition wide;
    wide.dim = 3;
    CHECK_THROWS_AS(oracle::grid_search(wide, {200}), Error);
    CHECK_THROWS_AS(oracle::grid_search(wide, {0}), Error);
}

TEST_CASE("grid search finds points whenever a scaled model fits the box") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 150; ++trial) {
        const LinearCondition cond = subtrop::testing::random_condition(rng);
        const auto model = solve_cnf(cond);
        if (!model) continue;
        const ExponentSolution n = scale_to_integer(*model);
        BigInt norm = 0;
        for (const auto& x : n.n)
            if (abs(x) > norm) norm = abs(x);
        if (norm > 40) continue;
        const auto found = oracle::grid_search(cond, {std::max<long>(1, norm.get_si())});
        REQUIRE(found);
        CHECK(satisfies(cond, found->n));
    }
}

TEST_CASE("oracle Fourier-Motzkin on small conjunctions") {
    CHECK(oracle::fm_feasible(1, {{1}}));
    CHECK_FALSE(oracle::fm_feasible(1, {{1}, {-1}}));
    CHECK(oracle::fm_feasible(2, {{0, 1}, {1, -1}}));
    CHECK_FALSE(oracle::fm_feasible(2, {{1, 1}, {-1, -1}}));
    CHECK_FALSE(oracle::fm_feasible(2, {{0, 0}}));
}
