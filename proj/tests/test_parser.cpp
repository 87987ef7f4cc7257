#include "subtrop/error.hpp"
#include "subtrop/parser.hpp"

#include "support/random_systems.hpp"

#include <doctest.h>

#include <algorithm>

using namespace subtrop;
using subtrop::testing::read_golden;

namespace {

std::vector<std::vector<int>> sign_rows(const SignedSystem& sys) {
    std::vector<std::vector<int>> out;
    for (std::size_t i = 0; i < sys.num_rows(); ++i) {
        auto row = sys.signs().row(i);
        out.emplace_back(row.begin(), row.end());
    }
    return out;
}

std::vector<std::vector<Exponent>> exponent_rows(const SignedSystem& sys) {
    std::vector<std::vector<Exponent>> out;
    for (std::size_t j = 0; j < sys.num_monomials(); ++j) {
        auto row = sys.monomial(j);
        out.emplace_back(row.begin(), row.end());
    }
    return out;
}

// Reorders the columns of sys to follow `order` (a list of exponent vectors).
std::vector<std::vector<int>> signs_in_order(const SignedSystem& sys, const std::vector<std::vector<Exponent>>& order) {
    const auto monos = exponent_rows(sys);
    std::vector<std::vector<int>> out(sys.num_rows());
    for (const auto& mono : order) {
        const auto it = std::find(monos.begin(), monos.end(), mono);
        REQUIRE(it != monos.end());
        const auto j = static_cast<std::size_t>(it - monos.begin());
        for (std::size_t i = 0; i < sys.num_rows(); ++i) out[i].push_back(sys.sign(i, j));
    }
    return out;
}

ErrorCode parse_error_code(const std::string& text) {
    try {
        parse_system(text);
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected a parse error for: " << text);
    return ErrorCode::Malformed;
}

} // namespace

TEST_CASE("three-polynomial concrete system aligns signs and monomials") {
    const SignedSystem sys = parse_system(read_golden("three_rows.spp"));
    REQUIRE(sys.num_rows() == 3);
    REQUIRE(sys.num_monomials() == 3);
    // First-occurrence order is x1^2*x2, x1^3, x1*x2^2.
    CHECK(exponent_rows(sys) == std::vector<std::vector<Exponent>>{{2, 1}, {3, 0}, {1, 2}});
    // Same matrices up to that column permutation.
    const std::vector<std::vector<Exponent>> reference_order{{2, 1}, {1, 2}, {3, 0}};
    CHECK(signs_in_order(sys, reference_order) == std::vector<std::vector<int>>{{1, 0, -1}, {0, -1, 1}, {-1, 1, 0}});
    const auto& c = sys.concrete().values;
    CHECK(c(0, 0) == BigRational(2));
    CHECK(c(0, 1) == BigRational(4));
    CHECK(c(1, 2) == BigRational(3));
    CHECK(c(1, 1) == BigRational(6));
    CHECK(c(2, 0) == BigRational(1));
    CHECK(c(2, 2) == BigRational(5));
    CHECK(c(0, 2) == BigRational(1)); // placeholder
}

TEST_CASE("parametric golden system") {
    const SignedSystem sys = parse_system(read_golden("two_rows_sat.spp"));
    CHECK(sys.is_parametric());
    CHECK(sys.var_names() == std::vector<std::string>{"x1", "x2"});
    const std::vector<std::vector<Exponent>> reference_order{{5, 0}, {2, 1}, {2, 0}, {0, 3}, {0, 2}};
    CHECK(signs_in_order(sys, reference_order) ==
          std::vector<std::vector<int>>{{-1, 1, -1, 0, 1}, {1, 1, 1, -1, 0}});
    CHECK(sys.parametric().names(1, 4) == "c24");
}

TEST_CASE("concrete terms are summed per monomial") {
    const SignedSystem cancel = parse_system(read_golden("cancel.spp"));
    CHECK(cancel.num_monomials() == 1);
    CHECK(cancel.sign(0, 0) == 0);
    CHECK(cancel.concrete().values(0, 0) == BigRational(1));

    const SignedSystem sum = parse_system("vars x\npoly f = 1/2*x + x - 4*x + 3\n");
    CHECK(sum.sign(0, 0) == -1);
    CHECK(sum.concrete().values(0, 0) == BigRational(BigInt(5), BigInt(2)));
    CHECK(sum.sign(0, 1) == 1);
}

TEST_CASE("syntax details") {
    const SignedSystem sys = parse_system("  # leading comment\nvars x y   # header\n\npoly p = x*x*y^0 + 2 # tail\n");
    CHECK(exponent_rows(sys) == std::vector<std::vector<Exponent>>{{2, 0}, {0, 0}});

    const SignedSystem zero = parse_system("vars x\npoly f = 0\npoly g = a*x\n");
    CHECK(zero.is_parametric());
    CHECK(zero.zero_rows() == std::vector<std::size_t>{0});
}

TEST_CASE("parse errors") {
    CHECK(parse_error_code("vars x\npoly f = a*x + a*x^2\n") == ErrorCode::DuplicateCoefficientName);
    CHECK(parse_error_code("vars x\npoly f = a*x - b*x\n") == ErrorCode::DuplicateMonomial);
    CHECK(parse_error_code("vars x\npoly f = a*x^-2\n") == ErrorCode::NegativeExponent);
    CHECK(parse_error_code("vars x\npoly f = 0*x + 1\n") == ErrorCode::NonPositiveCoefficient);
    CHECK(parse_error_code("vars x\npoly f = 0/3\n") == ErrorCode::NonPositiveCoefficient);
    CHECK(parse_error_code("vars x\npoly f = a*x + 2\n") == ErrorCode::MixedCoefficientModes);
    CHECK(parse_error_code("vars x\npoly f = 2*x\npoly g = a\n") == ErrorCode::MixedCoefficientModes);
    CHECK(parse_error_code("vars x\npoly f = a*x + x^2\n") == ErrorCode::MissingCoefficient);
    CHECK(parse_error_code("poly f = x\n") == ErrorCode::Syntax);
    CHECK(parse_error_code("vars x\npoly f = x + * 2\n") == ErrorCode::Syntax);
    CHECK(parse_error_code("vars x\npoly f = x*y\n") == ErrorCode::Syntax);
    CHECK(parse_error_code("vars x\npoly f = (x + 1)\n") == ErrorCode::Syntax);
    CHECK(parse_error_code("vars x\npoly f = x\npoly f = x\n") == ErrorCode::Syntax);
}

TEST_CASE("parse errors report positions") {
    try {
        parse_system("vars x\n\npoly f = 2*x + 3*q\n");
        FAIL("expected error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(e.column() == 18);
    }
}

TEST_CASE("print is canonical and round-trips") {
    for (const char* name : {"three_rows.spp", "two_rows_sat.spp", "two_rows_unsat.spp", "quadratic_sat.spp", "quadratic_unsat.spp",
                             "zero_row.spp", "cancel.spp", "all_positive.spp"}) {
        CAPTURE(name);
        const SignedSystem sys = parse_system(read_golden(name));
        const std::string text = print_system(sys);
        CHECK(parse_system(text) == sys);
        CHECK(print_system(parse_system(text)) == text);
    }
    CHECK(print_system(parse_system(read_golden("two_rows_sat.spp"))) ==
          "vars x1 x2\n"
          "poly f1 = -c11*x1^5 + c12*x1^2*x2 - c13*x1^2 + c15*x2^2\n"
          "poly f2 = c21*x1^5 + c22*x1^2*x2 + c23*x1^2 - c24*x2^3\n");
    CHECK(print_system(parse_system("vars x1 x2\n")) == "vars x1 x2\n");
}

TEST_CASE("cancelled monomials keep their first-occurrence position") {
    const char* text = "vars x y\npoly a = x - x\npoly b = y\npoly c = 2*x + y^2 - y^2\n";
    const SignedSystem sys = parse_system(text);
    CHECK(exponent_rows(sys) == std::vector<std::vector<Exponent>>{{1, 0}, {0, 1}, {0, 2}});
    CHECK(parse_system(print_system(sys)) == sys);
}

TEST_CASE("round trip on random sources") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
        const std::string src = subtrop::testing::random_source(rng);
        CAPTURE(src);
        const SignedSystem sys = parse_system(src);
        CHECK(parse_system(print_system(sys)) == sys);
    }
}

TEST_CASE("coefficient files") {
    const CoefficientBinding b = parse_coefficients("# values\nc1 = 3\nc2 = 7/14 # half\n\n");
    CHECK(b.at("c1") == BigRational(3));
    CHECK(b.at("c2") == BigRational(BigInt(1), BigInt(2)));
    CHECK_THROWS_AS(parse_coefficients("c1 = 0\n"), ParseError);
    CHECK_THROWS_AS(parse_coefficients("c1 = -2\n"), ParseError);
    CHECK_THROWS_AS(parse_coefficients("c1 = 2\nc1 = 3\n"), ParseError);
}
