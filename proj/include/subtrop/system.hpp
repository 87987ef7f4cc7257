#pragma once

#include "subtrop/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace subtrop {

// Dense row-major matrix.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using Exponent = std::int64_t;

// Largest exponent accepted anywhere.
inline constexpr Exponent kMaxExponent = (Exponent{1} << 31) - 1;

using SignMatrix = Matrix<int>;          // u x v, entries in {-1, 0, 1}
using ExponentMatrix = Matrix<Exponent>; // v x d, entries >= 0, distinct rows

// Coefficient names, empty exactly where the sign is zero.
struct ParametricCoefficients {
    Matrix<std::string> names;
    friend bool operator==(const ParametricCoefficients&, const ParametricCoefficients&) = default;
};

// Positive magnitudes; placeholder 1 where the sign is zero.
struct ConcreteCoefficients {
    Matrix<BigRational> values;
    friend bool operator==(const ConcreteCoefficients&, const ConcreteCoefficients&) = default;
};

using CoefficientSpec = std::variant<ParametricCoefficients, ConcreteCoefficients>;

using CoefficientBinding = std::map<std::string, BigRational>;

// f = (s o c) x^e. Immutable once constructed; the constructor checks every
// well-formedness rule and throws Error(Malformed) on violation.
class SignedSystem {
public:
    SignedSystem(SignMatrix signs, ExponentMatrix exponents, CoefficientSpec coefficients,
                 std::vector<std::string> var_names, std::vector<std::string> row_names = {});

    std::size_t num_rows() const noexcept { return signs_.rows(); }      // u
    std::size_t num_monomials() const noexcept { return signs_.cols(); } // v
    std::size_t num_vars() const noexcept { return var_names_.size(); }  // d

    const SignMatrix& signs() const noexcept { return signs_; }
    const ExponentMatrix& exponents() const noexcept { return exponents_; }
    const CoefficientSpec& coefficients() const noexcept { return coefficients_; }
    const std::vector<std::string>& var_names() const noexcept { return var_names_; }
    const std::vector<std::string>& row_names() const noexcept { return row_names_; }

    bool is_parametric() const noexcept {
        return std::holds_alternative<ParametricCoefficients>(coefficients_);
    }
    const ParametricCoefficients& parametric() const;
    const ConcreteCoefficients& concrete() const;

    int sign(std::size_t i, std::size_t j) const { return signs_(i, j); }
    std::span<const Exponent> monomial(std::size_t j) const { return exponents_.row(j); }

    // Coefficient name at (i, j): the parametric name, or "c_<i+1>_<j+1>" for concrete systems.
    std::string coefficient_name(std::size_t i, std::size_t j) const;

    // Rows whose sign entries are all zero (f_i identically zero).
    std::vector<std::size_t> zero_rows() const;

    // Same (s, e) with concrete values bound by name. Throws UnboundCoefficient.
    SignedSystem instantiate(const CoefficientBinding& binding) const;

    // Same (s, e) with the given concrete magnitudes (placeholders are reset to 1).
    SignedSystem with_coefficients(Matrix<BigRational> values) const;

    friend bool operator==(const SignedSystem&, const SignedSystem&) = default;

private:
    SignMatrix signs_;
    ExponentMatrix exponents_;
    CoefficientSpec coefficients_;
    std::vector<std::string> var_names_;
    std::vector<std::string> row_names_;
};

struct Supports {
    std::vector<std::size_t> positive;
    std::vector<std::size_t> negative;
};

// Positive and negative support of row i, ascending monomial indices.
Supports row_supports(const SignedSystem& sys, std::size_t i);

// An integer exponent vector n in Z^d.
struct ExponentSolution {
    std::vector<BigInt> n;
    friend bool operator==(const ExponentSolution&, const ExponentSolution&) = default;
};

} // namespace subtrop
