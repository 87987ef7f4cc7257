#include "subtrop/system.hpp"

#include "subtrop/error.hpp"

#include <set>

namespace subtrop {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::Malformed, what); }

} // namespace

SignedSystem::SignedSystem(SignMatrix signs, ExponentMatrix exponents, CoefficientSpec coefficients,
                           std::vector<std::string> var_names, std::vector<std::string> row_names)
    : signs_(std::move(signs)), exponents_(std::move(exponents)), coefficients_(std::move(coefficients)),
      var_names_(std::move(var_names)), row_names_(std::move(row_names)) {
    const std::size_t u = signs_.rows();
    const std::size_t v = signs_.cols();
    const std::size_t d = var_names_.size();

    if (exponents_.rows() != v) malformed("sign matrix has " + std::to_string(v) + " columns but exponent matrix has " +
                                          std::to_string(exponents_.rows()) + " rows");
    if (exponents_.cols() != d && !(v == 0 && exponents_.cols() == 0))
        malformed("exponent matrix width does not match the variable count");

    std::set<std::string> vars;
    for (const auto& name : var_names_) {
        if (name.empty()) malformed("empty variable name");
        if (!vars.insert(name).second) malformed("duplicate variable name '" + name + "'");
    }

    if (row_names_.empty()) {
        for (std::size_t i = 0; i < u; ++i) row_names_.push_back("f" + std::to_string(i + 1));
    } else if (row_names_.size() != u) {
        malformed("row name count does not match the row count");
    }

    for (std::size_t i = 0; i < u; ++i)
        for (std::size_t j = 0; j < v; ++j)
            if (signs_(i, j) < -1 || signs_(i, j) > 1) malformed("sign entries must be -1, 0 or 1");

    std::set<std::vector<Exponent>> seen;
    for (std::size_t j = 0; j < v; ++j) {
        const auto row = exponents_.row(j);
        for (Exponent x : row) {
            if (x < 0) throw Error(ErrorCode::NegativeExponent, "negative exponent in monomial " + std::to_string(j + 1));
            if (x > kMaxExponent) malformed("exponent exceeds " + std::to_string(kMaxExponent));
        }
        if (!seen.insert(std::vector<Exponent>(row.begin(), row.end())).second)
            malformed("monomial " + std::to_string(j + 1) + " repeats an earlier exponent vector");
    }

    if (const auto* p = std::get_if<ParametricCoefficients>(&coefficients_)) {
        if (p->names.rows() != u || p->names.cols() != v) malformed("coefficient matrix has the wrong shape");
        std::set<std::string> names;
        for (std::size_t i = 0; i < u; ++i) {
            for (std::size_t j = 0; j < v; ++j) {
                const std::string& name = p->names(i, j);
                if (signs_(i, j) == 0) {
                    if (!name.empty()) malformed("coefficient name at a zero sign position");
                    continue;
                }
                if (name.empty()) malformed("missing coefficient name at a nonzero sign position");
                if (vars.contains(name)) malformed("coefficient name '" + name + "' collides with a variable");
                if (!names.insert(name).second)
                    throw Error(ErrorCode::DuplicateCoefficientName, "duplicate coefficient name '" + name + "'");
            }
        }
        for (std::size_t j = 0; j < v; ++j) {
            bool used = false;
            for (std::size_t i = 0; i < u; ++i) used = used || signs_(i, j) != 0;
            if (!used) malformed("parametric system has an unused monomial column " + std::to_string(j + 1));
        }
    } else {
        const auto& c = std::get<ConcreteCoefficients>(coefficients_);
        if (c.values.rows() != u || c.values.cols() != v) malformed("coefficient matrix has the wrong shape");
        for (std::size_t i = 0; i < u; ++i) {
            for (std::size_t j = 0; j < v; ++j) {
                if (signs_(i, j) == 0) {
                    if (c.values(i, j) != 1) malformed("placeholder coefficient must be 1");
                } else if (c.values(i, j).sign() <= 0) {
                    throw Error(ErrorCode::NonPositiveCoefficient, "coefficient magnitudes must be positive");
                }
            }
        }
    }
}

const ParametricCoefficients& SignedSystem::parametric() const {
    if (const auto* p = std::get_if<ParametricCoefficients>(&coefficients_)) return *p;
    throw Error(ErrorCode::PreconditionViolated, "system has concrete coefficients");
}

const ConcreteCoefficients& SignedSystem::concrete() const {
    if (const auto* c = std::get_if<ConcreteCoefficients>(&coefficients_)) return *c;
    throw Error(ErrorCode::PreconditionViolated, "system has parametric coefficients");
}

std::string SignedSystem::coefficient_name(std::size_t i, std::size_t j) const {
    if (const auto* p = std::get_if<ParametricCoefficients>(&coefficients_)) return p->names(i, j);
    return "c_" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
}

std::vector<std::size_t> SignedSystem::zero_rows() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < num_rows(); ++i) {
        bool zero = true;
        for (std::size_t j = 0; j < num_monomials(); ++j) zero = zero && signs_(i, j) == 0;
        if (zero) out.push_back(i);
    }
    return out;
}

SignedSystem SignedSystem::instantiate(const CoefficientBinding& binding) const {
    Matrix<BigRational> values(num_rows(), num_monomials(), BigRational(1));
    for (std::size_t i = 0; i < num_rows(); ++i) {
        for (std::size_t j = 0; j < num_monomials(); ++j) {
            if (signs_(i, j) == 0) continue;
            const std::string name = coefficient_name(i, j);
            const auto it = binding.find(name);
            if (it == binding.end())
                throw Error(ErrorCode::UnboundCoefficient, "no value bound for coefficient '" + name + "'");
            if (it->second.sign() <= 0)
                throw Error(ErrorCode::NonPositiveCoefficient, "coefficient '" + name + "' must be positive");
            values(i, j) = it->second;
        }
    }
    return with_coefficients(std::move(values));
}

SignedSystem SignedSystem::with_coefficients(Matrix<BigRational> values) const {
    if (values.rows() != num_rows() || values.cols() != num_monomials())
        malformed("coefficient matrix has the wrong shape");
    for (std::size_t i = 0; i < num_rows(); ++i)
        for (std::size_t j = 0; j < num_monomials(); ++j)
            if (signs_(i, j) == 0) values(i, j) = BigRational(1);
    return SignedSystem(signs_, exponents_, ConcreteCoefficients{std::move(values)}, var_names_, row_names_);
}

Supports row_supports(const SignedSystem& sys, std::size_t i) {
    if (i >= sys.num_rows())
        throw Error(ErrorCode::IndexOutOfRange,
                    "row " + std::to_string(i) + " out of range for " + std::to_string(sys.num_rows()) + " rows");
    Supports out;
    for (std::size_t j = 0; j < sys.num_monomials(); ++j) {
        if (sys.sign(i, j) > 0) out.positive.push_back(j);
        if (sys.sign(i, j) < 0) out.negative.push_back(j);
    }
    return out;
}

} // namespace subtrop
