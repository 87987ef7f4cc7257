#include "subtrop/witness.hpp"

#include "subtrop/condition.hpp"
#include "subtrop/error.hpp"

#include <sstream>

namespace subtrop {

namespace {

void check_bits(const BigRational& base, const BigInt& exponent, SizeLimit limit) {
    if (!limit.max_bits) return;
    const BigInt estimate = BigInt(static_cast<unsigned long>(base.bit_size())) * abs(exponent);
    if (estimate > BigInt(static_cast<unsigned long>(*limit.max_bits)))
        throw Error(ErrorCode::MaxBitsExceeded, "power of " + base.to_string() + " with exponent " +
                                                    exponent.get_str() + " exceeds " +
                                                    std::to_string(*limit.max_bits) + " bits");
}

void check_bits(const BigRational& value, SizeLimit limit) {
    if (limit.max_bits && value.bit_size() > *limit.max_bits)
        throw Error(ErrorCode::MaxBitsExceeded, "value exceeds " + std::to_string(*limit.max_bits) + " bits");
}

long to_long_exponent(const BigInt& e) {
    if (!e.fits_slong_p()) throw Error(ErrorCode::MaxBitsExceeded, "exponent " + e.get_str() + " is too large");
    return e.get_si();
}

} // namespace

std::vector<RatioTerm> ratio_terms(const SignedSystem& sys) {
    std::vector<RatioTerm> terms;
    for (std::size_t i = 0; i < sys.num_rows(); ++i) {
        const Supports sup = row_supports(sys, i);
        for (std::size_t k : sup.negative)
            for (std::size_t j : sup.positive)
                terms.push_back({sys.coefficient_name(i, k), sys.coefficient_name(i, j), i, j, k});
    }
    return terms;
}

SymbolicWitness symbolic_t(const SignedSystem& sys, const ExponentSolution& n) {
    if (n.n.size() != sys.num_vars() || !satisfies(build_cnf(sys), n.n))
        throw Error(ErrorCode::UncertifiedExponent, "exponent vector does not satisfy the linear condition");
    return {ratio_terms(sys), n, sys.var_names()};
}

BigRational evaluate_t(const SymbolicWitness& w, const CoefficientBinding& binding) {
    auto lookup = [&binding](const std::string& name) -> const BigRational& {
        const auto it = binding.find(name);
        if (it == binding.end()) throw Error(ErrorCode::UnboundCoefficient, "no value bound for '" + name + "'");
        if (it->second.sign() <= 0)
            throw Error(ErrorCode::NonPositiveCoefficient, "coefficient '" + name + "' must be positive");
        return it->second;
    };
    BigRational t(1);
    for (const auto& term : w.terms) t += lookup(term.numerator) / lookup(term.denominator);
    return t;
}

BigRational evaluate_t(const SymbolicWitness& w, const ConcreteCoefficients& coefficients) {
    BigRational t(1);
    for (const auto& term : w.terms) {
        if (term.row >= coefficients.values.rows() || term.pos >= coefficients.values.cols() ||
            term.neg >= coefficients.values.cols())
            throw Error(ErrorCode::UnboundCoefficient, "coefficient matrix does not cover term " + term.numerator +
                                                           "/" + term.denominator);
        t += coefficients.values(term.row, term.neg) / coefficients.values(term.row, term.pos);
    }
    return t;
}

BigRational uniform_bound(const SignedSystem& sys) {
    const auto& values = sys.concrete().values;
    BigRational negative_sum(0);
    for (std::size_t i = 0; i < sys.num_rows(); ++i) {
        for (std::size_t j = 0; j < sys.num_monomials(); ++j) {
            const int s = sys.sign(i, j);
            if (s == 0) continue;
            const BigRational& c = values(i, j);
            if (!c.is_integer() || c < BigRational(1))
                throw Error(ErrorCode::NonIntegerCoefficient,
                            "coefficient " + sys.coefficient_name(i, j) + " = " + c.to_string() +
                                " is not an integer >= 1");
            if (s < 0) negative_sum += c;
        }
    }
    return BigRational(1) + BigRational(static_cast<long>(sys.num_monomials())) * negative_sum;
}

std::vector<BigRational> evaluate_system_at(const SignedSystem& sys, const std::vector<BigRational>& point,
                                            SizeLimit limit) {
    if (point.size() != sys.num_vars())
        throw Error(ErrorCode::NonPositivePoint, "point has " + std::to_string(point.size()) + " coordinates, expected " +
                                                     std::to_string(sys.num_vars()));
    for (const auto& x : point)
        if (x.sign() <= 0) throw Error(ErrorCode::NonPositivePoint, "point coordinates must be positive");

    const auto& values = sys.concrete().values;
    std::vector<BigRational> monomials(sys.num_monomials(), BigRational(1));
    for (std::size_t j = 0; j < sys.num_monomials(); ++j) {
        const auto mono = sys.monomial(j);
        for (std::size_t l = 0; l < mono.size(); ++l) {
            if (mono[l] == 0) continue;
            check_bits(point[l], BigInt(static_cast<long>(mono[l])), limit);
            monomials[j] *= point[l].pow(static_cast<long>(mono[l]));
        }
        check_bits(monomials[j], limit);
    }

    std::vector<BigRational> out(sys.num_rows(), BigRational(0));
    for (std::size_t i = 0; i < sys.num_rows(); ++i) {
        for (std::size_t j = 0; j < sys.num_monomials(); ++j) {
            const int s = sys.sign(i, j);
            if (s == 0) continue;
            const BigRational term = values(i, j) * monomials[j];
            out[i] += s > 0 ? term : -term;
        }
        check_bits(out[i], limit);
    }
    return out;
}

std::vector<BigRational> power_point(const BigRational& r, const ExponentSolution& n, SizeLimit limit) {
    std::vector<BigRational> point;
    point.reserve(n.n.size());
    for (const auto& e : n.n) {
        check_bits(r, e, limit);
        point.push_back(r.pow(to_long_exponent(e)));
    }
    return point;
}

VerificationReport verify_witness(const SignedSystem& sys, const ExponentSolution& n, const BigRational& r,
                                  SizeLimit limit) {
    if (sys.is_parametric())
        throw Error(ErrorCode::PreconditionViolated, "verification needs concrete coefficients");
    if (const auto zero = sys.zero_rows(); !zero.empty())
        throw Error(ErrorCode::PreconditionViolated,
                    "identically zero polynomial in row " + std::to_string(zero.front() + 1));
    if (n.n.size() != sys.num_vars() || !satisfies(build_cnf(sys), n.n))
        throw Error(ErrorCode::PreconditionViolated, "exponent vector does not satisfy the linear condition");

    VerificationReport report;
    report.t_value = evaluate_t(symbolic_t(sys, n), sys.concrete());
    report.r_value = r;
    if (r < report.t_value)
        throw Error(ErrorCode::PreconditionViolated, "r = " + r.to_string() + " is below t = " + report.t_value.to_string());

    report.point = power_point(r, n, limit);
    report.values = evaluate_system_at(sys, report.point, limit);
    report.ok = true;
    for (const auto& value : report.values) report.ok = report.ok && value.sign() > 0;
    if (!report.ok) {
        std::ostringstream msg;
        msg << "witness fails at r = " << r << ":";
        for (std::size_t i = 0; i < report.values.size(); ++i) msg << ' ' << sys.row_names()[i] << '=' << report.values[i];
        throw Error(ErrorCode::WitnessFailure, msg.str());
    }
    return report;
}

std::string to_text(const SymbolicWitness& w) {
    std::ostringstream out;
    out << "t = 1";
    for (const auto& term : w.terms) out << " + " << term.numerator << '/' << term.denominator;
    out << "; z = (";
    for (std::size_t l = 0; l < w.n.n.size(); ++l) out << (l ? ", " : "") << "t^" << w.n.n[l].get_str();
    out << ')';
    return out.str();
}

} // namespace subtrop
