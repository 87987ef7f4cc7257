#include "subtrop/rational.hpp"

#include "subtrop/error.hpp"

#include <ostream>

namespace subtrop {

namespace {

bool is_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s)
        if (ch < '0' || ch > '9') return false;
    return true;
}

} // namespace

BigRational::BigRational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw Error(ErrorCode::Malformed, "zero denominator");
    value_.get_num() = num;
    value_.get_den() = den;
    value_.canonicalize();
}

BigRational BigRational::parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!is_digits(num) || !is_digits(den))
        throw Error(ErrorCode::Malformed, "not a rational literal: '" + std::string(text) + "'");
    BigInt n(std::string(num), 10);
    BigInt d(std::string(den), 10);
    if (negative) n = -n;
    return BigRational(n, d);
}

BigRational BigRational::abs() const {
    BigRational out;
    out.value_ = ::abs(value_);
    return out;
}

BigRational BigRational::reciprocal() const {
    if (value_ == 0) throw Error(ErrorCode::Malformed, "reciprocal of zero");
    return BigRational(value_.get_den(), value_.get_num());
}

BigRational BigRational::pow(long exponent) const {
    if (exponent < 0) return reciprocal().pow(-exponent);
    BigRational out;
    const auto e = static_cast<unsigned long>(exponent);
    mpz_pow_ui(out.value_.get_num_mpz_t(), value_.get_num_mpz_t(), e);
    mpz_pow_ui(out.value_.get_den_mpz_t(), value_.get_den_mpz_t(), e);
    // Powers of coprime integers stay coprime; denominator stays positive.
    return out;
}

std::size_t BigRational::bit_size() const {
    const std::size_t n = mpz_sizeinbase(value_.get_num_mpz_t(), 2);
    const std::size_t d = mpz_sizeinbase(value_.get_den_mpz_t(), 2);
    return n > d ? n : d;
}

std::string BigRational::to_string() const { return value_.get_str(10); }

BigRational& BigRational::operator+=(const BigRational& rhs) {
    value_ += rhs.value_;
    return *this;
}

BigRational& BigRational::operator-=(const BigRational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

BigRational& BigRational::operator*=(const BigRational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

BigRational& BigRational::operator/=(const BigRational& rhs) {
    if (rhs.value_ == 0) throw Error(ErrorCode::Malformed, "division by zero");
    value_ /= rhs.value_;
    return *this;
}

BigRational BigRational::operator-() const {
    BigRational out;
    out.value_ = -value_;
    return out;
}

std::ostream& operator<<(std::ostream& os, const BigRational& q) { return os << q.to_string(); }

BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt out;
    mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
    BigInt out;
    mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

} // namespace subtrop
