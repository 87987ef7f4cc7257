#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace subtrop {

using BigInt = mpz_class;

// Exact rational in canonical form: positive denominator, coprime parts.
class BigRational {
public:
    BigRational() = default;
    BigRational(long value) : value_(value) {}
    BigRational(int value) : value_(value) {}
    BigRational(const BigInt& value) : value_(value) {}
    BigRational(const BigInt& num, const BigInt& den);

    // Accepts an integer or "p/q".
    static BigRational parse(std::string_view text);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }

    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    BigRational abs() const;
    BigRational reciprocal() const;

    // Exponentiation by squaring; negative exponents invert (base must be nonzero).
    BigRational pow(long exponent) const;

    // Bit length of the larger of |numerator| and denominator.
    std::size_t bit_size() const;

    std::string to_string() const;

    BigRational& operator+=(const BigRational& rhs);
    BigRational& operator-=(const BigRational& rhs);
    BigRational& operator*=(const BigRational& rhs);
    BigRational& operator/=(const BigRational& rhs);

    friend BigRational operator+(BigRational lhs, const BigRational& rhs) { return lhs += rhs; }
    friend BigRational operator-(BigRational lhs, const BigRational& rhs) { return lhs -= rhs; }
    friend BigRational operator*(BigRational lhs, const BigRational& rhs) { return lhs *= rhs; }
    friend BigRational operator/(BigRational lhs, const BigRational& rhs) { return lhs /= rhs; }
    BigRational operator-() const;

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    const mpq_class& raw() const { return value_; }

private:
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const BigRational& q);

BigInt lcm(const BigInt& a, const BigInt& b);
BigInt gcd(const BigInt& a, const BigInt& b);

} // namespace subtrop
