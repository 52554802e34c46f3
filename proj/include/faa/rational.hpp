#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace faa {

/// Raised when a rational literal cannot be parsed.
class rational_parse_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Exact rational number of unbounded size.
///
/// Values are always kept in lowest terms with a positive denominator, so two
/// rationals are equal exactly when their stored numerator and denominator
/// are equal. Zero is 0/1.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}
    Rational(int value) : value_(static_cast<long>(value)) {}
    Rational(long numerator, long denominator);
    explicit Rational(mpz_class integer) : value_(std::move(integer)) {}
    explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

    /// Parses "p", "-p", "p/q" or "-p/q". Non-reduced input is accepted and
    /// reduced; a zero denominator or any other text is rejected.
    static Rational parse(std::string_view text);

    [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }
    [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
    [[nodiscard]] int sign() const { return sgn(value_); }

    /// Canonical text form: "p" when the denominator is 1, else "p/q".
    [[nodiscard]] std::string to_string() const;

    /// Decimal rendering rounded half away from zero to `digits` places.
    /// Display only.
    [[nodiscard]] std::string to_decimal(unsigned digits) const;

    [[nodiscard]] const mpq_class& raw() const { return value_; }

    Rational& operator+=(const Rational& rhs) { value_ += rhs.value_; return *this; }
    Rational& operator-=(const Rational& rhs) { value_ -= rhs.value_; return *this; }
    Rational& operator*=(const Rational& rhs) { value_ *= rhs.value_; return *this; }
    /// Throws std::domain_error on division by zero.
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    friend Rational operator-(const Rational& x) { return Rational(mpq_class(-x.value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }

private:
    mpq_class value_{0};
};

/// x raised to an integer power. Negative exponents invert; 0^0 is 1.
/// Throws std::domain_error for a negative power of zero.
Rational pow(const Rational& base, long exponent);

} // namespace faa
