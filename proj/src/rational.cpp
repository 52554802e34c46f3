#include "faa/rational.hpp"

#include <cctype>

namespace faa {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

} // namespace

Rational::Rational(long numerator, long denominator) : value_(numerator, denominator)
{
    if (denominator == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
    if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den))) {
        throw rational_parse_error("malformed rational '" + std::string(text) + "'");
    }
    mpz_class n(std::string(num), 10);
    mpz_class d(1);
    if (slash != std::string_view::npos) {
        d = mpz_class(std::string(den), 10);
        if (d == 0) {
            throw rational_parse_error("zero denominator in '" + std::string(text) + "'");
        }
    }
    if (negative) {
        n = -n;
    }
    return Rational(mpq_class(n, d));
}

std::string Rational::to_string() const
{
    if (is_integer()) {
        return value_.get_num().get_str();
    }
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::to_decimal(unsigned digits) const
{
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    mpz_class num = abs(value_.get_num()) * scale * 2 + value_.get_den();
    mpz_class den = value_.get_den() * 2;
    mpz_class scaled = num / den; // floor((|x|*10^d) + 1/2)

    std::string s = scaled.get_str();
    if (s.size() <= digits) {
        s.insert(0, digits + 1 - s.size(), '0');
    }
    if (digits > 0) {
        s.insert(s.size() - digits, ".");
    }
    if (sign() < 0 && scaled != 0) {
        s.insert(0, "-");
    }
    return s;
}

Rational& Rational::operator/=(const Rational& rhs)
{
    if (rhs.is_zero()) {
        throw std::domain_error("rational division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

Rational pow(const Rational& base, long exponent)
{
    if (exponent < 0) {
        if (base.is_zero()) {
            throw std::domain_error("negative power of zero");
        }
        return Rational(1) / pow(base, -exponent);
    }
    mpz_class num;
    mpz_class den;
    const auto e = static_cast<unsigned long>(exponent);
    mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), e);
    return Rational(mpq_class(num, den));
}

} // namespace faa
