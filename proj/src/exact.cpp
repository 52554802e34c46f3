#include "faa/exact.hpp"

namespace faa {

Rational factorial(unsigned long l)
{
    mpz_class acc(1);
    for (unsigned long i = 2; i <= l; ++i) {
        acc *= i;
    }
    return Rational(acc);
}

Rational binomial(unsigned long a, long b)
{
    if (b < 0 || static_cast<unsigned long>(b) > a) {
        return Rational(0);
    }
    auto k = static_cast<unsigned long>(b);
    if (k > a - k) {
        k = a - k;
    }
    // Running product stays integral: acc = C(a-k+i, i) after step i.
    mpz_class acc(1);
    for (unsigned long i = 1; i <= k; ++i) {
        acc *= a - k + i;
        mpz_divexact_ui(acc.get_mpz_t(), acc.get_mpz_t(), i);
    }
    return Rational(acc);
}

Rational falling_factorial(long m, unsigned long p)
{
    mpz_class acc(1);
    for (unsigned long i = 0; i < p; ++i) {
        acc *= mpz_class(m) - mpz_class(i);
    }
    return Rational(acc);
}

} // namespace faa
