#pragma once

#include "faa/rational.hpp"

namespace faa {

/// l! computed by exact iteration; 0! = 1.
Rational factorial(unsigned long l);

/// C(a, b), or 0 when b < 0 or b > a.
Rational binomial(unsigned long a, long b);

/// m (m-1) ... (m-p+1); the empty product 1 when p = 0. m may be negative.
Rational falling_factorial(long m, unsigned long p);

} // namespace faa
