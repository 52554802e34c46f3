#pragma once

#include <map>
#include <string>
#include <vector>

#include "faa/composition.hpp"
#include "faa/rational.hpp"

namespace faa {

/// Polynomial in a formal symbol T standing for the outer function. After
/// expansion the exponent of T is read as a derivation order: c * T^p becomes
/// c * phi^{(p)}. Zero coefficients are never stored.
class PhiPolynomial {
public:
    PhiPolynomial() = default;
    /// c * T^exponent (the zero polynomial when c == 0).
    PhiPolynomial(Rational coefficient, unsigned exponent);

    static PhiPolynomial constant(Rational c) { return {std::move(c), 0}; }

    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    /// Coefficient of T^exponent (zero if absent).
    [[nodiscard]] Rational coefficient(unsigned exponent) const;
    /// Highest exponent present; 0 for the zero polynomial.
    [[nodiscard]] unsigned degree() const;
    /// Ascending exponent -> nonzero coefficient.
    [[nodiscard]] const std::map<unsigned, Rational>& terms() const { return terms_; }

    /// Reads T^p as phi^{(p)} and sums. T^0 reads as the value of phi and
    /// requires phi.base. Throws sequence_too_short if phi is too short.
    [[nodiscard]] Rational interpret(const DerivativeSequence& phi) const;

    /// "8*Phi^3 + 6*Phi^2 + 1*Phi": descending exponents, explicit
    /// coefficients, "0" for the zero polynomial.
    [[nodiscard]] std::string to_string() const;

    PhiPolynomial& operator+=(const PhiPolynomial& rhs);
    PhiPolynomial& operator-=(const PhiPolynomial& rhs);
    friend PhiPolynomial operator+(PhiPolynomial a, const PhiPolynomial& b) { return a += b; }
    friend PhiPolynomial operator-(PhiPolynomial a, const PhiPolynomial& b) { return a -= b; }
    friend PhiPolynomial operator*(const PhiPolynomial& a, const PhiPolynomial& b);
    friend PhiPolynomial operator-(const PhiPolynomial& a);

    friend bool operator==(const PhiPolynomial&, const PhiPolynomial&) = default;

private:
    void add_term(unsigned exponent, const Rational& c);

    std::map<unsigned, Rational> terms_;
};

/// The (n+1) x (n+1) matrix whose determinant is (-1)^n D^{n+1}(phi o psi),
/// with 1-based indices r, c:
///
///   entry(r, 1)  = psi^{(n+2-r)} T
///   entry(r, r)  = -1                                for r >= 2
///   entry(r, c)  = C(n-r+1, c-r-1) psi^{(c-r)} T     for c >= r+1
///   otherwise 0.
class FaaMatrix {
public:
    [[nodiscard]] unsigned n() const { return n_; }
    [[nodiscard]] unsigned size() const { return n_ + 1; }
    /// 1-based access.
    [[nodiscard]] const PhiPolynomial& entry(unsigned r, unsigned c) const
    {
        return entries_[(r - 1) * size() + (c - 1)];
    }

    friend FaaMatrix build_matrix(const DerivativeSequence& psi, unsigned n);

private:
    FaaMatrix(unsigned n) : n_(n), entries_(static_cast<std::size_t>(n + 1) * (n + 1)) {}
    PhiPolynomial& entry(unsigned r, unsigned c) { return entries_[(r - 1) * size() + (c - 1)]; }

    unsigned n_;
    std::vector<PhiPolynomial> entries_;
};

/// Requires psi to carry derivatives up to order n+1. n == 0 yields the 1x1
/// matrix [psi' T].
FaaMatrix build_matrix(const DerivativeSequence& psi, unsigned n);

/// Exact determinant of a FaaMatrix, division free.
///
/// Expanding along column 1, deleting row r leaves a block-triangular minor:
/// rows 1..r-1 against columns 2..r on top, and a triangular block of -1 on
/// the diagonal below. The top blocks A_k (rows 1..k, columns 2..k+1) have -1
/// on their subdiagonal, so their determinants obey
///
///   det A_0 = 1,   det A_k = sum_{i=1..k} entry(i, k+1) * det A_{i-1}
///
/// and det M = (-1)^n sum_r entry(r, 1) * det A_{r-1}. O(n^2) ring products.
PhiPolynomial determinant_expand(const FaaMatrix& matrix);

/// D^{order}(phi o psi) through the determinant form, order >= 2. Throws
/// std::out_of_range for order < 2 and sequence_too_short for short inputs.
Rational derivative_determinant(const DerivativeSequence& phi, const DerivativeSequence& psi, unsigned order);

} // namespace faa
