#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "faa/rational.hpp"

namespace faa {

/// Derivative values of a function at an expansion point. derivs[k-1] holds
/// the k-th derivative; base, when known, holds the function value itself.
struct DerivativeSequence {
    std::optional<Rational> base;
    std::vector<Rational> derivs;

    [[nodiscard]] std::size_t size() const { return derivs.size(); }
    /// k-th derivative, 1 <= k <= size().
    [[nodiscard]] const Rational& operator[](std::size_t k) const { return derivs[k - 1]; }

    friend bool operator==(const DerivativeSequence&, const DerivativeSequence&) = default;
};

/// A derivative sequence lacks an order some route needs.
class sequence_too_short : public std::invalid_argument {
public:
    sequence_too_short(std::string which, std::size_t required, std::size_t available);

    [[nodiscard]] const std::string& which() const { return which_; }
    [[nodiscard]] std::size_t required() const { return required_; }
    [[nodiscard]] std::size_t available() const { return available_; }

private:
    std::string which_;
    std::size_t required_;
    std::size_t available_;
};

/// Throws sequence_too_short naming `which` unless seq has at least `order`
/// derivatives.
void require_order(const DerivativeSequence& seq, std::size_t order, const char* which);

/// n-th derivative of phi(psi(y)) as the sum over all partitions of n of
/// faa_coefficient * phi^{(p)} * prod_j (psi^{(j)})^{m_j}.
Rational derivative_partition_sum(const DerivativeSequence& phi, const DerivativeSequence& psi, unsigned n);

/// Partial Bell polynomial B_{n,k}(psi', ..., psi^{(n-k+1)}): the partition
/// terms with exactly k parts. Throws std::out_of_range unless 1 <= k <= n.
Rational partial_bell(unsigned n, unsigned k, const DerivativeSequence& psi);

/// Complete Bell polynomial, the sum of partial_bell(n, k, psi) over k.
Rational complete_bell(unsigned n, const DerivativeSequence& psi);

/// Same quantity as derivative_partition_sum, regrouped by the order of phi:
/// sum_k phi^{(k)} * B_{n,k}(psi).
Rational derivative_bell(const DerivativeSequence& phi, const DerivativeSequence& psi, unsigned n);

/// D^n(psi^m) / n! for integer m, from psi's value and derivatives:
///
///   sum over partitions of  m(m-1)...(m-p+1) / prod_j m_j!
///                           * psi^{m-p} * prod_j (psi^{(j)} / j!)^{m_j}
///
/// Terms whose falling factorial vanishes are skipped. Throws
/// std::invalid_argument if psi.base is missing, and std::domain_error when a
/// surviving term needs a negative power of psi.base == 0.
Rational lagrange_power_coefficient(const DerivativeSequence& psi, long m, unsigned n);

} // namespace faa
