#include "faa/composition.hpp"

#include "faa/exact.hpp"
#include "faa/partitions.hpp"

namespace faa {

sequence_too_short::sequence_too_short(std::string which, std::size_t required, std::size_t available)
    : std::invalid_argument(which + " needs derivatives up to order " + std::to_string(required) + ", got " +
                            std::to_string(available)),
      which_(std::move(which)), required_(required), available_(available)
{
}

void require_order(const DerivativeSequence& seq, std::size_t order, const char* which)
{
    if (seq.size() < order) {
        throw sequence_too_short(which, order, seq.size());
    }
}

namespace {

void require_positive(unsigned n)
{
    if (n == 0) {
        throw std::out_of_range("derivative order must be positive");
    }
}

// prod_j (psi^{(j)})^{m_j}
Rational psi_monomial(const MultiplicityVector& mvec, const DerivativeSequence& psi)
{
    Rational acc(1);
    for (unsigned j = 1; j <= mvec.order(); ++j) {
        if (const unsigned mj = mvec[j]; mj != 0) {
            acc *= pow(psi[j], mj);
        }
    }
    return acc;
}

} // namespace

Rational derivative_partition_sum(const DerivativeSequence& phi, const DerivativeSequence& psi, unsigned n)
{
    require_positive(n);
    require_order(phi, n, "phi");
    require_order(psi, n, "psi");

    Rational sum(0);
    for (const auto& mvec : enumerate_multiplicity_vectors(n)) {
        sum += faa_coefficient(mvec) * phi[total_order(mvec)] * psi_monomial(mvec, psi);
    }
    return sum;
}

Rational partial_bell(unsigned n, unsigned k, const DerivativeSequence& psi)
{
    if (n == 0 || k == 0 || k > n) {
        throw std::out_of_range("partial Bell polynomial needs 1 <= k <= n, got n=" + std::to_string(n) +
                                " k=" + std::to_string(k));
    }
    require_order(psi, n - k + 1, "psi");

    Rational sum(0);
    for (const auto& mvec : enumerate_multiplicity_vectors(n)) {
        if (total_order(mvec) == k) {
            sum += faa_coefficient(mvec) * psi_monomial(mvec, psi);
        }
    }
    return sum;
}

Rational complete_bell(unsigned n, const DerivativeSequence& psi)
{
    require_positive(n);
    Rational sum(0);
    for (unsigned k = 1; k <= n; ++k) {
        sum += partial_bell(n, k, psi);
    }
    return sum;
}

Rational derivative_bell(const DerivativeSequence& phi, const DerivativeSequence& psi, unsigned n)
{
    require_positive(n);
    require_order(phi, n, "phi");
    require_order(psi, n, "psi");

    Rational sum(0);
    for (unsigned k = 1; k <= n; ++k) {
        if (phi[k].is_zero()) {
            continue;
        }
        sum += phi[k] * partial_bell(n, k, psi);
    }
    return sum;
}

Rational lagrange_power_coefficient(const DerivativeSequence& psi, long m, unsigned n)
{
    require_positive(n);
    if (!psi.base) {
        throw std::invalid_argument("power coefficient needs the value of psi at the expansion point");
    }
    require_order(psi, n, "psi");
    const Rational& value = *psi.base;

    Rational sum(0);
    for (const auto& mvec : enumerate_multiplicity_vectors(n)) {
        const unsigned p = total_order(mvec);
        const Rational falling = falling_factorial(m, p);
        if (falling.is_zero()) {
            continue;
        }
        const long exponent = m - static_cast<long>(p);
        if (exponent < 0 && value.is_zero()) {
            throw std::domain_error("term with p=" + std::to_string(p) + " needs psi^" + std::to_string(exponent) +
                                    " but psi vanishes at the expansion point");
        }
        Rational term = falling * pow(value, exponent);
        for (unsigned j = 1; j <= n; ++j) {
            if (const unsigned mj = mvec[j]; mj != 0) {
                term *= pow(psi[j] / factorial(j), mj) / factorial(mj);
            }
        }
        sum += term;
    }
    return sum;
}

} // namespace faa
