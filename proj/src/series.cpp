#include "faa/series.hpp"

#include <string>

#include "faa/exact.hpp"

namespace faa {

namespace {

void require_same_order(const Jet& a, const Jet& b)
{
    if (a.order() != b.order()) {
        throw order_mismatch("jet orders differ: " + std::to_string(a.order()) + " vs " +
                             std::to_string(b.order()));
    }
}

} // namespace

Jet::Jet(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) {
        throw std::invalid_argument("jet needs at least a constant coefficient");
    }
}

Jet Jet::one(unsigned order)
{
    Jet j(order);
    j.coeffs_[0] = Rational(1);
    return j;
}

Jet Jet::variable(unsigned order)
{
    if (order == 0) {
        throw std::invalid_argument("the variable jet needs order >= 1");
    }
    Jet j(order);
    j.coeffs_[1] = Rational(1);
    return j;
}

Jet jet_add(const Jet& a, const Jet& b)
{
    require_same_order(a, b);
    std::vector<Rational> out(a.coeffs());
    for (unsigned k = 0; k <= a.order(); ++k) {
        out[k] += b[k];
    }
    return Jet(std::move(out));
}

Jet jet_mul(const Jet& a, const Jet& b)
{
    require_same_order(a, b);
    const unsigned order = a.order();
    std::vector<Rational> out(order + 1);
    for (unsigned i = 0; i <= order; ++i) {
        if (a[i].is_zero()) {
            continue;
        }
        for (unsigned j = 0; i + j <= order; ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return Jet(std::move(out));
}

Jet jet_compose(const Jet& outer, const Jet& inner)
{
    require_same_order(outer, inner);
    if (!inner.is_centered()) {
        throw std::invalid_argument("inner jet must have a zero constant term, got " + inner[0].to_string());
    }
    const unsigned order = outer.order();
    std::vector<Rational> top(order + 1);
    top[0] = outer[order];
    Jet acc(std::move(top));
    for (unsigned k = order; k-- > 0;) {
        acc = jet_mul(acc, inner);
        std::vector<Rational> shifted(acc.coeffs());
        shifted[0] += outer[k];
        acc = Jet(std::move(shifted));
    }
    return acc;
}

Jet jet_from_derivatives(const DerivativeSequence& seq, unsigned order)
{
    require_order(seq, order, "sequence");
    std::vector<Rational> coeffs(order + 1);
    coeffs[0] = seq.base.value_or(Rational(0));
    for (unsigned k = 1; k <= order; ++k) {
        coeffs[k] = seq[k] / factorial(k);
    }
    return Jet(std::move(coeffs));
}

DerivativeSequence derivatives_from_jet(const Jet& jet)
{
    DerivativeSequence seq;
    seq.base = jet[0];
    seq.derivs.reserve(jet.order());
    for (unsigned k = 1; k <= jet.order(); ++k) {
        seq.derivs.push_back(factorial(k) * jet[k]);
    }
    return seq;
}

Rational derivative_series(const DerivativeSequence& phi, const DerivativeSequence& psi, unsigned n)
{
    if (n == 0) {
        throw std::out_of_range("derivative order must be positive");
    }
    require_order(phi, n, "phi");
    require_order(psi, n, "psi");

    DerivativeSequence phi_tail{std::nullopt, {phi.derivs.begin(), phi.derivs.begin() + n}};
    DerivativeSequence psi_centered{std::nullopt, {psi.derivs.begin(), psi.derivs.begin() + n}};
    const Jet composed = jet_compose(jet_from_derivatives(phi_tail, n), jet_from_derivatives(psi_centered, n));
    return factorial(n) * composed[n];
}

} // namespace faa
