#pragma once

#include <stdexcept>
#include <vector>

#include "faa/composition.hpp"
#include "faa/rational.hpp"

namespace faa {

/// Truncated Taylor polynomial c_0 + c_1 t + ... + c_N t^N. The coefficient
/// c_k is the k-th derivative at the expansion point divided by k!.
class Jet {
public:
    /// The zero jet of the given order.
    explicit Jet(unsigned order) : coeffs_(order + 1) {}
    /// Throws std::invalid_argument for an empty coefficient list.
    explicit Jet(std::vector<Rational> coeffs);

    /// 1 + 0 t + ... at the given order.
    static Jet one(unsigned order);
    /// The jet of t itself (order >= 1).
    static Jet variable(unsigned order);

    [[nodiscard]] unsigned order() const { return static_cast<unsigned>(coeffs_.size() - 1); }
    [[nodiscard]] const Rational& operator[](unsigned k) const { return coeffs_.at(k); }
    [[nodiscard]] const std::vector<Rational>& coeffs() const { return coeffs_; }
    [[nodiscard]] bool is_centered() const { return coeffs_.front().is_zero(); }

    friend bool operator==(const Jet&, const Jet&) = default;

private:
    std::vector<Rational> coeffs_;
};

class order_mismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Coefficient-wise sum; orders must match.
Jet jet_add(const Jet& a, const Jet& b);

/// Cauchy product truncated at the common order.
Jet jet_mul(const Jet& a, const Jet& b);

/// outer(inner(t)) truncated at the common order, by Horner's scheme. The
/// inner jet must be centered (zero constant term) because outer is
/// expanded about inner's value. Throws std::invalid_argument otherwise.
Jet jet_compose(const Jet& outer, const Jet& inner);

/// c_0 = base (0 when absent), c_k = derivs[k] / k! for k = 1..order. Throws
/// sequence_too_short when seq has fewer than `order` derivatives.
Jet jet_from_derivatives(const DerivativeSequence& seq, unsigned order);

/// Inverse of jet_from_derivatives: base = c_0, derivs[k] = k! c_k.
DerivativeSequence derivatives_from_jet(const Jet& jet);

/// D^n(phi o psi) read off the composed jets: n! [t^n] phi_jet(psi_jet - psi(y0)).
Rational derivative_series(const DerivativeSequence& phi, const DerivativeSequence& psi, unsigned n);

} // namespace faa
