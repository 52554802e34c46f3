#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "faa/composition.hpp"
#include "faa/rational.hpp"
#include "faa/symbolic.hpp"

namespace faa {

/// One randomized cross-route input: phi and psi both as derivative
/// sequences and as the Taylor polynomials that realize them.
///
/// psi(y)  = psi0 + sum_k psi^{(k)} / k! * (y - at)^k
/// phi(x)  = phi0 + sum_k phi^{(k)} / k! * (x - psi0)^k
struct CheckCase {
    unsigned n;
    Rational at;
    DerivativeSequence phi;
    DerivativeSequence psi;
    Expr phi_expr;
    Expr psi_expr;
};

/// Seeded source of small random rationals. The mapping from engine output
/// to values is fixed here, so a seed gives the same cases on every platform.
class CaseGenerator {
public:
    explicit CaseGenerator(std::uint64_t seed) : engine_(seed) {}

    /// Numerator in [-10, 10], denominator in [1, 9].
    Rational rational();
    /// Nonzero numerator.
    Rational nonzero_rational();
    DerivativeSequence sequence(unsigned length, bool with_base);
    CheckCase next_case(unsigned n);

private:
    std::mt19937_64 engine_;
};

/// The polynomial sum_{k=1..len} derivs[k] / k! * (v - center)^k, plus base
/// when present.
Expr taylor_polynomial(const DerivativeSequence& seq, const Rational& center, char variable);

struct Route {
    std::string name;
    unsigned min_order;
    std::function<Rational(const CheckCase&)> evaluate;
};

/// partition, bell, determinant (order >= 2), series, symbolic.
std::vector<Route> default_routes();

struct RouteValue {
    std::string route;
    Rational value;
};

struct Disagreement {
    CheckCase input;
    std::vector<RouteValue> values;
};

struct OrderSummary {
    unsigned n;
    unsigned trials;
    unsigned routes;
};

struct CheckResult {
    std::vector<OrderSummary> orders;
    std::optional<Disagreement> disagreement;

    [[nodiscard]] bool ok() const { return !disagreement.has_value(); }
};

/// Every applicable route on `input`, in route order.
std::vector<RouteValue> evaluate_routes(const CheckCase& input, const std::vector<Route>& routes);

/// Runs `trials` random cases for every order 1..max_n and stops at the
/// first case where two routes disagree.
CheckResult run_check(unsigned max_n, unsigned trials, std::uint64_t seed, const std::vector<Route>& routes);

} // namespace faa
