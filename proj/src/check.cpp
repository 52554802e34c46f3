#include "faa/check.hpp"

#include "faa/determinant.hpp"
#include "faa/exact.hpp"
#include "faa/series.hpp"

namespace faa {

Rational CaseGenerator::rational()
{
    const auto num = static_cast<long>(engine_() % 21) - 10;
    const auto den = static_cast<long>(engine_() % 9) + 1;
    return Rational(num, den);
}

Rational CaseGenerator::nonzero_rational()
{
    for (;;) {
        Rational r = rational();
        if (!r.is_zero()) {
            return r;
        }
    }
}

DerivativeSequence CaseGenerator::sequence(unsigned length, bool with_base)
{
    DerivativeSequence seq;
    if (with_base) {
        seq.base = rational();
    }
    seq.derivs.reserve(length);
    for (unsigned k = 0; k < length; ++k) {
        seq.derivs.push_back(rational());
    }
    return seq;
}

Expr taylor_polynomial(const DerivativeSequence& seq, const Rational& center, char variable)
{
    const Expr shifted = center.is_zero() ? Expr::variable(variable)
                                          : Expr::add(Expr::variable(variable), Expr::neg(Expr::constant(center)));
    Expr acc = Expr::constant(seq.base.value_or(Rational(0)));
    for (unsigned k = 1; k <= seq.size(); ++k) {
        if (seq[k].is_zero()) {
            continue;
        }
        Expr term = Expr::mul(Expr::constant(seq[k] / factorial(k)), Expr::pow(shifted, k));
        acc = Expr::add(std::move(acc), std::move(term));
    }
    return acc;
}

CheckCase CaseGenerator::next_case(unsigned n)
{
    Rational at = rational();
    DerivativeSequence psi = sequence(n, true);
    DerivativeSequence phi = sequence(n, true);
    Expr psi_expr = taylor_polynomial(psi, at, 'y');
    Expr phi_expr = taylor_polynomial(phi, *psi.base, 'x');
    return CheckCase{n, std::move(at), std::move(phi), std::move(psi), std::move(phi_expr), std::move(psi_expr)};
}

std::vector<Route> default_routes()
{
    return {
        {"partition", 1, [](const CheckCase& c) { return derivative_partition_sum(c.phi, c.psi, c.n); }},
        {"bell", 1, [](const CheckCase& c) { return derivative_bell(c.phi, c.psi, c.n); }},
        {"determinant", 2, [](const CheckCase& c) { return derivative_determinant(c.phi, c.psi, c.n); }},
        {"series", 1, [](const CheckCase& c) { return derivative_series(c.phi, c.psi, c.n); }},
        {"symbolic", 1,
         [](const CheckCase& c) { return nth_derivative_of_composition(c.phi_expr, c.psi_expr, c.n, c.at); }},
    };
}

std::vector<RouteValue> evaluate_routes(const CheckCase& input, const std::vector<Route>& routes)
{
    std::vector<RouteValue> values;
    for (const auto& route : routes) {
        if (input.n >= route.min_order) {
            values.push_back({route.name, route.evaluate(input)});
        }
    }
    return values;
}

CheckResult run_check(unsigned max_n, unsigned trials, std::uint64_t seed, const std::vector<Route>& routes)
{
    CheckResult result;
    CaseGenerator gen(seed);
    for (unsigned n = 1; n <= max_n; ++n) {
        OrderSummary summary{n, 0, 0};
        for (unsigned t = 0; t < trials; ++t) {
            CheckCase input = gen.next_case(n);
            auto values = evaluate_routes(input, routes);
            summary.routes = static_cast<unsigned>(values.size());
            for (const auto& v : values) {
                if (v.value != values.front().value) {
                    result.orders.push_back(summary);
                    result.disagreement = Disagreement{std::move(input), std::move(values)};
                    return result;
                }
            }
            ++summary.trials;
        }
        result.orders.push_back(summary);
    }
    return result;
}

} // namespace faa
