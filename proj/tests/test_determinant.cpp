#include <doctest.h>

#include "faa/check.hpp"
#include "faa/determinant.hpp"
#include "faa/exact.hpp"
#include "oracles.hpp"

using faa::DerivativeSequence;
using faa::PhiPolynomial;
using faa::Rational;

namespace {

DerivativeSequence seq(std::initializer_list<long> values)
{
    DerivativeSequence s;
    for (long v : values) {
        s.derivs.emplace_back(v);
    }
    return s;
}

PhiPolynomial t_times(const Rational& c)
{
    return PhiPolynomial(c, 1);
}

} // namespace

TEST_CASE("phi polynomials drop zero coefficients")
{
    PhiPolynomial p(Rational(3), 2);
    p += PhiPolynomial(Rational(-3), 2);
    CHECK(p.is_zero());
    CHECK(PhiPolynomial(Rational(0), 4).is_zero());
    CHECK(p.to_string() == "0");

    const PhiPolynomial q = PhiPolynomial(Rational(8), 3) + PhiPolynomial(Rational(6), 2) + PhiPolynomial(Rational(1), 1);
    CHECK(q.to_string() == "8*Phi^3 + 6*Phi^2 + 1*Phi");
    CHECK((q - PhiPolynomial(Rational(10), 2)).to_string() == "8*Phi^3 - 4*Phi^2 + 1*Phi");
    CHECK(PhiPolynomial::constant(Rational(-1, 2)).to_string() == "-1/2");
    CHECK(q.degree() == 3);
    CHECK(q.coefficient(2) == Rational(6));
    CHECK(q.coefficient(5) == Rational(0));
}

TEST_CASE("interpretation reads exponents as derivation orders")
{
    const PhiPolynomial q = PhiPolynomial(Rational(8), 3) + PhiPolynomial(Rational(6), 2) + PhiPolynomial(Rational(1), 1);
    CHECK(q.interpret(seq({1, 10, 100})) == Rational(800 + 60 + 1));
    CHECK_THROWS_AS((void)q.interpret(seq({1, 10})), faa::sequence_too_short);
    CHECK_THROWS_AS((void)PhiPolynomial::constant(Rational(1)).interpret(seq({1})), std::invalid_argument);
}

TEST_CASE("the 3x3 matrix printed for the third derivative")
{
    const Rational d1(2, 3);
    const Rational d2(-5);
    const Rational d3(7, 11);
    const DerivativeSequence psi{std::nullopt, {d1, d2, d3}};
    const auto m = faa::build_matrix(psi, 2);
    REQUIRE(m.size() == 3);
    const PhiPolynomial minus_one = PhiPolynomial::constant(Rational(-1));
    // [[psi''' T, psi' T, 2 psi'' T], [psi'' T, -1, psi' T], [psi' T, 0, -1]]
    CHECK(m.entry(1, 1) == t_times(d3));
    CHECK(m.entry(1, 2) == t_times(d1));
    CHECK(m.entry(1, 3) == t_times(Rational(2) * d2));
    CHECK(m.entry(2, 1) == t_times(d2));
    CHECK(m.entry(2, 2) == minus_one);
    CHECK(m.entry(2, 3) == t_times(d1));
    CHECK(m.entry(3, 1) == t_times(d1));
    CHECK(m.entry(3, 2).is_zero());
    CHECK(m.entry(3, 3) == minus_one);
}

TEST_CASE("matrix weights follow the binomial family")
{
    const auto m = faa::build_matrix(seq({1, 1, 1, 1, 1}), 4);
    CHECK(m.entry(2, 5).coefficient(1) == Rational(3));
    CHECK(m.entry(1, 5).coefficient(1) == Rational(4));
    CHECK(m.entry(1, 4).coefficient(1) == Rational(6));
    CHECK(m.entry(4, 5).coefficient(1) == Rational(1));
}

TEST_CASE("matrix structure holds for every order")
{
    faa::CaseGenerator gen(41);
    for (unsigned n = 0; n <= 10; ++n) {
        const auto psi = gen.sequence(n + 1, false);
        const auto m = faa::build_matrix(psi, n);
        const unsigned size = n + 1;
        for (unsigned r = 1; r <= size; ++r) {
            CHECK(m.entry(r, 1) == t_times(psi[n + 2 - r]));
            if (r >= 2) {
                CHECK(m.entry(r, r) == PhiPolynomial::constant(Rational(-1)));
            }
            for (unsigned c = 2; c < r; ++c) {
                CHECK(m.entry(r, c).is_zero());
            }
            for (unsigned c = r + 1; c <= size; ++c) {
                CHECK(m.entry(r, c) == t_times(faa::binomial(n - r + 1, static_cast<long>(c - r) - 1) * psi[c - r]));
            }
        }
    }
    CHECK_THROWS_AS(faa::build_matrix(seq({1, 2}), 2), faa::sequence_too_short);
}

TEST_CASE("expansion: worked values")
{
    // Only the psi'^3 term survives.
    const auto lone = faa::determinant_expand(faa::build_matrix(seq({1, 0, 0}), 2));
    CHECK(lone == PhiPolynomial(Rational(1), 3));

    const auto base = faa::build_matrix(seq({5}), 0);
    CHECK(base.size() == 1);
    CHECK(faa::determinant_expand(base) == t_times(Rational(5)));

    const auto p = faa::determinant_expand(faa::build_matrix(seq({2, 1, 1}), 2));
    CHECK(p.to_string() == "8*Phi^3 + 6*Phi^2 + 1*Phi");
}

TEST_CASE("expansion equals the Leibniz sum")
{
    faa::CaseGenerator gen(43);
    for (unsigned n = 0; n <= 6; ++n) {
        for (int t = 0; t < 5; ++t) {
            const auto m = faa::build_matrix(gen.sequence(n + 1, false), n);
            CHECK(faa::determinant_expand(m) == faa::oracle::leibniz_determinant(m));
        }
    }
}

TEST_CASE("raw determinant carries the (-1)^n sign and degree bound")
{
    faa::CaseGenerator gen(47);
    for (unsigned n = 1; n <= 10; ++n) {
        const auto phi = gen.sequence(n + 1, false);
        const auto psi = gen.sequence(n + 1, false);
        const auto poly = faa::determinant_expand(faa::build_matrix(psi, n));
        for (const auto& [p, c] : poly.terms()) {
            CHECK(p >= 1);
            CHECK(p <= n + 1);
        }
        const Rational raw = poly.interpret(phi);
        const Rational expected = faa::derivative_partition_sum(phi, psi, n + 1);
        CHECK(raw == (n % 2 == 0 ? expected : -expected));
    }
}

TEST_CASE("determinant route")
{
    CHECK(faa::derivative_determinant(seq({1, 1, 1}), seq({2, 1, 1}), 3) == Rational(15));

    const Rational c(-4, 3);
    const DerivativeSequence linear{std::nullopt, {c, Rational(0), Rational(0)}};
    const auto phi = seq({2, -3, 9});
    CHECK(faa::derivative_determinant(phi, linear, 3) == phi[3] * faa::pow(c, 3));

    const auto psi = seq({6, -1});
    CHECK(faa::derivative_determinant(seq({1, 0}), psi, 2) == psi[2]);

    CHECK_THROWS_AS(faa::derivative_determinant(seq({1}), seq({1}), 1), std::out_of_range);
    CHECK_THROWS_AS(faa::derivative_determinant(seq({1, 1}), seq({1}), 2), faa::sequence_too_short);

    faa::CaseGenerator gen(53);
    for (unsigned order = 2; order <= 11; ++order) {
        for (int t = 0; t < 100; ++t) {
            const auto a = gen.sequence(order, false);
            const auto b = gen.sequence(order, false);
            CHECK(faa::derivative_determinant(a, b, order) == faa::derivative_partition_sum(a, b, order));
        }
    }
}
