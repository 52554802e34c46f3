#include <doctest.h>

#include "faa/check.hpp"
#include "faa/exact.hpp"
#include "faa/series.hpp"

using faa::DerivativeSequence;
using faa::Jet;
using faa::Rational;

namespace {

Jet jet(std::initializer_list<long> coeffs)
{
    std::vector<Rational> c;
    for (long v : coeffs) {
        c.emplace_back(v);
    }
    return Jet(std::move(c));
}

Jet random_jet(faa::CaseGenerator& gen, unsigned order, bool centered)
{
    std::vector<Rational> c;
    for (unsigned k = 0; k <= order; ++k) {
        c.push_back(k == 0 && centered ? Rational(0) : gen.rational());
    }
    return Jet(std::move(c));
}

} // namespace

TEST_CASE("jet addition")
{
    CHECK(faa::jet_add(jet({1, 1}), jet({1, -1})) == jet({2, 0}));
    faa::CaseGenerator gen(61);
    const Jet a = random_jet(gen, 5, false);
    const Jet b = random_jet(gen, 5, false);
    CHECK(faa::jet_add(a, Jet(5)) == a);
    const Jet sum = faa::jet_add(a, b);
    for (unsigned k = 0; k <= 5; ++k) {
        CHECK(sum[k] == a[k] + b[k]);
    }
    CHECK_THROWS_AS(faa::jet_add(jet({1, 2}), jet({1, 2, 3})), faa::order_mismatch);
}

TEST_CASE("jet multiplication")
{
    CHECK(faa::jet_mul(jet({1, 1, 0}), jet({1, 1, 0})) == jet({1, 2, 1}));
    CHECK(faa::jet_mul(jet({1, 1, 1}), jet({1, -1, 0})) == jet({1, 0, 0}));
    faa::CaseGenerator gen(67);
    const Jet a = random_jet(gen, 6, false);
    CHECK(faa::jet_mul(a, Jet::one(6)) == a);
    CHECK_THROWS_AS(faa::jet_mul(jet({1}), jet({1, 2})), faa::order_mismatch);
}

TEST_CASE("jet ring laws on random operands")
{
    faa::CaseGenerator gen(71);
    for (int t = 0; t < 50; ++t) {
        const unsigned order = 1 + t % 8;
        const Jet a = random_jet(gen, order, false);
        const Jet b = random_jet(gen, order, false);
        const Jet c = random_jet(gen, order, false);
        CHECK(faa::jet_mul(a, b) == faa::jet_mul(b, a));
        CHECK(faa::jet_mul(a, faa::jet_add(b, c)) == faa::jet_add(faa::jet_mul(a, b), faa::jet_mul(a, c)));
    }
}

TEST_CASE("jet composition")
{
    // t^2 after t + t^2
    CHECK(faa::jet_compose(jet({0, 0, 1, 0, 0}), jet({0, 1, 1, 0, 0})) == jet({0, 0, 1, 2, 1}));

    faa::CaseGenerator gen(73);
    const Jet inner = random_jet(gen, 6, true);
    CHECK(faa::jet_compose(Jet::variable(6), inner) == inner);
    CHECK_THROWS_AS(faa::jet_compose(jet({0, 1}), jet({1, 1})), std::invalid_argument);
    CHECK_THROWS_AS(faa::jet_compose(jet({0, 1}), jet({0, 1, 0})), faa::order_mismatch);
}

TEST_CASE("jet composition is associative at the truncation order")
{
    faa::CaseGenerator gen(79);
    for (unsigned order = 1; order <= 8; ++order) {
        for (int t = 0; t < 5; ++t) {
            const Jet a = random_jet(gen, order, false);
            const Jet b = random_jet(gen, order, true);
            const Jet c = random_jet(gen, order, true);
            CHECK(faa::jet_compose(faa::jet_compose(a, b), c) == faa::jet_compose(a, faa::jet_compose(b, c)));
        }
    }
}

TEST_CASE("conversion between derivatives and jets")
{
    const DerivativeSequence s{std::nullopt, {Rational(2), Rational(6)}};
    CHECK(faa::jet_from_derivatives(s, 2) == jet({0, 2, 3}));

    DerivativeSequence factorials;
    for (unsigned k = 1; k <= 6; ++k) {
        factorials.derivs.push_back(faa::factorial(k));
    }
    CHECK(faa::jet_from_derivatives(factorials, 6) == jet({0, 1, 1, 1, 1, 1, 1}));

    faa::CaseGenerator gen(83);
    for (unsigned n = 1; n <= 8; ++n) {
        const auto seq = gen.sequence(n, true);
        CHECK(faa::derivatives_from_jet(faa::jet_from_derivatives(seq, n)) == seq);
    }
    CHECK_THROWS_AS(faa::jet_from_derivatives(s, 3), faa::sequence_too_short);
}

TEST_CASE("series route matches the partition route")
{
    faa::CaseGenerator gen(89);
    for (unsigned n = 1; n <= 12; ++n) {
        for (int t = 0; t < 20; ++t) {
            const auto phi = gen.sequence(n, true);
            const auto psi = gen.sequence(n, true);
            CHECK(faa::derivative_series(phi, psi, n) == faa::derivative_partition_sum(phi, psi, n));
        }
    }
}
