#include <doctest.h>

#include <algorithm>
#include <set>

#include "faa/partitions.hpp"
#include "oracles.hpp"

using faa::MultiplicityVector;
using faa::Rational;

namespace {

std::vector<std::vector<unsigned>> as_raw(const std::vector<MultiplicityVector>& v)
{
    std::vector<std::vector<unsigned>> out;
    for (const auto& mvec : v) {
        out.push_back(mvec.multiplicities());
    }
    return out;
}

} // namespace

TEST_CASE("multiplicity vectors validate their constraint")
{
    CHECK_NOTHROW(MultiplicityVector(4, {2, 1, 0, 0}));
    CHECK_THROWS_AS(MultiplicityVector(4, {1, 1, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(MultiplicityVector(4, {2, 1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(MultiplicityVector(0, {}), std::invalid_argument);
    CHECK(MultiplicityVector(4, {2, 1, 0, 0}).largest_part() == 2);
    CHECK_THROWS_AS(faa::enumerate_multiplicity_vectors(0), std::invalid_argument);
}

TEST_CASE("enumeration of small orders")
{
    const auto one = faa::enumerate_multiplicity_vectors(1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].multiplicities() == std::vector<unsigned>{1});

    // Same set as the hypercube scan, in the canonical order: decreasing
    // lexicographically on (m_n, ..., m_1).
    const auto four = as_raw(faa::enumerate_multiplicity_vectors(4));
    const std::vector<std::vector<unsigned>> expected{
        {0, 0, 0, 1}, {1, 0, 1, 0}, {0, 2, 0, 0}, {2, 1, 0, 0}, {4, 0, 0, 0}};
    CHECK(four == expected);
    auto brute = faa::oracle::hypercube_partitions(4);
    auto sorted = four;
    std::sort(brute.begin(), brute.end());
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == brute);
}

TEST_CASE("enumeration matches the hypercube scan for n <= 7")
{
    for (unsigned n = 1; n <= 7; ++n) {
        auto got = as_raw(faa::enumerate_multiplicity_vectors(n));
        auto brute = faa::oracle::hypercube_partitions(n);
        std::sort(got.begin(), got.end());
        std::sort(brute.begin(), brute.end());
        CHECK(got == brute);
    }
}

TEST_CASE("enumeration is complete, duplicate free and canonically ordered")
{
    const auto counts = faa::oracle::partition_counts(20);
    CHECK(counts[10] == 42);
    CHECK(counts[20] == 627);
    for (unsigned n = 1; n <= 20; ++n) {
        const auto list = faa::enumerate_multiplicity_vectors(n);
        CHECK(list.size() == counts[n]);
        std::set<std::vector<unsigned>> seen;
        for (std::size_t i = 0; i < list.size(); ++i) {
            const auto& m = list[i].multiplicities();
            unsigned weight = 0;
            for (unsigned j = 1; j <= n; ++j) {
                weight += j * m[j - 1];
            }
            CHECK(weight == n);
            const unsigned p = faa::total_order(list[i]);
            CHECK(p >= 1);
            CHECK(p <= n);
            CHECK(seen.insert(m).second);
            if (i > 0) {
                const auto& prev = list[i - 1].multiplicities();
                CHECK(std::lexicographical_compare(m.rbegin(), m.rend(), prev.rbegin(), prev.rend()));
            }
        }
    }
}

TEST_CASE("total order")
{
    CHECK(faa::total_order(MultiplicityVector(3, {3, 0, 0})) == 3);
    CHECK(faa::total_order(MultiplicityVector(3, {0, 0, 1})) == 1);
    CHECK(faa::total_order(MultiplicityVector(4, {2, 1, 0, 0})) == 3);
}

TEST_CASE("coefficients")
{
    CHECK(faa::faa_coefficient(MultiplicityVector(3, {0, 0, 1})) == Rational(1));
    CHECK(faa::faa_coefficient(MultiplicityVector(4, {2, 1, 0, 0})) == Rational(6));
    CHECK(faa::faa_coefficient(MultiplicityVector(3, {1, 1, 0})) == Rational(3));
    for (unsigned n = 1; n <= 12; ++n) {
        CHECK(faa::faa_coefficient(MultiplicityVector(n, [n] {
                  std::vector<unsigned> m(n, 0);
                  m[n - 1] = 1;
                  return m;
              }())) == Rational(1));
    }
}

TEST_CASE("coefficients match the formal chain-rule expansion")
{
    for (unsigned n = 1; n <= 10; ++n) {
        const auto expansion = faa::oracle::formal_chain_rule(n);
        const auto list = faa::enumerate_multiplicity_vectors(n);
        CHECK(expansion.size() == list.size());
        for (const auto& mvec : list) {
            faa::oracle::FormalMonomial key{faa::total_order(mvec), std::vector<unsigned>(n + 1, 0)};
            for (unsigned j = 1; j <= n; ++j) {
                key.psi_exponents[j - 1] = mvec[j];
            }
            const auto it = expansion.find(key);
            REQUIRE(it != expansion.end());
            const Rational c = faa::faa_coefficient(mvec);
            CHECK(c.is_integer());
            CHECK(c.sign() > 0);
            CHECK(c == Rational(mpz_class(static_cast<unsigned long>(it->second))));
        }
    }
}

TEST_CASE("coefficients sum to the Bell numbers")
{
    const std::vector<long> bell{1, 2, 5, 15, 52, 203};
    for (unsigned n = 1; n <= 6; ++n) {
        Rational sum(0);
        for (const auto& mvec : faa::enumerate_multiplicity_vectors(n)) {
            sum += faa::faa_coefficient(mvec);
        }
        CHECK(sum == Rational(bell[n - 1]));
        CHECK(static_cast<long>(faa::oracle::bell_number(n)) == bell[n - 1]);
    }
}
