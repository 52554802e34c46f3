#include "faa/partitions.hpp"

#include <numeric>
#include <string>

#include "faa/exact.hpp"

namespace faa {

MultiplicityVector::MultiplicityVector(unsigned n, std::vector<unsigned> m) : n_(n), m_(std::move(m))
{
    if (n_ == 0) {
        throw std::invalid_argument("partition order must be positive");
    }
    if (m_.size() != n_) {
        throw std::invalid_argument("multiplicity vector of length " + std::to_string(m_.size()) +
                                    " for order " + std::to_string(n_));
    }
    unsigned long weighted = 0;
    for (unsigned j = 1; j <= n_; ++j) {
        weighted += static_cast<unsigned long>(j) * m_[j - 1];
    }
    if (weighted != n_) {
        throw std::invalid_argument("multiplicities weigh " + std::to_string(weighted) + ", expected " +
                                    std::to_string(n_));
    }
}

unsigned MultiplicityVector::largest_part() const
{
    for (unsigned j = n_; j >= 1; --j) {
        if (m_[j - 1] != 0) {
            return j;
        }
    }
    return 0; // unreachable for a valid vector
}

namespace {

// Fills m[part-1], m[part-2], ..., m[0] so that they weigh `remaining`,
// trying larger multiplicities of the current part first.
void descend(unsigned n, unsigned part, unsigned remaining, std::vector<unsigned>& m,
             std::vector<MultiplicityVector>& out)
{
    if (remaining == 0) {
        out.emplace_back(n, m);
        return;
    }
    if (part == 1) {
        m[0] = remaining;
        out.emplace_back(n, m);
        m[0] = 0;
        return;
    }
    for (unsigned count = remaining / part + 1; count-- > 0;) {
        m[part - 1] = count;
        descend(n, part - 1, remaining - count * part, m, out);
    }
    m[part - 1] = 0;
}

} // namespace

std::vector<MultiplicityVector> enumerate_multiplicity_vectors(unsigned n)
{
    if (n == 0) {
        throw std::invalid_argument("partition order must be positive");
    }
    std::vector<MultiplicityVector> out;
    std::vector<unsigned> m(n, 0);
    descend(n, n, n, m, out);
    return out;
}

unsigned total_order(const MultiplicityVector& mvec)
{
    const auto& m = mvec.multiplicities();
    return std::accumulate(m.begin(), m.end(), 0U);
}

Rational faa_coefficient(const MultiplicityVector& mvec)
{
    Rational denominator(1);
    for (unsigned j = 1; j <= mvec.order(); ++j) {
        const unsigned mj = mvec[j];
        if (mj == 0) {
            continue;
        }
        denominator *= factorial(mj) * pow(factorial(j), mj);
    }
    return factorial(mvec.order()) / denominator;
}

} // namespace faa
