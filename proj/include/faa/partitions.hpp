#pragma once

#include <stdexcept>
#include <vector>

#include "faa/rational.hpp"

namespace faa {

/// One integer partition of n in multiplicity form: m[j-1] counts the parts
/// of size j, so that sum_j j * m[j-1] == n.
class MultiplicityVector {
public:
    /// Throws std::invalid_argument if n == 0, m.size() != n, or the
    /// weighted sum differs from n.
    MultiplicityVector(unsigned n, std::vector<unsigned> m);

    [[nodiscard]] unsigned order() const { return n_; }
    [[nodiscard]] const std::vector<unsigned>& multiplicities() const { return m_; }
    /// Multiplicity of parts of size j, 1 <= j <= n.
    [[nodiscard]] unsigned operator[](unsigned j) const { return m_.at(j - 1); }
    /// Largest part size present.
    [[nodiscard]] unsigned largest_part() const;

    friend bool operator==(const MultiplicityVector&, const MultiplicityVector&) = default;

private:
    unsigned n_;
    std::vector<unsigned> m_;
};

/// Every partition of n exactly once, ordered lexicographically decreasing in
/// (m_n, m_{n-1}, ..., m_1): the single-part partition comes first and the
/// all-ones partition last. Throws std::invalid_argument for n == 0.
std::vector<MultiplicityVector> enumerate_multiplicity_vectors(unsigned n);

/// Number of parts, p = m_1 + ... + m_n. This is the derivative order of the
/// outer function attached to the partition's term.
unsigned total_order(const MultiplicityVector& mvec);

/// n! / (prod_j m_j! * prod_j (j!)^{m_j}); always a positive integer.
Rational faa_coefficient(const MultiplicityVector& mvec);

} // namespace faa
