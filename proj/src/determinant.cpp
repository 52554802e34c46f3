#include "faa/determinant.hpp"

#include <sstream>

#include "faa/exact.hpp"

namespace faa {

PhiPolynomial::PhiPolynomial(Rational coefficient, unsigned exponent)
{
    add_term(exponent, coefficient);
}

void PhiPolynomial::add_term(unsigned exponent, const Rational& c)
{
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

Rational PhiPolynomial::coefficient(unsigned exponent) const
{
    const auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
}

unsigned PhiPolynomial::degree() const
{
    return terms_.empty() ? 0 : terms_.rbegin()->first;
}

Rational PhiPolynomial::interpret(const DerivativeSequence& phi) const
{
    Rational sum(0);
    for (const auto& [p, c] : terms_) {
        if (p == 0) {
            if (!phi.base) {
                throw std::invalid_argument("constant term needs the value of phi");
            }
            sum += c * *phi.base;
            continue;
        }
        require_order(phi, p, "phi");
        sum += c * phi[p];
    }
    return sum;
}

std::string PhiPolynomial::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [p, c] = *it;
        if (first) {
            os << c;
        } else {
            os << (c.sign() < 0 ? " - " : " + ") << (c.sign() < 0 ? -c : c);
        }
        first = false;
        if (p == 1) {
            os << "*Phi";
        } else if (p > 1) {
            os << "*Phi^" << p;
        }
    }
    return os.str();
}

PhiPolynomial& PhiPolynomial::operator+=(const PhiPolynomial& rhs)
{
    for (const auto& [p, c] : rhs.terms_) {
        add_term(p, c);
    }
    return *this;
}

PhiPolynomial& PhiPolynomial::operator-=(const PhiPolynomial& rhs)
{
    for (const auto& [p, c] : rhs.terms_) {
        add_term(p, -c);
    }
    return *this;
}

PhiPolynomial operator*(const PhiPolynomial& a, const PhiPolynomial& b)
{
    PhiPolynomial out;
    for (const auto& [pa, ca] : a.terms_) {
        for (const auto& [pb, cb] : b.terms_) {
            out.add_term(pa + pb, ca * cb);
        }
    }
    return out;
}

PhiPolynomial operator-(const PhiPolynomial& a)
{
    PhiPolynomial out;
    for (const auto& [p, c] : a.terms_) {
        out.terms_.emplace(p, -c);
    }
    return out;
}

FaaMatrix build_matrix(const DerivativeSequence& psi, unsigned n)
{
    require_order(psi, n + 1, "psi");
    FaaMatrix m(n);
    const unsigned size = n + 1;
    for (unsigned r = 1; r <= size; ++r) {
        m.entry(r, 1) = PhiPolynomial(psi[n + 2 - r], 1);
        if (r >= 2) {
            m.entry(r, r) = PhiPolynomial::constant(Rational(-1));
        }
        for (unsigned c = r + 1; c <= size; ++c) {
            const Rational weight = binomial(n - r + 1, static_cast<long>(c - r) - 1);
            m.entry(r, c) = PhiPolynomial(weight * psi[c - r], 1);
        }
    }
    return m;
}

PhiPolynomial determinant_expand(const FaaMatrix& matrix)
{
    const unsigned size = matrix.size();

    // top[k] = det A_k
    std::vector<PhiPolynomial> top;
    top.reserve(size);
    top.push_back(PhiPolynomial::constant(Rational(1)));
    for (unsigned k = 1; k < size; ++k) {
        PhiPolynomial acc;
        for (unsigned i = 1; i <= k; ++i) {
            const auto& e = matrix.entry(i, k + 1);
            if (!e.is_zero()) {
                acc += e * top[i - 1];
            }
        }
        top.push_back(std::move(acc));
    }

    PhiPolynomial det;
    for (unsigned r = 1; r <= size; ++r) {
        det += matrix.entry(r, 1) * top[r - 1];
    }
    return matrix.n() % 2 == 0 ? det : -det;
}

Rational derivative_determinant(const DerivativeSequence& phi, const DerivativeSequence& psi, unsigned order)
{
    if (order < 2) {
        throw std::out_of_range("determinant form starts at order 2, got " + std::to_string(order));
    }
    require_order(phi, order, "phi");
    require_order(psi, order, "psi");
    const unsigned n = order - 1;
    const Rational raw = determinant_expand(build_matrix(psi, n)).interpret(phi);
    return n % 2 == 0 ? raw : -raw;
}

} // namespace faa
