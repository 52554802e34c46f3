#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "faa/composition.hpp"
#include "faa/rational.hpp"

namespace faa {

struct ExprNode;

/// Immutable polynomial expression in one variable. Subtrees are shared.
class Expr {
public:
    struct Constant;
    struct Variable;
    struct Add;
    struct Mul;
    struct Pow;
    struct Neg;
    using Node = std::variant<Constant, Variable, Add, Mul, Pow, Neg>;

    static Expr constant(Rational value);
    static Expr variable(char name = 'x');
    static Expr add(Expr lhs, Expr rhs);
    static Expr mul(Expr lhs, Expr rhs);
    static Expr pow(Expr base, unsigned exponent);
    static Expr neg(Expr operand);

    [[nodiscard]] const Node& node() const;

    /// The node as alternative T, or nullptr.
    template <typename T>
    [[nodiscard]] const T* as() const;

    /// Structural equality, including variable names.
    friend bool operator==(const Expr& a, const Expr& b);

private:
    explicit Expr(std::shared_ptr<const ExprNode> node) : node_(std::move(node)) {}

    std::shared_ptr<const ExprNode> node_;
};

struct Expr::Constant {
    Rational value;
};
struct Expr::Variable {
    char name = 'x';
};
struct Expr::Add {
    Expr lhs;
    Expr rhs;
};
struct Expr::Mul {
    Expr lhs;
    Expr rhs;
};
struct Expr::Pow {
    Expr base;
    unsigned exponent;
};
struct Expr::Neg {
    Expr operand;
};

struct ExprNode {
    Expr::Node value;
};

template <typename T>
const T* Expr::as() const
{
    return std::get_if<T>(&node());
}

/// Syntax error with the byte offset where parsing stopped and the tokens
/// that would have been accepted there.
class parse_error : public std::invalid_argument {
public:
    parse_error(std::size_t offset, std::vector<std::string> expected, const std::string& detail);

    [[nodiscard]] std::size_t offset() const { return offset_; }
    [[nodiscard]] const std::vector<std::string>& expected() const { return expected_; }

private:
    std::size_t offset_;
    std::vector<std::string> expected_;
};

struct ParseOptions {
    std::size_t max_depth = 256;
};

/// Parses the polynomial grammar
///
///   expr   := term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' UINT)?
///   base   := RATIONAL | VAR | '(' expr ')' | '-' factor
///
/// with RATIONAL := UINT ('/' UINT)? and VAR := 'x' | 'y'. Sums and products
/// associate to the left and "a - b" becomes Add(a, Neg(b)). A power binds
/// tighter than a leading minus, and "a^2^3" is rejected. One expression may
/// use only one of the two variable names.
Expr parse(std::string_view text, const ParseOptions& options = {});

/// Text that parses back to a structurally equal tree.
std::string to_string(const Expr& e);

/// Longest root-to-leaf path, counting nodes.
std::size_t depth(const Expr& e);

/// d/dvar, with constant folding only (identities of 0 and 1, literal
/// arithmetic on constants).
Expr differentiate(const Expr& e);

Rational evaluate(const Expr& e, const Rational& at);

/// e with every variable replaced by `replacement`.
Expr substitute(const Expr& e, const Expr& replacement);

/// Coefficients c_0..c_d of e written as sum_k c_k v^k (trailing zeros
/// dropped; the zero polynomial is empty).
std::vector<Rational> expand_polynomial(const Expr& e);

/// sum_k c_k * v^k as a left-leaning sum of monomials, skipping zeros.
Expr from_polynomial(const std::vector<Rational>& coeffs, char variable = 'y');

/// D^n of phi(psi(y)) at y = at, by substituting psi into phi, collecting the
/// result into one polynomial in y and differentiating it n times.
Rational nth_derivative_of_composition(const Expr& phi, const Expr& psi, unsigned n, const Rational& at);

/// base = e(at), derivs[k] = e^{(k)}(at) for k = 1..n.
DerivativeSequence derivative_sequence_of(const Expr& e, const Rational& at, unsigned n);

} // namespace faa
