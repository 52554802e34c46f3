#include "faa/symbolic.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace faa {

// ---------------------------------------------------------------------------
// Expr
// ---------------------------------------------------------------------------

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

} // namespace

Expr Expr::constant(Rational value)
{
    return Expr(std::make_shared<const ExprNode>(ExprNode{Constant{std::move(value)}}));
}

Expr Expr::variable(char name)
{
    return Expr(std::make_shared<const ExprNode>(ExprNode{Variable{name}}));
}

Expr Expr::add(Expr lhs, Expr rhs)
{
    return Expr(std::make_shared<const ExprNode>(ExprNode{Add{std::move(lhs), std::move(rhs)}}));
}

Expr Expr::mul(Expr lhs, Expr rhs)
{
    return Expr(std::make_shared<const ExprNode>(ExprNode{Mul{std::move(lhs), std::move(rhs)}}));
}

Expr Expr::pow(Expr base, unsigned exponent)
{
    return Expr(std::make_shared<const ExprNode>(ExprNode{Pow{std::move(base), exponent}}));
}

Expr Expr::neg(Expr operand)
{
    return Expr(std::make_shared<const ExprNode>(ExprNode{Neg{std::move(operand)}}));
}

const Expr::Node& Expr::node() const
{
    return node_->value;
}

bool operator==(const Expr& a, const Expr& b)
{
    if (a.node_ == b.node_) {
        return true;
    }
    if (a.node().index() != b.node().index()) {
        return false;
    }
    return std::visit(
        overloaded{
            [&](const Expr::Constant& x) { return x.value == b.as<Expr::Constant>()->value; },
            [&](const Expr::Variable& x) { return x.name == b.as<Expr::Variable>()->name; },
            [&](const Expr::Add& x) {
                const auto* y = b.as<Expr::Add>();
                return x.lhs == y->lhs && x.rhs == y->rhs;
            },
            [&](const Expr::Mul& x) {
                const auto* y = b.as<Expr::Mul>();
                return x.lhs == y->lhs && x.rhs == y->rhs;
            },
            [&](const Expr::Pow& x) {
                const auto* y = b.as<Expr::Pow>();
                return x.exponent == y->exponent && x.base == y->base;
            },
            [&](const Expr::Neg& x) { return x.operand == b.as<Expr::Neg>()->operand; },
        },
        a.node());
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

std::string join(const std::vector<std::string>& items)
{
    std::string out;
    for (const auto& s : items) {
        if (!out.empty()) {
            out += ", ";
        }
        out += s;
    }
    return out;
}

class Parser {
public:
    Parser(std::string_view text, const ParseOptions& options) : text_(text), options_(options) {}

    Expr run()
    {
        Expr e = parse_expr();
        skip_space();
        if (pos_ != text_.size()) {
            fail({"'+'", "'-'", "'*'", "end of input"}, "unexpected character");
        }
        if (depth(e) > options_.max_depth) {
            fail({}, "expression deeper than " + std::to_string(options_.max_depth));
        }
        return e;
    }

private:
    [[noreturn]] void fail(std::vector<std::string> expected, const std::string& detail) const
    {
        throw parse_error(pos_, std::move(expected), detail);
    }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    char peek()
    {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool at_digit()
    {
        return std::isdigit(static_cast<unsigned char>(peek())) != 0;
    }

    std::string read_uint()
    {
        if (!at_digit()) {
            fail({"UINT"}, "expected an unsigned integer");
        }
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    void enter()
    {
        if (++nesting_ > options_.max_depth) {
            fail({}, "expression nested deeper than " + std::to_string(options_.max_depth));
        }
    }

    Expr parse_expr()
    {
        enter();
        Expr acc = parse_term();
        for (char c = peek(); c == '+' || c == '-'; c = peek()) {
            ++pos_;
            Expr rhs = parse_term();
            acc = c == '+' ? Expr::add(std::move(acc), std::move(rhs))
                           : Expr::add(std::move(acc), Expr::neg(std::move(rhs)));
        }
        --nesting_;
        return acc;
    }

    Expr parse_term()
    {
        Expr acc = parse_factor();
        while (peek() == '*') {
            ++pos_;
            acc = Expr::mul(std::move(acc), parse_factor());
        }
        return acc;
    }

    Expr parse_factor()
    {
        if (peek() == '-') {
            ++pos_;
            enter();
            Expr operand = parse_factor();
            --nesting_;
            return Expr::neg(std::move(operand));
        }
        Expr base = parse_primary();
        if (peek() != '^') {
            return base;
        }
        ++pos_;
        const std::string digits = read_uint();
        unsigned long exponent = 0;
        try {
            exponent = std::stoul(digits);
        } catch (const std::out_of_range&) {
            fail({}, "exponent out of range");
        }
        if (exponent > 1'000'000) {
            fail({}, "exponent out of range");
        }
        if (peek() == '^') {
            fail({"'*'", "'+'", "'-'", "')'", "end of input"}, "'^' is not associative, use parentheses");
        }
        return Expr::pow(std::move(base), static_cast<unsigned>(exponent));
    }

    Expr parse_primary()
    {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            Expr inner = parse_expr();
            if (peek() != ')') {
                fail({"')'"}, "unbalanced parenthesis");
            }
            ++pos_;
            return inner;
        }
        if (c == 'x' || c == 'y') {
            if (variable_ != '\0' && variable_ != c) {
                fail({std::string("'") + variable_ + "'"}, "expression mixes variables x and y");
            }
            variable_ = c;
            ++pos_;
            return Expr::variable(c);
        }
        if (at_digit()) {
            std::string literal = read_uint();
            if (peek() == '/') {
                ++pos_;
                literal += '/';
                literal += read_uint();
            }
            try {
                return Expr::constant(Rational::parse(literal));
            } catch (const rational_parse_error& err) {
                fail({"UINT"}, err.what());
            }
        }
        fail({"RATIONAL", "VAR", "'('", "'-'"}, c == '\0' ? "unexpected end of input" : "unexpected character");
    }

    std::string_view text_;
    const ParseOptions& options_;
    std::size_t pos_ = 0;
    std::size_t nesting_ = 0;
    char variable_ = '\0';
};

} // namespace

parse_error::parse_error(std::size_t offset, std::vector<std::string> expected, const std::string& detail)
    : std::invalid_argument("at byte " + std::to_string(offset) + ": " + detail +
                            (expected.empty() ? std::string() : " (expected " + join(expected) + ")")),
      offset_(offset), expected_(std::move(expected))
{
}

Expr parse(std::string_view text, const ParseOptions& options)
{
    return Parser(text, options).run();
}

// ---------------------------------------------------------------------------
// Printing and inspection
// ---------------------------------------------------------------------------

namespace {

// Wrap when the child would otherwise regroup on re-parse.
std::string wrapped(const Expr& e, bool wrap)
{
    return wrap ? "(" + to_string(e) + ")" : to_string(e);
}

bool is_sum(const Expr& e)
{
    return e.as<Expr::Add>() != nullptr;
}

bool is_product(const Expr& e)
{
    return e.as<Expr::Mul>() != nullptr;
}

bool is_negative_constant(const Expr& e)
{
    const auto* c = e.as<Expr::Constant>();
    return c != nullptr && c->value.sign() < 0;
}

} // namespace

std::string to_string(const Expr& e)
{
    return std::visit(
        overloaded{
            [](const Expr::Constant& x) { return x.value.to_string(); },
            [](const Expr::Variable& x) { return std::string(1, x.name); },
            [](const Expr::Add& x) {
                if (const auto* n = x.rhs.as<Expr::Neg>()) {
                    return to_string(x.lhs) + " - " + wrapped(n->operand, is_sum(n->operand));
                }
                if (const auto* c = x.rhs.as<Expr::Constant>(); c != nullptr && c->value.sign() < 0) {
                    return to_string(x.lhs) + " - " + (-c->value).to_string();
                }
                return to_string(x.lhs) + " + " + wrapped(x.rhs, is_sum(x.rhs));
            },
            [](const Expr::Mul& x) {
                return wrapped(x.lhs, is_sum(x.lhs) || is_negative_constant(x.lhs)) + "*" +
                       wrapped(x.rhs, is_sum(x.rhs) || is_product(x.rhs) || is_negative_constant(x.rhs));
            },
            [](const Expr::Pow& x) {
                bool bare = x.base.as<Expr::Variable>() != nullptr;
                if (const auto* c = x.base.as<Expr::Constant>()) {
                    bare = c->value.is_integer() && c->value.sign() >= 0;
                }
                return wrapped(x.base, !bare) + "^" + std::to_string(x.exponent);
            },
            [](const Expr::Neg& x) {
                return "-" + wrapped(x.operand, is_sum(x.operand) || is_product(x.operand) ||
                                                    is_negative_constant(x.operand));
            },
        },
        e.node());
}

std::size_t depth(const Expr& e)
{
    return 1 + std::visit(overloaded{
                              [](const Expr::Constant&) -> std::size_t { return 0; },
                              [](const Expr::Variable&) -> std::size_t { return 0; },
                              [](const Expr::Add& x) { return std::max(depth(x.lhs), depth(x.rhs)); },
                              [](const Expr::Mul& x) { return std::max(depth(x.lhs), depth(x.rhs)); },
                              [](const Expr::Pow& x) { return depth(x.base); },
                              [](const Expr::Neg& x) { return depth(x.operand); },
                          },
                          e.node());
}

// ---------------------------------------------------------------------------
// Differentiation and evaluation
// ---------------------------------------------------------------------------

namespace {

const Rational* constant_value(const Expr& e)
{
    const auto* c = e.as<Expr::Constant>();
    return c != nullptr ? &c->value : nullptr;
}

Expr fold_add(Expr a, Expr b)
{
    const Rational* ca = constant_value(a);
    const Rational* cb = constant_value(b);
    if (ca != nullptr && cb != nullptr) {
        return Expr::constant(*ca + *cb);
    }
    if (ca != nullptr && ca->is_zero()) {
        return b;
    }
    if (cb != nullptr && cb->is_zero()) {
        return a;
    }
    return Expr::add(std::move(a), std::move(b));
}

Expr fold_mul(Expr a, Expr b)
{
    const Rational* ca = constant_value(a);
    const Rational* cb = constant_value(b);
    if (ca != nullptr && cb != nullptr) {
        return Expr::constant(*ca * *cb);
    }
    if (cb != nullptr) {
        std::swap(a, b);
        std::swap(ca, cb);
    }
    if (ca != nullptr) {
        if (ca->is_zero()) {
            return Expr::constant(Rational(0));
        }
        if (*ca == Rational(1)) {
            return b;
        }
        // c1 * (c2 * e) -> (c1 c2) * e
        if (const auto* inner = b.as<Expr::Mul>()) {
            if (const Rational* c2 = constant_value(inner->lhs)) {
                return fold_mul(Expr::constant(*ca * *c2), inner->rhs);
            }
        }
    }
    return Expr::mul(std::move(a), std::move(b));
}

Expr fold_neg(Expr a)
{
    if (const Rational* c = constant_value(a)) {
        return Expr::constant(-*c);
    }
    return Expr::neg(std::move(a));
}

Expr fold_pow(Expr base, unsigned exponent)
{
    if (exponent == 0) {
        return Expr::constant(Rational(1));
    }
    if (exponent == 1) {
        return base;
    }
    if (const Rational* c = constant_value(base)) {
        return Expr::constant(pow(*c, exponent));
    }
    return Expr::pow(std::move(base), exponent);
}

} // namespace

Expr differentiate(const Expr& e)
{
    return std::visit(
        overloaded{
            [](const Expr::Constant&) { return Expr::constant(Rational(0)); },
            [](const Expr::Variable&) { return Expr::constant(Rational(1)); },
            [](const Expr::Add& x) { return fold_add(differentiate(x.lhs), differentiate(x.rhs)); },
            [](const Expr::Mul& x) {
                return fold_add(fold_mul(differentiate(x.lhs), x.rhs), fold_mul(x.lhs, differentiate(x.rhs)));
            },
            [](const Expr::Pow& x) {
                if (x.exponent == 0) {
                    return Expr::constant(Rational(0));
                }
                Expr outer = fold_mul(Expr::constant(Rational(static_cast<long>(x.exponent))),
                                      fold_pow(x.base, x.exponent - 1));
                return fold_mul(std::move(outer), differentiate(x.base));
            },
            [](const Expr::Neg& x) { return fold_neg(differentiate(x.operand)); },
        },
        e.node());
}

Rational evaluate(const Expr& e, const Rational& at)
{
    return std::visit(overloaded{
                          [](const Expr::Constant& x) { return x.value; },
                          [&](const Expr::Variable&) { return at; },
                          [&](const Expr::Add& x) { return evaluate(x.lhs, at) + evaluate(x.rhs, at); },
                          [&](const Expr::Mul& x) { return evaluate(x.lhs, at) * evaluate(x.rhs, at); },
                          [&](const Expr::Pow& x) { return pow(evaluate(x.base, at), x.exponent); },
                          [&](const Expr::Neg& x) { return -evaluate(x.operand, at); },
                      },
                      e.node());
}

Expr substitute(const Expr& e, const Expr& replacement)
{
    return std::visit(overloaded{
                          [&](const Expr::Constant&) { return e; },
                          [&](const Expr::Variable&) { return replacement; },
                          [&](const Expr::Add& x) {
                              return Expr::add(substitute(x.lhs, replacement), substitute(x.rhs, replacement));
                          },
                          [&](const Expr::Mul& x) {
                              return Expr::mul(substitute(x.lhs, replacement), substitute(x.rhs, replacement));
                          },
                          [&](const Expr::Pow& x) { return Expr::pow(substitute(x.base, replacement), x.exponent); },
                          [&](const Expr::Neg& x) { return Expr::neg(substitute(x.operand, replacement)); },
                      },
                      e.node());
}

// ---------------------------------------------------------------------------
// Dense polynomial form
// ---------------------------------------------------------------------------

namespace {

// Integer coefficients over one shared denominator, so the inner loops of
// multiplication avoid a gcd per operation. Not kept reduced.
struct Dense {
    std::vector<mpz_class> num;
    mpz_class den{1};
};

void trim(Dense& p)
{
    while (!p.num.empty() && p.num.back() == 0) {
        p.num.pop_back();
    }
}

Dense dense_add(Dense a, const Dense& b)
{
    if (a.num.size() < b.num.size()) {
        a.num.resize(b.num.size());
    }
    if (a.den == b.den) {
        for (std::size_t i = 0; i < b.num.size(); ++i) {
            a.num[i] += b.num[i];
        }
    } else {
        for (auto& c : a.num) {
            c *= b.den;
        }
        for (std::size_t i = 0; i < b.num.size(); ++i) {
            a.num[i] += b.num[i] * a.den;
        }
        a.den *= b.den;
    }
    trim(a);
    return a;
}

Dense dense_mul(const Dense& a, const Dense& b)
{
    Dense out;
    out.den = a.den * b.den;
    if (a.num.empty() || b.num.empty()) {
        return out;
    }
    out.num.resize(a.num.size() + b.num.size() - 1);
    for (std::size_t i = 0; i < a.num.size(); ++i) {
        if (a.num[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.num.size(); ++j) {
            mpz_addmul(out.num[i + j].get_mpz_t(), a.num[i].get_mpz_t(), b.num[j].get_mpz_t());
        }
    }
    trim(out);
    return out;
}

Dense dense_pow(Dense base, unsigned exponent)
{
    Dense acc;
    acc.num.emplace_back(1);
    while (exponent != 0) {
        if (exponent & 1U) {
            acc = dense_mul(acc, base);
        }
        exponent >>= 1U;
        if (exponent != 0) {
            base = dense_mul(base, base);
        }
    }
    return acc;
}

Dense expand_dense(const Expr& e)
{
    return std::visit(overloaded{
                          [](const Expr::Constant& x) {
                              Dense p;
                              p.num.push_back(x.value.numerator());
                              p.den = x.value.denominator();
                              trim(p);
                              return p;
                          },
                          [](const Expr::Variable&) {
                              Dense p;
                              p.num = {mpz_class(0), mpz_class(1)};
                              return p;
                          },
                          [](const Expr::Add& x) { return dense_add(expand_dense(x.lhs), expand_dense(x.rhs)); },
                          [](const Expr::Mul& x) { return dense_mul(expand_dense(x.lhs), expand_dense(x.rhs)); },
                          [](const Expr::Pow& x) { return dense_pow(expand_dense(x.base), x.exponent); },
                          [](const Expr::Neg& x) {
                              Dense p = expand_dense(x.operand);
                              for (auto& c : p.num) {
                                  c = -c;
                              }
                              return p;
                          },
                      },
                      e.node());
}

} // namespace

std::vector<Rational> expand_polynomial(const Expr& e)
{
    const Dense p = expand_dense(e);
    std::vector<Rational> out;
    out.reserve(p.num.size());
    for (const auto& c : p.num) {
        out.emplace_back(mpq_class(c, p.den));
    }
    return out;
}

Expr from_polynomial(const std::vector<Rational>& coeffs, char variable)
{
    std::vector<Expr> monomials;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k].is_zero()) {
            continue;
        }
        if (k == 0) {
            monomials.push_back(Expr::constant(coeffs[k]));
            continue;
        }
        Expr power = k == 1 ? Expr::variable(variable) : Expr::pow(Expr::variable(variable), static_cast<unsigned>(k));
        monomials.push_back(Expr::mul(Expr::constant(coeffs[k]), std::move(power)));
    }
    if (monomials.empty()) {
        return Expr::constant(Rational(0));
    }
    Expr acc = monomials.front();
    for (std::size_t i = 1; i < monomials.size(); ++i) {
        acc = Expr::add(std::move(acc), monomials[i]);
    }
    return acc;
}

Rational nth_derivative_of_composition(const Expr& phi, const Expr& psi, unsigned n, const Rational& at)
{
    Expr current = from_polynomial(expand_polynomial(substitute(phi, psi)));
    for (unsigned k = 0; k < n; ++k) {
        current = differentiate(current);
    }
    return evaluate(current, at);
}

DerivativeSequence derivative_sequence_of(const Expr& e, const Rational& at, unsigned n)
{
    DerivativeSequence seq;
    seq.base = evaluate(e, at);
    seq.derivs.reserve(n);
    Expr current = e;
    for (unsigned k = 1; k <= n; ++k) {
        current = differentiate(current);
        seq.derivs.push_back(evaluate(current, at));
    }
    return seq;
}

} // namespace faa
