#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "bvp/errors.hpp"

namespace bvp {

/// A parsed scalar expression in a single free variable ("t" or "u").
///
/// Grammar (recursive descent):
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := '-' factor | atom ('^' factor)?
///   atom   := number | var | func '(' expr ')' | '(' expr ')'
/// '^' is right-associative and binds tighter than unary minus,
/// so "-u^2" is -(u^2).  Functions: exp, log, sin, cos, sqrt, abs.
class Expression {
public:
    /// Parses `source` with `varname` as the only permitted identifier.
    /// Throws SyntaxError / UnknownIdentifier / UnknownFunction.
    static Expression parse(const std::string& source, const std::string& varname);

    /// Evaluates at x with IEEE semantics; domain faults (log of
    /// nonpositive, sqrt of negative, 0^negative, non-finite pow results
    /// from negative bases) throw EvalError instead of propagating NaN.
    double eval(double x) const;

    /// Fully parenthesized text form; re-parsing it evaluates identically.
    std::string to_string() const;

    const std::string& varname() const { return varname_; }

private:
    struct Node;
    using NodePtr = std::shared_ptr<const Node>;

    enum class Func { Exp, Log, Sin, Cos, Sqrt, Abs };

    struct Number { double value; };
    struct Var {};
    struct Negate { NodePtr operand; };
    struct Binary { char op; NodePtr lhs, rhs; };
    struct Call { Func func; NodePtr arg; };

    struct Node {
        std::variant<Number, Var, Negate, Binary, Call> v;
    };

    Expression(NodePtr root, std::string varname)
        : root_(std::move(root)), varname_(std::move(varname)) {}

    static double eval_node(const Node& n, double x);
    static void print_node(const Node& n, std::string& out);

    NodePtr root_;
    std::string varname_;

    class Parser;
};

}  // namespace bvp
