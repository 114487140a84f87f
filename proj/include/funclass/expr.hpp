#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "funclass/grid.hpp"

namespace funclass::expr {

enum class BinaryOp { Add, Sub, Mul, Div, Pow };
enum class Function { Sin, Cos, Exp, Log, Sqrt, Abs, Min, Max, Pow };
enum class Constant { Pi, E };

std::string_view name(Function fn);
std::size_t arity(Function fn);

// Syntax error; offset() is the byte offset into the source text.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& message, std::size_t offset)
        : std::invalid_argument(message + " at offset " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// Out-of-domain evaluation (log of x <= 0, sqrt of x < 0, division by zero,
// or any non-finite intermediate result).
class EvalError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct Node;

// Immutable expression tree in one variable x. Copies share structure.
class Expr {
public:
    static Expr number(double value);
    static Expr variable();
    static Expr constant(Constant c);
    static Expr negate(Expr operand);
    static Expr binary(BinaryOp op, Expr lhs, Expr rhs);
    static Expr call(Function fn, std::vector<Expr> args);

    double eval(double x) const;
    // Fully parenthesized; parse(to_string()) reproduces the tree.
    std::string to_string() const;

    const Node& node() const { return *node_; }

    friend bool operator==(const Expr& a, const Expr& b);

private:
    explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

struct Node {
    enum class Kind { Number, Variable, Constant, Negate, Binary, Call };
    Kind kind;
    double value = 0.0;
    Constant constant = Constant::Pi;
    BinaryOp op = BinaryOp::Add;
    Function fn = Function::Sin;
    std::vector<Expr> children;
};

/// Precedence, loosest first: + -, then * /, then unary minus, then ^
/// (right-associative). Implicit multiplication is not accepted.
Expr parse(std::string_view text);

/// Samples e on origin + i * step for i < count.
GridFunction sample(const Expr& e, double origin, double step, std::size_t count);

}  // namespace funclass::expr
