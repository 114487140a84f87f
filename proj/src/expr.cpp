#include "funclass/expr.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <optional>
#include <system_error>

#include "funclass/io.hpp"

namespace funclass::expr {

namespace {

struct FunctionInfo {
    Function fn;
    std::string_view name;
    std::size_t arity;
};

constexpr FunctionInfo kFunctions[] = {
    {Function::Sin, "sin", 1},  {Function::Cos, "cos", 1},   {Function::Exp, "exp", 1},
    {Function::Log, "log", 1},  {Function::Sqrt, "sqrt", 1}, {Function::Abs, "abs", 1},
    {Function::Min, "min", 2},  {Function::Max, "max", 2},   {Function::Pow, "pow", 2},
};

const FunctionInfo& info(Function fn) {
    for (const auto& f : kFunctions) {
        if (f.fn == fn) return f;
    }
    return kFunctions[0];
}

std::optional<Function> lookup_function(std::string_view id) {
    for (const auto& f : kFunctions) {
        if (f.name == id) return f.fn;
    }
    return std::nullopt;
}

double checked(double v, const char* what) {
    if (!std::isfinite(v)) throw EvalError(std::string(what) + " produced a non-finite value");
    return v;
}

double apply(Function fn, double a, double b) {
    switch (fn) {
        case Function::Sin: return checked(std::sin(a), "sin");
        case Function::Cos: return checked(std::cos(a), "cos");
        case Function::Exp: return checked(std::exp(a), "exp");
        case Function::Log:
            if (!(a > 0.0)) throw EvalError("log of a non-positive number");
            return std::log(a);
        case Function::Sqrt:
            if (a < 0.0) throw EvalError("sqrt of a negative number");
            return std::sqrt(a);
        case Function::Abs: return std::fabs(a);
        case Function::Min: return std::fmin(a, b);
        case Function::Max: return std::fmax(a, b);
        case Function::Pow: return checked(std::pow(a, b), "pow");
    }
    return 0.0;
}

double eval_node(const Node& n, double x) {
    switch (n.kind) {
        case Node::Kind::Number: return n.value;
        case Node::Kind::Variable: return x;
        case Node::Kind::Constant: return n.constant == Constant::Pi ? std::numbers::pi : std::numbers::e;
        case Node::Kind::Negate: return -n.children[0].eval(x);
        case Node::Kind::Binary: {
            const double a = n.children[0].eval(x);
            const double b = n.children[1].eval(x);
            switch (n.op) {
                case BinaryOp::Add: return checked(a + b, "addition");
                case BinaryOp::Sub: return checked(a - b, "subtraction");
                case BinaryOp::Mul: return checked(a * b, "multiplication");
                case BinaryOp::Div:
                    if (b == 0.0) throw EvalError("division by zero");
                    return checked(a / b, "division");
                case BinaryOp::Pow: return checked(std::pow(a, b), "power");
            }
            return 0.0;
        }
        case Node::Kind::Call: {
            const double a = n.children[0].eval(x);
            const double b = n.children.size() > 1 ? n.children[1].eval(x) : 0.0;
            return apply(n.fn, a, b);
        }
    }
    return 0.0;
}

char op_symbol(BinaryOp op) {
    switch (op) {
        case BinaryOp::Add: return '+';
        case BinaryOp::Sub: return '-';
        case BinaryOp::Mul: return '*';
        case BinaryOp::Div: return '/';
        case BinaryOp::Pow: return '^';
    }
    return '?';
}

void print(const Node& n, std::string& out) {
    switch (n.kind) {
        case Node::Kind::Number: out += format_real(n.value); return;
        case Node::Kind::Variable: out += 'x'; return;
        case Node::Kind::Constant: out += n.constant == Constant::Pi ? "pi" : "e"; return;
        case Node::Kind::Negate:
            out += "(-";
            print(n.children[0].node(), out);
            out += ')';
            return;
        case Node::Kind::Binary:
            out += '(';
            print(n.children[0].node(), out);
            out += ' ';
            out += op_symbol(n.op);
            out += ' ';
            print(n.children[1].node(), out);
            out += ')';
            return;
        case Node::Kind::Call:
            out += info(n.fn).name;
            out += '(';
            for (std::size_t i = 0; i < n.children.size(); ++i) {
                if (i > 0) out += ", ";
                print(n.children[i].node(), out);
            }
            out += ')';
            return;
    }
}

// ---- lexer -------------------------------------------------------------

enum class Tok { End, Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma };

struct Token {
    Tok kind = Tok::End;
    std::size_t offset = 0;
    std::string_view text;
    double number = 0.0;
};

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_ident_start(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }
bool is_ident_char(char c) { return is_ident_start(c) || is_digit(c); }

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) { advance(); }

    const Token& peek() const { return current_; }
    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t' || src_[pos_] == '\n' ||
                                      src_[pos_] == '\r')) {
            ++pos_;
        }
        current_ = Token{};
        current_.offset = pos_;
        if (pos_ >= src_.size()) return;

        const char c = src_[pos_];
        auto single = [&](Tok k) {
            current_.kind = k;
            current_.text = src_.substr(pos_, 1);
            ++pos_;
        };
        switch (c) {
            case '+': return single(Tok::Plus);
            case '-': return single(Tok::Minus);
            case '*': return single(Tok::Star);
            case '/': return single(Tok::Slash);
            case '^': return single(Tok::Caret);
            case '(': return single(Tok::LParen);
            case ')': return single(Tok::RParen);
            case ',': return single(Tok::Comma);
            default: break;
        }
        if (is_digit(c) || (c == '.' && pos_ + 1 < src_.size() && is_digit(src_[pos_ + 1]))) {
            lex_number();
            return;
        }
        if (is_ident_start(c)) {
            const std::size_t start = pos_;
            while (pos_ < src_.size() && is_ident_char(src_[pos_])) ++pos_;
            current_.kind = Tok::Ident;
            current_.text = src_.substr(start, pos_ - start);
            return;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    void lex_number() {
        const std::size_t start = pos_;
        while (pos_ < src_.size() && is_digit(src_[pos_])) ++pos_;
        if (pos_ < src_.size() && src_[pos_] == '.') {
            ++pos_;
            while (pos_ < src_.size() && is_digit(src_[pos_])) ++pos_;
        }
        // An exponent only when digits follow; "2e" stays a number then the constant e.
        if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
            std::size_t look = pos_ + 1;
            if (look < src_.size() && (src_[look] == '+' || src_[look] == '-')) ++look;
            if (look < src_.size() && is_digit(src_[look])) {
                pos_ = look;
                while (pos_ < src_.size() && is_digit(src_[pos_])) ++pos_;
            }
        }
        const auto text = src_.substr(start, pos_ - start);
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
        if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(v)) {
            throw ParseError("numeric literal '" + std::string(text) + "' is out of range", start);
        }
        current_.kind = Tok::Number;
        current_.text = text;
        current_.number = v;
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    Token current_;
};

// ---- Pratt parser ------------------------------------------------------

constexpr int kUnaryPower = 5;

struct Infix {
    BinaryOp op;
    int left;
    int right;
};

std::optional<Infix> infix(Tok t) {
    switch (t) {
        case Tok::Plus: return Infix{BinaryOp::Add, 1, 2};
        case Tok::Minus: return Infix{BinaryOp::Sub, 1, 2};
        case Tok::Star: return Infix{BinaryOp::Mul, 3, 4};
        case Tok::Slash: return Infix{BinaryOp::Div, 3, 4};
        case Tok::Caret: return Infix{BinaryOp::Pow, 7, 6};
        default: return std::nullopt;
    }
}

std::string describe(const Token& t) {
    if (t.kind == Tok::End) return "end of input";
    return "'" + std::string(t.text) + "'";
}

class Parser {
public:
    explicit Parser(std::string_view src) : lex_(src) {}

    Expr parse_all() {
        if (lex_.peek().kind == Tok::End) throw ParseError("empty expression", 0);
        Expr e = expression(0);
        const Token& t = lex_.peek();
        if (t.kind == Tok::RParen) throw ParseError("unbalanced ')'", t.offset);
        if (t.kind != Tok::End) throw ParseError("unexpected " + describe(t) + " after expression", t.offset);
        return e;
    }

private:
    Expr expression(int min_power) {
        Expr lhs = prefix();
        while (true) {
            const auto op = infix(lex_.peek().kind);
            if (!op || op->left < min_power) break;
            lex_.take();
            Expr rhs = expression(op->right);
            lhs = Expr::binary(op->op, std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    Expr prefix() {
        Token t = lex_.take();
        switch (t.kind) {
            case Tok::Number: return Expr::number(t.number);
            case Tok::Minus: return Expr::negate(expression(kUnaryPower));
            case Tok::LParen: {
                Expr inner = expression(0);
                expect_close(t.offset);
                return inner;
            }
            case Tok::Ident: return identifier(t);
            case Tok::End: throw ParseError("unexpected end of input", t.offset);
            default: throw ParseError("unexpected " + describe(t), t.offset);
        }
    }

    Expr identifier(const Token& t) {
        if (t.text == "x") return Expr::variable();
        if (t.text == "pi") return Expr::constant(Constant::Pi);
        if (t.text == "e") return Expr::constant(Constant::E);
        const auto fn = lookup_function(t.text);
        if (!fn) throw ParseError("unknown identifier '" + std::string(t.text) + "'", t.offset);
        const Token open = lex_.take();
        if (open.kind != Tok::LParen) {
            throw ParseError("expected '(' after function '" + std::string(t.text) + "'", open.offset);
        }
        std::vector<Expr> args;
        args.push_back(expression(0));
        while (lex_.peek().kind == Tok::Comma) {
            lex_.take();
            args.push_back(expression(0));
        }
        expect_close(open.offset);
        if (args.size() != info(*fn).arity) {
            throw ParseError("function '" + std::string(t.text) + "' takes " + std::to_string(info(*fn).arity) +
                                 " argument(s), got " + std::to_string(args.size()),
                             t.offset);
        }
        return Expr::call(*fn, std::move(args));
    }

    void expect_close(std::size_t open_offset) {
        const Token t = lex_.take();
        if (t.kind == Tok::RParen) return;
        if (t.kind == Tok::End) throw ParseError("unbalanced '(' opened", open_offset);
        throw ParseError("expected ')' but found " + describe(t), t.offset);
    }

    Lexer lex_;
};

}  // namespace

std::string_view name(Function fn) { return info(fn).name; }
std::size_t arity(Function fn) { return info(fn).arity; }

Expr Expr::number(double value) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Number;
    n->value = value;
    return Expr(std::move(n));
}

Expr Expr::variable() {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Variable;
    return Expr(std::move(n));
}

Expr Expr::constant(Constant c) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Constant;
    n->constant = c;
    return Expr(std::move(n));
}

Expr Expr::negate(Expr operand) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Negate;
    n->children.push_back(std::move(operand));
    return Expr(std::move(n));
}

Expr Expr::binary(BinaryOp op, Expr lhs, Expr rhs) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Binary;
    n->op = op;
    n->children.push_back(std::move(lhs));
    n->children.push_back(std::move(rhs));
    return Expr(std::move(n));
}

Expr Expr::call(Function fn, std::vector<Expr> args) {
    if (args.size() != arity(fn)) {
        throw std::invalid_argument("expr: wrong number of arguments for " + std::string(name(fn)));
    }
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Call;
    n->fn = fn;
    n->children = std::move(args);
    return Expr(std::move(n));
}

double Expr::eval(double x) const { return eval_node(*node_, x); }

std::string Expr::to_string() const {
    std::string out;
    print(*node_, out);
    return out;
}

bool operator==(const Expr& a, const Expr& b) {
    const Node& x = a.node();
    const Node& y = b.node();
    if (x.kind != y.kind) return false;
    switch (x.kind) {
        case Node::Kind::Number: return x.value == y.value;
        case Node::Kind::Variable: return true;
        case Node::Kind::Constant: return x.constant == y.constant;
        case Node::Kind::Negate: return x.children[0] == y.children[0];
        case Node::Kind::Binary:
            return x.op == y.op && x.children[0] == y.children[0] && x.children[1] == y.children[1];
        case Node::Kind::Call: return x.fn == y.fn && x.children == y.children;
    }
    return false;
}

Expr parse(std::string_view text) { return Parser(text).parse_all(); }

GridFunction sample(const Expr& e, double origin, double step, std::size_t count) {
    return funclass::sample([&e](double x) { return e.eval(x); }, origin, step, count);
}

}  // namespace funclass::expr
