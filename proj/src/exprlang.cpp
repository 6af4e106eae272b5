#include "bvp/exprlang.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>

namespace bvp {

namespace {

const char* func_name(int f) {
    static const char* names[] = {"exp", "log", "sin", "cos", "sqrt", "abs"};
    return names[f];
}

}  // namespace

class Expression::Parser {
public:
    Parser(const std::string& src, const std::string& varname)
        : src_(src), varname_(varname) {}

    NodePtr run() {
        NodePtr e = expr();
        skip_ws();
        if (pos_ != src_.size()) {
            throw SyntaxError("unexpected trailing input", pos_);
        }
        return e;
    }

private:
    NodePtr expr() {
        NodePtr lhs = term();
        for (;;) {
            skip_ws();
            if (peek() == '+' || peek() == '-') {
                char op = src_[pos_++];
                lhs = make(Binary{op, lhs, term()});
            } else {
                return lhs;
            }
        }
    }

    NodePtr term() {
        NodePtr lhs = factor();
        for (;;) {
            skip_ws();
            if (peek() == '*' || peek() == '/') {
                char op = src_[pos_++];
                lhs = make(Binary{op, lhs, factor()});
            } else {
                return lhs;
            }
        }
    }

    NodePtr factor() {
        skip_ws();
        if (peek() == '-') {
            ++pos_;
            return make(Negate{factor()});
        }
        NodePtr base = atom();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            return make(Binary{'^', base, factor()});  // right-associative
        }
        return base;
    }

    NodePtr atom() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            NodePtr e = expr();
            expect(')');
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            return number();
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            return identifier();
        }
        throw SyntaxError(c == '\0' ? "unexpected end of input"
                                    : std::string("unexpected character '") + c + "'",
                          pos_);
    }

    NodePtr number() {
        const char* begin = src_.c_str() + pos_;
        char* end = nullptr;
        double v = std::strtod(begin, &end);
        if (end == begin) {
            throw SyntaxError("malformed number", pos_);
        }
        pos_ += static_cast<std::size_t>(end - begin);
        return make(Number{v});
    }

    NodePtr identifier() {
        std::size_t start = pos_;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
            ++pos_;
        }
        std::string name = src_.substr(start, pos_ - start);
        skip_ws();
        if (peek() == '(') {
            static const std::pair<const char*, Func> funcs[] = {
                {"exp", Func::Exp}, {"log", Func::Log},  {"sin", Func::Sin},
                {"cos", Func::Cos}, {"sqrt", Func::Sqrt}, {"abs", Func::Abs}};
            for (const auto& [fname, f] : funcs) {
                if (name == fname) {
                    ++pos_;
                    NodePtr arg = expr();
                    expect(')');
                    return make(Call{f, arg});
                }
            }
            throw UnknownFunction("unknown function '" + name + "'", start);
        }
        if (name == varname_) {
            return make(Var{});
        }
        throw UnknownIdentifier("unknown identifier '" + name + "' (expected '" +
                                    varname_ + "')",
                                start);
    }

    void expect(char c) {
        skip_ws();
        if (peek() != c) {
            throw SyntaxError(std::string("expected '") + c + "'", pos_);
        }
        ++pos_;
    }

    char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) {
            ++pos_;
        }
    }

    template <class T>
    static NodePtr make(T&& v) {
        return std::make_shared<const Node>(Node{std::forward<T>(v)});
    }

    const std::string& src_;
    const std::string& varname_;
    std::size_t pos_ = 0;
};

Expression Expression::parse(const std::string& source, const std::string& varname) {
    if (source.empty()) {
        throw SyntaxError("empty expression", 0);
    }
    return Expression(Parser(source, varname).run(), varname);
}

double Expression::eval_node(const Node& n, double x) {
    return std::visit(
        [x](const auto& node) -> double {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, Number>) {
                return node.value;
            } else if constexpr (std::is_same_v<T, Var>) {
                return x;
            } else if constexpr (std::is_same_v<T, Negate>) {
                return -eval_node(*node.operand, x);
            } else if constexpr (std::is_same_v<T, Binary>) {
                double a = eval_node(*node.lhs, x);
                double b = eval_node(*node.rhs, x);
                switch (node.op) {
                    case '+': return a + b;
                    case '-': return a - b;
                    case '*': return a * b;
                    case '/': return a / b;
                    default: {
                        if (a == 0.0 && b < 0.0) {
                            throw EvalError("0 raised to negative power " +
                                            std::to_string(b));
                        }
                        double r = std::pow(a, b);
                        if (std::isnan(r)) {
                            throw EvalError("pow(" + std::to_string(a) + ", " +
                                            std::to_string(b) + ") is undefined");
                        }
                        return r;
                    }
                }
            } else {  // Call
                double a = eval_node(*node.arg, x);
                switch (node.func) {
                    case Func::Exp: return std::exp(a);
                    case Func::Log:
                        if (!(a > 0.0)) {
                            throw EvalError("log of nonpositive value " +
                                            std::to_string(a));
                        }
                        return std::log(a);
                    case Func::Sin: return std::sin(a);
                    case Func::Cos: return std::cos(a);
                    case Func::Sqrt:
                        if (a < 0.0) {
                            throw EvalError("sqrt of negative value " +
                                            std::to_string(a));
                        }
                        return std::sqrt(a);
                    case Func::Abs: return std::fabs(a);
                }
                return 0.0;  // unreachable
            }
        },
        n.v);
}

double Expression::eval(double x) const {
    return eval_node(*root_, x);
}

void Expression::print_node(const Node& n, std::string& out) {
    std::visit(
        [&out](const auto& node) {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, Number>) {
                char buf[32];
                auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), node.value);
                out.append(buf, end);
            } else if constexpr (std::is_same_v<T, Var>) {
                out += '@';  // placeholder patched by to_string
            } else if constexpr (std::is_same_v<T, Negate>) {
                out += "(-";
                print_node(*node.operand, out);
                out += ')';
            } else if constexpr (std::is_same_v<T, Binary>) {
                out += '(';
                print_node(*node.lhs, out);
                out += node.op;
                print_node(*node.rhs, out);
                out += ')';
            } else {
                out += func_name(static_cast<int>(node.func));
                out += '(';
                print_node(*node.arg, out);
                out += ')';
            }
        },
        n.v);
}

std::string Expression::to_string() const {
    std::string raw;
    print_node(*root_, raw);
    std::string out;
    out.reserve(raw.size() + 8);
    for (char c : raw) {
        if (c == '@') {
            out += varname_;
        } else {
            out += c;
        }
    }
    return out;
}

}  // namespace bvp
