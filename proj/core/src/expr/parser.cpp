#include "fracineq/expr.hpp"

#include "fracineq/error.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

namespace fracineq {
namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::size_t offset;
    std::string_view text;
    double number = 0.0;
};

const std::vector<std::string> kOperandStart = {"number", "x", "e", "pi", "exp", "ln", "abs", "(", "-"};
const std::vector<std::string> kAfterOperand = {"+", "-", "*", "/", "^", "end of input"};
const std::vector<std::string> kInsideParens = {"+", "-", "*", "/", "^", ")"};

std::string join(const std::vector<std::string>& items) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += ", ";
        out += items[i] == "end of input" || items[i] == "number" || items[i] == "identifier"
                   ? items[i]
                   : "'" + items[i] + "'";
    }
    return out;
}

[[noreturn]] void fail(std::size_t offset, std::vector<std::string> expected, const std::string& what) {
    std::string message = "syntax error at offset " + std::to_string(offset) + ": " + what;
    if (!expected.empty()) message += "; expected one of " + join(expected);
    throw ParseError(offset, std::move(expected), message);
}

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        const std::size_t start = pos_;
        if (pos_ >= src_.size()) return {Tok::End, start, {}};
        const char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number(start);
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                ++pos_;
            return {Tok::Ident, start, src_.substr(start, pos_ - start)};
        }
        ++pos_;
        switch (c) {
        case '+': return {Tok::Plus, start, src_.substr(start, 1)};
        case '-': return {Tok::Minus, start, src_.substr(start, 1)};
        case '*': return {Tok::Star, start, src_.substr(start, 1)};
        case '/': return {Tok::Slash, start, src_.substr(start, 1)};
        case '^': return {Tok::Caret, start, src_.substr(start, 1)};
        case '(': return {Tok::LParen, start, src_.substr(start, 1)};
        case ')': return {Tok::RParen, start, src_.substr(start, 1)};
        default: break;
        }
        fail(start, {"number", "identifier", "+", "-", "*", "/", "^", "(", ")"},
             std::string("unexpected character '") + c + "'");
    }

private:
    Token number(std::size_t start) {
        std::size_t digits = 0;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_, ++digits;
        if (pos_ < src_.size() && src_[pos_] == '.') {
            ++pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_, ++digits;
        }
        if (digits == 0) fail(start, {"number"}, "malformed number");
        // exponent only when a digit actually follows, so "2e" stays number + identifier
        if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
            std::size_t look = pos_ + 1;
            if (look < src_.size() && (src_[look] == '+' || src_[look] == '-')) ++look;
            if (look < src_.size() && std::isdigit(static_cast<unsigned char>(src_[look]))) {
                pos_ = look;
                while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            }
        }
        const std::string_view text = src_.substr(start, pos_ - start);
        double value = 0.0;
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(value))
            fail(start, {"number"}, "number literal out of range: " + std::string(text));
        return {Tok::Number, start, text, value};
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

class Parser {
public:
    explicit Parser(std::string_view src) : lexer_(src) { advance(); }

    NodePtr parse_all() {
        NodePtr root = expr();
        if (cur_.kind != Tok::End) fail(cur_.offset, kAfterOperand, "unexpected '" + std::string(cur_.text) + "'");
        return root;
    }

private:
    void advance() { cur_ = lexer_.next(); }

    NodePtr expr() {
        NodePtr lhs = term();
        while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
            const bool plus = cur_.kind == Tok::Plus;
            advance();
            NodePtr rhs = term();
            lhs = plus ? ast::add(std::move(lhs), std::move(rhs)) : ast::sub(std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    NodePtr term() {
        NodePtr lhs = unary();
        while (cur_.kind == Tok::Star || cur_.kind == Tok::Slash) {
            const bool times = cur_.kind == Tok::Star;
            advance();
            NodePtr rhs = unary();
            lhs = times ? ast::mul(std::move(lhs), std::move(rhs)) : ast::div(std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    NodePtr unary() {
        if (cur_.kind != Tok::Minus) return power();
        advance();
        const bool literal_follows = cur_.kind == Tok::Number;
        NodePtr operand = unary();
        // "-2" is the constant -2; "-(2)" and "-2^2" stay negations
        if (literal_follows && operand->kind == NodeKind::Constant) return ast::constant(-operand->value);
        return ast::neg(std::move(operand));
    }

    NodePtr power() {
        NodePtr base = primary();
        if (cur_.kind != Tok::Caret) return base;
        advance();
        return ast::pow(std::move(base), exponent());
    }

    double exponent() {
        const std::size_t start = cur_.offset;
        bool negate = false;
        if (cur_.kind == Tok::Minus) {
            negate = true;
            advance();
        }
        NodePtr atom = primary();
        if (ast::contains(*atom, NodeKind::Variable)) fail(start, {"number", "e", "pi", "("}, "exponent must be a constant");
        double value = FunctionSpec(atom, {})(0.0);
        if (cur_.kind == Tok::Caret) {
            advance();
            value = std::pow(value, exponent());
        }
        if (negate) value = -value;
        if (!std::isfinite(value)) fail(start, {}, "exponent does not evaluate to a finite constant");
        return value;
    }

    NodePtr primary() {
        const Token tok = cur_;
        switch (tok.kind) {
        case Tok::Number: advance(); return ast::constant(tok.number);
        case Tok::LParen: {
            advance();
            NodePtr inner = expr();
            if (cur_.kind != Tok::RParen) fail(cur_.offset, kInsideParens, "unbalanced parenthesis");
            advance();
            return inner;
        }
        case Tok::Ident: return identifier(tok);
        case Tok::End: fail(tok.offset, kOperandStart, "unexpected end of input");
        default: fail(tok.offset, kOperandStart, "unexpected '" + std::string(tok.text) + "'");
        }
    }

    NodePtr identifier(const Token& tok) {
        advance();
        if (tok.text == "x") return ast::variable();
        if (tok.text == "e") return ast::constant(std::numbers::e);
        if (tok.text == "pi") return ast::constant(std::numbers::pi);
        NodePtr (*fn)(NodePtr) = nullptr;
        if (tok.text == "exp") fn = &ast::exp;
        else if (tok.text == "ln") fn = &ast::ln;
        else if (tok.text == "abs") fn = &ast::abs;
        if (!fn) fail(tok.offset, kOperandStart, "unknown identifier '" + std::string(tok.text) + "'");
        if (cur_.kind != Tok::LParen) fail(cur_.offset, {"("}, std::string(tok.text) + " must be followed by '('");
        advance();
        NodePtr arg = expr();
        if (cur_.kind != Tok::RParen) fail(cur_.offset, kInsideParens, "unbalanced parenthesis");
        advance();
        return fn(std::move(arg));
    }

    Lexer lexer_;
    Token cur_{Tok::End, 0, {}};
};

} // namespace

FunctionSpec parse(std::string_view text) {
    Parser parser(text);
    return FunctionSpec(parser.parse_all(), std::string(text));
}

} // namespace fracineq
