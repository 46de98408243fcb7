#include "fracineq/expr.hpp"

#include <charconv>
#include <cmath>
#include <string>

namespace fracineq::ast {
namespace {

// Binding strength used to decide parenthesization.
int precedence(const Node& n) {
    switch (n.kind) {
    case NodeKind::Add:
    case NodeKind::Sub: return 1;
    case NodeKind::Mul:
    case NodeKind::Div: return 2;
    case NodeKind::Neg: return 3;
    case NodeKind::Constant: return std::signbit(n.value) ? 3 : 5;
    case NodeKind::Pow: return 4;
    default: return 5;
    }
}

std::string number(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    (void)ec;
    return std::string(buf, ptr);
}

void render(const Node& n, std::string& out);

void render_wrapped(const Node& n, bool wrap, std::string& out) {
    if (wrap) out += '(';
    render(n, out);
    if (wrap) out += ')';
}

void binary(const Node& n, int prec, const char* op, std::string& out) {
    render_wrapped(*n.lhs, precedence(*n.lhs) < prec, out);
    out += op;
    render_wrapped(*n.rhs, precedence(*n.rhs) <= prec, out);
}

void call(const char* name, const Node& n, std::string& out) {
    out += name;
    out += '(';
    render(*n.lhs, out);
    out += ')';
}

void render(const Node& n, std::string& out) {
    switch (n.kind) {
    case NodeKind::Constant: out += number(n.value); break;
    case NodeKind::Variable: out += 'x'; break;
    case NodeKind::Add: binary(n, 1, " + ", out); break;
    case NodeKind::Sub: binary(n, 1, " - ", out); break;
    case NodeKind::Mul: binary(n, 2, "*", out); break;
    case NodeKind::Div: binary(n, 2, "/", out); break;
    case NodeKind::Neg:
        out += '-';
        // a bare literal after '-' would re-parse as a negative constant
        render_wrapped(*n.lhs, precedence(*n.lhs) < 3 || n.lhs->kind == NodeKind::Constant, out);
        break;
    case NodeKind::Pow:
        render_wrapped(*n.lhs, precedence(*n.lhs) <= 4, out);
        out += '^';
        if (std::signbit(n.value)) {
            out += '(';
            out += number(n.value);
            out += ')';
        } else {
            out += number(n.value);
        }
        break;
    case NodeKind::Exp: call("exp", n, out); break;
    case NodeKind::Ln: call("ln", n, out); break;
    case NodeKind::Abs: call("abs", n, out); break;
    }
}

} // namespace

std::string print(const Node& n) {
    std::string out;
    render(n, out);
    return out;
}

} // namespace fracineq::ast
