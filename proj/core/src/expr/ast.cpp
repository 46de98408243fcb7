#include "fracineq/expr.hpp"

#include "fracineq/error.hpp"
#include "program.hpp"

#include <cmath>
#include <utility>

namespace fracineq {
namespace ast {
namespace {

NodePtr make(NodeKind kind, double value, NodePtr l = nullptr, NodePtr r = nullptr) {
    return std::make_shared<const Node>(Node{kind, value, std::move(l), std::move(r)});
}

} // namespace

NodePtr constant(double v) {
    if (!std::isfinite(v)) throw DomainError("constant", v, "expression constants must be finite");
    return make(NodeKind::Constant, v);
}
NodePtr variable() { return make(NodeKind::Variable, 0.0); }
NodePtr add(NodePtr l, NodePtr r) { return make(NodeKind::Add, 0.0, std::move(l), std::move(r)); }
NodePtr sub(NodePtr l, NodePtr r) { return make(NodeKind::Sub, 0.0, std::move(l), std::move(r)); }
NodePtr mul(NodePtr l, NodePtr r) { return make(NodeKind::Mul, 0.0, std::move(l), std::move(r)); }
NodePtr div(NodePtr l, NodePtr r) { return make(NodeKind::Div, 0.0, std::move(l), std::move(r)); }
NodePtr pow(NodePtr base, double exponent) {
    if (!std::isfinite(exponent)) throw DomainError("exponent", exponent, "power exponents must be finite");
    return make(NodeKind::Pow, exponent, std::move(base));
}
NodePtr neg(NodePtr operand) { return make(NodeKind::Neg, 0.0, std::move(operand)); }
NodePtr exp(NodePtr operand) { return make(NodeKind::Exp, 0.0, std::move(operand)); }
NodePtr ln(NodePtr operand) { return make(NodeKind::Ln, 0.0, std::move(operand)); }
NodePtr abs(NodePtr operand) { return make(NodeKind::Abs, 0.0, std::move(operand)); }

bool structurally_equal(const Node& a, const Node& b) {
    if (a.kind != b.kind) return false;
    if ((a.kind == NodeKind::Constant || a.kind == NodeKind::Pow) && !(a.value == b.value)) return false;
    if (static_cast<bool>(a.lhs) != static_cast<bool>(b.lhs)) return false;
    if (static_cast<bool>(a.rhs) != static_cast<bool>(b.rhs)) return false;
    if (a.lhs && !structurally_equal(*a.lhs, *b.lhs)) return false;
    if (a.rhs && !structurally_equal(*a.rhs, *b.rhs)) return false;
    return true;
}

bool contains(const Node& n, NodeKind kind) {
    if (n.kind == kind) return true;
    return (n.lhs && contains(*n.lhs, kind)) || (n.rhs && contains(*n.rhs, kind));
}

std::size_t size(const Node& n) {
    return 1 + (n.lhs ? size(*n.lhs) : 0) + (n.rhs ? size(*n.rhs) : 0);
}

} // namespace ast

FunctionSpec::FunctionSpec(NodePtr root, std::string source_text)
    : root_(std::move(root)), source_(std::move(source_text)), program_(std::make_shared<const Program>(root_)) {}

double FunctionSpec::operator()(double x) const { return program_->run(x); }

double evaluate(const FunctionSpec& f, double x) { return f(x); }

FunctionSpec abs_power(const FunctionSpec& g, double q) {
    if (!(q >= 1.0) || !std::isfinite(q)) throw DomainError("q", q, "abs_power needs a finite q >= 1");
    NodePtr body = ast::abs(g.ast());
    if (q != 1.0) body = ast::pow(std::move(body), q);
    std::string text = ast::print(*body);
    return FunctionSpec(std::move(body), std::move(text));
}

} // namespace fracineq
