#include "fracineq/expr.hpp"

#include "fracineq/error.hpp"

#include <cmath>

namespace fracineq {
namespace {

bool is_const(const NodePtr& n, double v) { return n->kind == NodeKind::Constant && n->value == v; }
bool is_const(const NodePtr& n) { return n->kind == NodeKind::Constant; }

NodePtr fold_add(NodePtr l, NodePtr r) {
    if (is_const(l, 0.0)) return r;
    if (is_const(r, 0.0)) return l;
    if (is_const(l) && is_const(r)) return ast::constant(l->value + r->value);
    return ast::add(std::move(l), std::move(r));
}

NodePtr fold_neg(NodePtr a) {
    if (is_const(a)) return ast::constant(-a->value);
    return ast::neg(std::move(a));
}

NodePtr fold_sub(NodePtr l, NodePtr r) {
    if (is_const(r, 0.0)) return l;
    if (is_const(l, 0.0)) return fold_neg(std::move(r));
    if (is_const(l) && is_const(r)) return ast::constant(l->value - r->value);
    return ast::sub(std::move(l), std::move(r));
}

NodePtr fold_mul(NodePtr l, NodePtr r) {
    if (is_const(l, 0.0) || is_const(r, 0.0)) return ast::constant(0.0);
    if (is_const(l, 1.0)) return r;
    if (is_const(r, 1.0)) return l;
    if (is_const(l) && is_const(r)) return ast::constant(l->value * r->value);
    return ast::mul(std::move(l), std::move(r));
}

NodePtr fold_div(NodePtr l, NodePtr r) {
    if (is_const(r, 1.0)) return l;
    if (is_const(l, 0.0)) return ast::constant(0.0);
    if (is_const(l) && is_const(r) && r->value != 0.0) return ast::constant(l->value / r->value);
    return ast::div(std::move(l), std::move(r));
}

NodePtr fold_pow(NodePtr base, double n) {
    if (n == 1.0) return base;
    if (n == 0.0) return ast::constant(1.0);
    if (is_const(base)) {
        const double v = std::pow(base->value, n);
        if (std::isfinite(v)) return ast::constant(v);
    }
    return ast::pow(std::move(base), n);
}

NodePtr derive(const NodePtr& n) {
    switch (n->kind) {
    case NodeKind::Constant: return ast::constant(0.0);
    case NodeKind::Variable: return ast::constant(1.0);
    case NodeKind::Add: return fold_add(derive(n->lhs), derive(n->rhs));
    case NodeKind::Sub: return fold_sub(derive(n->lhs), derive(n->rhs));
    case NodeKind::Mul: return fold_add(fold_mul(derive(n->lhs), n->rhs), fold_mul(n->lhs, derive(n->rhs)));
    case NodeKind::Div:
        return fold_div(fold_sub(fold_mul(derive(n->lhs), n->rhs), fold_mul(n->lhs, derive(n->rhs))),
                        fold_pow(n->rhs, 2.0));
    case NodeKind::Pow:
        return fold_mul(fold_mul(ast::constant(n->value), fold_pow(n->lhs, n->value - 1.0)), derive(n->lhs));
    case NodeKind::Neg: return fold_neg(derive(n->lhs));
    case NodeKind::Exp: return fold_mul(derive(n->lhs), n);
    case NodeKind::Ln: return fold_div(derive(n->lhs), n->lhs);
    case NodeKind::Abs: break;
    }
    throw UnsupportedError("cannot differentiate abs(...): not differentiable at 0");
}

} // namespace

FunctionSpec differentiate(const FunctionSpec& f) {
    NodePtr d = derive(f.ast());
    std::string text = ast::print(*d);
    return FunctionSpec(std::move(d), std::move(text));
}

} // namespace fracineq
