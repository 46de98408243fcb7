#include "program.hpp"

#include "fracineq/error.hpp"

#include <array>
#include <cmath>
#include <string>

namespace fracineq {

Program::Program(const NodePtr& root) : root_(root) {
    emit(*root_);
    std::size_t depth = 0;
    for (const Instr& in : code_) {
        switch (in.op) {
        case NodeKind::Constant:
        case NodeKind::Variable: ++depth; break;
        case NodeKind::Add:
        case NodeKind::Sub:
        case NodeKind::Mul:
        case NodeKind::Div: --depth; break;
        default: break;
        }
        max_stack_ = std::max(max_stack_, depth);
    }
}

void Program::emit(const Node& n) {
    if (n.lhs) emit(*n.lhs);
    if (n.rhs) emit(*n.rhs);
    code_.push_back({n.kind, n.value, &n});
}

void Program::fail(double x, const Node* node, const char* what) const {
    throw EvalError(x, ast::print(*node),
                    std::string(what) + " in '" + ast::print(*node) + "' at x = " + std::to_string(x));
}

double Program::run(double x) const {
    constexpr std::size_t kInline = 64;
    std::array<double, kInline> inline_stack;
    std::vector<double> heap_stack;
    double* stack = inline_stack.data();
    if (max_stack_ > kInline) {
        heap_stack.resize(max_stack_);
        stack = heap_stack.data();
    }

    stack[0] = 0.0;
    std::size_t top = 0;  // number of live entries
    for (const Instr& in : code_) {
        switch (in.op) {
        case NodeKind::Constant: stack[top++] = in.arg; break;
        case NodeKind::Variable: stack[top++] = x; break;
        case NodeKind::Add: --top; stack[top - 1] += stack[top]; break;
        case NodeKind::Sub: --top; stack[top - 1] -= stack[top]; break;
        case NodeKind::Mul: --top; stack[top - 1] *= stack[top]; break;
        case NodeKind::Div:
            --top;
            if (stack[top] == 0.0) fail(x, in.node, "division by zero");
            stack[top - 1] /= stack[top];
            break;
        case NodeKind::Pow: {
            double& b = stack[top - 1];
            if (in.arg == 2.0) {
                b = b * b;
            } else if (in.arg != 1.0) {
                if (b == 0.0 && in.arg < 0.0) fail(x, in.node, "division by zero");
                b = std::pow(b, in.arg);
                if (!std::isfinite(b)) fail(x, in.node, "non-finite power");
            }
            break;
        }
        case NodeKind::Neg: stack[top - 1] = -stack[top - 1]; break;
        case NodeKind::Exp:
            stack[top - 1] = std::exp(stack[top - 1]);
            if (!std::isfinite(stack[top - 1])) fail(x, in.node, "exp overflow");
            break;
        case NodeKind::Ln:
            if (!(stack[top - 1] > 0.0)) fail(x, in.node, "ln of non-positive value");
            stack[top - 1] = std::log(stack[top - 1]);
            break;
        case NodeKind::Abs: stack[top - 1] = std::abs(stack[top - 1]); break;
        }
    }
    const double result = stack[0];
    if (!std::isfinite(result)) fail(x, root_.get(), "non-finite result");
    return result;
}

} // namespace fracineq
