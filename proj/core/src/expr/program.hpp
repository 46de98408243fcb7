#pragma once

#include "fracineq/expr.hpp"

#include <vector>

namespace fracineq {

/// Postfix compilation of an expression tree. Each instruction keeps a
/// pointer to its source node so domain errors can name the subexpression.
class Program {
public:
    explicit Program(const NodePtr& root);

    double run(double x) const;

private:
    struct Instr {
        NodeKind op;
        double arg;
        const Node* node;
    };

    void emit(const Node& n);
    [[noreturn]] void fail(double x, const Node* node, const char* what) const;

    NodePtr root_;
    std::vector<Instr> code_;
    std::size_t max_stack_ = 0;
};

} // namespace fracineq
