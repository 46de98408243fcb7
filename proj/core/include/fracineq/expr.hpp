#pragma once

// Expression front end: test functions enter the system only as text parsed
// here, so f and f' are always consistent with each other.
//
// Grammar (stable; documented in the CLI help):
//
//   expr     := term   (('+' | '-') term)*
//   term     := unary  (('*' | '/') unary)*
//   unary    := '-' unary | power
//   power    := primary ('^' exponent)?          exponent must be constant
//   exponent := '-'? primary ('^' exponent)?
//   primary  := number | 'x' | 'e' | 'pi'
//             | ('exp' | 'ln' | 'abs') '(' expr ')'
//             | '(' expr ')'
//
// Precedence, tightest first: '^', unary '-', '*' '/', '+' '-'. Binary
// operators are left-associative, '^' is right-associative.

#include <memory>
#include <string>
#include <string_view>

namespace fracineq {

enum class NodeKind { Constant, Variable, Add, Sub, Mul, Div, Pow, Neg, Exp, Ln, Abs };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

/// Immutable expression tree node. `value` is the literal for Constant and
/// the exponent for Pow; unused otherwise. Unary nodes use `lhs` only.
struct Node {
    NodeKind kind;
    double value = 0.0;
    NodePtr lhs;
    NodePtr rhs;
};

namespace ast {

NodePtr constant(double v);
NodePtr variable();
NodePtr add(NodePtr l, NodePtr r);
NodePtr sub(NodePtr l, NodePtr r);
NodePtr mul(NodePtr l, NodePtr r);
NodePtr div(NodePtr l, NodePtr r);
NodePtr pow(NodePtr base, double exponent);
NodePtr neg(NodePtr operand);
NodePtr exp(NodePtr operand);
NodePtr ln(NodePtr operand);
NodePtr abs(NodePtr operand);

bool structurally_equal(const Node& a, const Node& b);
bool contains(const Node& n, NodeKind kind);
std::size_t size(const Node& n);

/// Minimal-parenthesis infix rendering; parse(print(n)) is structurally
/// equal to n. Constants use the shortest round-trip decimal form.
std::string print(const Node& n);

} // namespace ast

class Program;

/// A parsed test function: the tree, its source text, and a compiled
/// postfix program used for fast evaluation. Cheap to copy.
class FunctionSpec {
public:
    FunctionSpec(NodePtr root, std::string source_text);

    const NodePtr& ast() const noexcept { return root_; }
    const std::string& source_text() const noexcept { return source_; }

    /// Canonical text, re-parseable to the same tree.
    std::string to_string() const { return ast::print(*root_); }

    /// Throws EvalError when x is outside the natural domain.
    double operator()(double x) const;

private:
    NodePtr root_;
    std::string source_;
    std::shared_ptr<const Program> program_;
};

/// Throws ParseError (byte offset + expected tokens) on malformed input or
/// unknown identifiers.
FunctionSpec parse(std::string_view text);

/// Symbolic derivative with 0/1 identity and constant folding.
/// Throws UnsupportedError if f contains abs.
FunctionSpec differentiate(const FunctionSpec& f);

double evaluate(const FunctionSpec& f, double x);

/// |g|^q as a new FunctionSpec (just |g| when q == 1).
FunctionSpec abs_power(const FunctionSpec& g, double q);

} // namespace fracineq
