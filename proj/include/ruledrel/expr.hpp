#pragma once

#include <memory>
#include <string>

#include "ruledrel/jet.hpp"

namespace ruledrel {

// Closed-form expression in the single variable `u`.
//
// Grammar (see README for the EBNF):
//   expr   := term  (('+'|'-') term)*
//   term   := unary (('*'|'/') unary)*
//   unary  := '-' unary | power
//   power  := primary ('^' unary)?            right-associative
//   primary:= number | 'u' | 'pi' | name '(' expr ')' | '(' expr ')'
// with calls limited to sin, cos, tan, exp, log, sqrt.
class Expression {
 public:
  struct Node;
  using NodePtr = std::shared_ptr<const Node>;

  enum class Kind { number, variable, pi, negate, add, sub, mul, div, pow, call };
  enum class Fn { sin, cos, tan, exp, log, sqrt };

  struct Node {
    Kind kind;
    double value = 0.0;           // number
    Fn fn = Fn::sin;              // call
    NodePtr lhs, rhs;             // children (rhs empty for unary)
    std::size_t offset = 0;       // byte position in the source text
  };

  Expression() = default;
  explicit Expression(NodePtr root) : root_(std::move(root)) {}

  const NodePtr& root() const { return root_; }
  bool empty() const { return root_ == nullptr; }

  // Canonical fully parenthesized text; parsing it back gives an identical tree.
  std::string to_string() const;

  bool structurally_equal(const Expression& other) const;

 private:
  NodePtr root_;
};

// Throws ParseError (with byte offset) on malformed input.
Expression parse(const std::string& text);

// Value and derivatives of the expression at u. Throws DomainError with the
// node's source offset on log/sqrt/division violations.
Jet3 eval_jet3(const Expression& expr, double u);

inline double eval(const Expression& expr, double u) { return eval_jet3(expr, u).c0; }

}  // namespace ruledrel
