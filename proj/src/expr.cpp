#include "ruledrel/expr.hpp"

#include <cctype>
#include <cstdlib>
#include <map>
#include <sstream>

#include "ruledrel/errors.hpp"

namespace ruledrel {

namespace {

using Node = Expression::Node;
using NodePtr = Expression::NodePtr;
using Kind = Expression::Kind;
using Fn = Expression::Fn;

const std::map<std::string, Fn>& function_table() {
  static const std::map<std::string, Fn> table = {
      {"sin", Fn::sin}, {"cos", Fn::cos}, {"tan", Fn::tan},
      {"exp", Fn::exp}, {"log", Fn::log}, {"sqrt", Fn::sqrt},
  };
  return table;
}

const char* function_name(Fn fn) {
  switch (fn) {
    case Fn::sin: return "sin";
    case Fn::cos: return "cos";
    case Fn::tan: return "tan";
    case Fn::exp: return "exp";
    case Fn::log: return "log";
    case Fn::sqrt: return "sqrt";
  }
  return "?";
}

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  NodePtr run() {
    if (text_.empty()) throw ParseError("empty expression", 0);
    NodePtr e = expression();
    skip_space();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    return e;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
  }

  NodePtr make(Kind kind, std::size_t offset, NodePtr lhs = nullptr, NodePtr rhs = nullptr) {
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->offset = offset;
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    return n;
  }

  NodePtr expression() {
    NodePtr lhs = term();
    for (;;) {
      const std::size_t at = pos_;
      if (accept('+')) lhs = make(Kind::add, at, lhs, term());
      else if (accept('-')) lhs = make(Kind::sub, at, lhs, term());
      else return lhs;
    }
  }

  NodePtr term() {
    NodePtr lhs = unary();
    for (;;) {
      const std::size_t at = pos_;
      if (accept('*')) lhs = make(Kind::mul, at, lhs, unary());
      else if (accept('/')) lhs = make(Kind::div, at, lhs, unary());
      else return lhs;
    }
  }

  NodePtr unary() {
    const std::size_t at = pos_;
    if (accept('-')) return make(Kind::negate, at, unary());
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    const std::size_t at = pos_;
    if (accept('^')) return make(Kind::pow, at, base, unary());
    return base;
  }

  NodePtr primary() {
    const char c = peek();
    const std::size_t at = pos_;
    if (c == '(') {
      ++pos_;
      NodePtr e = expression();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    if (c == '\0') throw ParseError("unexpected end of input", at);
    throw ParseError(std::string("unexpected character '") + c + "'", at);
  }

  NodePtr number() {
    const std::size_t at = pos_;
    std::size_t i = pos_;
    while (i < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i]))) ++i;
    if (i < text_.size() && text_[i] == '.') {
      ++i;
      while (i < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i]))) ++i;
    }
    if (i < text_.size() && (text_[i] == 'e' || text_[i] == 'E')) {
      std::size_t j = i + 1;
      if (j < text_.size() && (text_[j] == '+' || text_[j] == '-')) ++j;
      if (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) {
        i = j;
        while (i < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i]))) ++i;
      }
    }
    const std::string token = text_.substr(at, i - at);
    char* end = nullptr;
    const double value = std::strtod(token.c_str(), &end);
    if (end == token.c_str() || *end != '\0') throw ParseError("malformed number", at);
    pos_ = i;
    auto n = make(Kind::number, at);
    const_cast<Node*>(n.get())->value = value;
    return n;
  }

  NodePtr identifier() {
    const std::size_t at = pos_;
    std::size_t i = pos_;
    while (i < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[i])) || text_[i] == '_'))
      ++i;
    const std::string name = text_.substr(at, i - at);
    pos_ = i;
    if (name == "u") return make(Kind::variable, at);
    if (name == "pi") return make(Kind::pi, at);
    const auto& table = function_table();
    auto it = table.find(name);
    if (it == table.end()) throw ParseError("unknown identifier '" + name + "'", at);
    expect('(');
    NodePtr arg = expression();
    if (peek() == ',') throw ParseError(function_name(it->second) + std::string(" takes one argument"), pos_);
    expect(')');
    auto n = make(Kind::call, at, arg);
    const_cast<Node*>(n.get())->fn = it->second;
    return n;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

void print(const NodePtr& n, std::ostream& os) {
  switch (n->kind) {
    case Kind::number: {
      std::ostringstream tmp;
      tmp.precision(17);
      tmp << n->value;
      std::string s = tmp.str();
      if (n->value < 0) os << "(" << s << ")";
      else os << s;
      return;
    }
    case Kind::variable: os << "u"; return;
    case Kind::pi: os << "pi"; return;
    case Kind::negate: os << "(-"; print(n->lhs, os); os << ")"; return;
    case Kind::add: os << "("; print(n->lhs, os); os << " + "; print(n->rhs, os); os << ")"; return;
    case Kind::sub: os << "("; print(n->lhs, os); os << " - "; print(n->rhs, os); os << ")"; return;
    case Kind::mul: os << "("; print(n->lhs, os); os << " * "; print(n->rhs, os); os << ")"; return;
    case Kind::div: os << "("; print(n->lhs, os); os << " / "; print(n->rhs, os); os << ")"; return;
    case Kind::pow: os << "("; print(n->lhs, os); os << " ^ "; print(n->rhs, os); os << ")"; return;
    case Kind::call:
      os << function_name(n->fn) << "(";
      print(n->lhs, os);
      os << ")";
      return;
  }
}

bool equal(const NodePtr& a, const NodePtr& b) {
  if (a == nullptr || b == nullptr) return a == b;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Kind::number: return a->value == b->value;
    case Kind::variable:
    case Kind::pi: return true;
    case Kind::negate: return equal(a->lhs, b->lhs);
    case Kind::call: return a->fn == b->fn && equal(a->lhs, b->lhs);
    default: return equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs);
  }
}

Jet3 eval_node(const NodePtr& n, double u) {
  switch (n->kind) {
    case Kind::number: return Jet3::constant(n->value);
    case Kind::variable: return Jet3::variable(u);
    case Kind::pi: return Jet3::constant(3.14159265358979323846);
    case Kind::negate: return -eval_node(n->lhs, u);
    case Kind::add: return eval_node(n->lhs, u) + eval_node(n->rhs, u);
    case Kind::sub: return eval_node(n->lhs, u) - eval_node(n->rhs, u);
    case Kind::mul: return eval_node(n->lhs, u) * eval_node(n->rhs, u);
    case Kind::div: {
      const Jet3 a = eval_node(n->lhs, u);
      const Jet3 b = eval_node(n->rhs, u);
      try {
        return a / b;
      } catch (const DomainError& err) {
        throw DomainError(std::string(err.what()) + " at expression byte " +
                          std::to_string(n->offset));
      }
    }
    case Kind::pow: {
      const Jet3 a = eval_node(n->lhs, u);
      const Jet3 b = eval_node(n->rhs, u);
      try {
        return pow(a, b);
      } catch (const DomainError& err) {
        throw DomainError(std::string(err.what()) + " at expression byte " +
                          std::to_string(n->offset));
      }
    }
    case Kind::call: {
      const Jet3 a = eval_node(n->lhs, u);
      try {
        switch (n->fn) {
          case Fn::sin: return sin(a);
          case Fn::cos: return cos(a);
          case Fn::tan: return tan(a);
          case Fn::exp: return exp(a);
          case Fn::log: return log(a);
          case Fn::sqrt: return sqrt(a);
        }
      } catch (const DomainError& err) {
        throw DomainError(std::string(err.what()) + " at expression byte " +
                          std::to_string(n->offset));
      }
      break;
    }
  }
  throw DomainError("malformed expression tree");
}

}  // namespace

std::string Expression::to_string() const {
  if (!root_) return "";
  std::ostringstream os;
  print(root_, os);
  return os.str();
}

bool Expression::structurally_equal(const Expression& other) const {
  return equal(root_, other.root());
}

Expression parse(const std::string& text) { return Expression(Parser(text).run()); }

Jet3 eval_jet3(const Expression& expr, double u) {
  if (expr.empty()) throw DomainError("empty expression");
  return eval_node(expr.root(), u);
}

}  // namespace ruledrel
