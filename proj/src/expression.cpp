#include "fuzzycausal/expression.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include "fuzzycausal/errors.hpp"

namespace fuzzycausal {

struct Expression::Node {
  enum class Op { Const, Var, Add, Sub, Mul, Div, Neg, Pow };

  Op op = Op::Const;
  double constant = 0.0;
  std::size_t var_index = 0;
  int exponent = 1;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

namespace {

using Node = Expression::Node;
using NodePtr = std::shared_ptr<const Node>;

[[noreturn]] void parse_error(const std::string& text,
                              const std::string& what) {
  std::ostringstream oss;
  oss << "cannot parse expression '" << text << "': " << what;
  raise(ErrorCode::ExpressionError, oss.str());
}

class Parser {
 public:
  Parser(const std::string& text, const std::vector<std::string>& variables)
      : text_(text), variables_(variables) {}

  NodePtr run() {
    skip_ws();
    if (pos_ >= text_.size()) return nullptr;  // empty => 0
    auto node = expr();
    skip_ws();
    if (pos_ < text_.size()) {
      parse_error(text_, "trailing input at position " + std::to_string(pos_));
    }
    return node;
  }

 private:
  NodePtr expr() {
    auto node = term();
    for (;;) {
      skip_ws();
      if (accept('+')) {
        node = binary(Node::Op::Add, node, term());
      } else if (accept('-')) {
        node = binary(Node::Op::Sub, node, term());
      } else {
        return node;
      }
    }
  }

  NodePtr term() {
    auto node = factor();
    for (;;) {
      skip_ws();
      if (accept('*')) {
        node = binary(Node::Op::Mul, node, factor());
      } else if (accept('/')) {
        auto rhs = factor();
        double divisor = 0.0;
        if (!fold_constant(rhs, divisor)) {
          parse_error(text_, "division is only supported by a constant");
        }
        if (divisor == 0.0) parse_error(text_, "division by zero");
        node = binary(Node::Op::Div, node, rhs);
      } else {
        return node;
      }
    }
  }

  NodePtr factor() {
    skip_ws();
    if (accept('-')) {  // negation binds looser than ^: -x^2 == -(x^2)
      auto node = std::make_shared<Node>();
      node->op = Node::Op::Neg;
      node->lhs = factor();
      return node;
    }
    auto base = atom();
    skip_ws();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(text_[pos_])) ++pos_;
      if (pos_ == start) {
        parse_error(text_, "exponent must be a nonnegative integer");
      }
      auto node = std::make_shared<Node>();
      node->op = Node::Op::Pow;
      node->lhs = base;
      node->exponent = std::atoi(text_.substr(start, pos_ - start).c_str());
      return node;
    }
    return base;
  }

  NodePtr atom() {
    skip_ws();
    if (pos_ >= text_.size()) parse_error(text_, "unexpected end of input");
    const char c = text_[pos_];
    if (accept('(')) {
      auto node = expr();
      skip_ws();
      if (!accept(')')) parse_error(text_, "missing ')'");
      return node;
    }
    if (std::isdigit(c) || c == '.') {
      const char* begin = text_.c_str() + pos_;
      char* end = nullptr;
      const double v = std::strtod(begin, &end);
      if (end == begin) parse_error(text_, "bad number");
      pos_ += static_cast<std::size_t>(end - begin);
      auto node = std::make_shared<Node>();
      node->op = Node::Op::Const;
      node->constant = v;
      return node;
    }
    if (std::isalpha(c) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(text_[pos_]) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string name = text_.substr(start, pos_ - start);
      for (std::size_t i = 0; i < variables_.size(); ++i) {
        if (variables_[i] == name) {
          auto node = std::make_shared<Node>();
          node->op = Node::Op::Var;
          node->var_index = i;
          return node;
        }
      }
      parse_error(text_, "unknown variable '" + name +
                             "' (only earlier variables may be referenced)");
    }
    parse_error(text_, std::string("unexpected character '") + c + "'");
  }

  static NodePtr binary(Node::Op op, NodePtr lhs, NodePtr rhs) {
    auto node = std::make_shared<Node>();
    node->op = op;
    node->lhs = std::move(lhs);
    node->rhs = std::move(rhs);
    return node;
  }

  static bool fold_constant(const NodePtr& node, double& out) {
    if (!node) return false;
    switch (node->op) {
      case Node::Op::Const:
        out = node->constant;
        return true;
      case Node::Op::Neg: {
        double v;
        if (!fold_constant(node->lhs, v)) return false;
        out = -v;
        return true;
      }
      default:
        return false;
    }
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(text_[pos_])) ++pos_;
  }

  bool accept(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  const std::string& text_;
  const std::vector<std::string>& variables_;
  std::size_t pos_ = 0;
};

double eval_node(const Node* node, std::span<const double> values) {
  switch (node->op) {
    case Node::Op::Const:
      return node->constant;
    case Node::Op::Var:
      return values[node->var_index];
    case Node::Op::Add:
      return eval_node(node->lhs.get(), values) +
             eval_node(node->rhs.get(), values);
    case Node::Op::Sub:
      return eval_node(node->lhs.get(), values) -
             eval_node(node->rhs.get(), values);
    case Node::Op::Mul:
      return eval_node(node->lhs.get(), values) *
             eval_node(node->rhs.get(), values);
    case Node::Op::Div:
      return eval_node(node->lhs.get(), values) /
             eval_node(node->rhs.get(), values);
    case Node::Op::Neg:
      return -eval_node(node->lhs.get(), values);
    case Node::Op::Pow: {
      const double base = eval_node(node->lhs.get(), values);
      double acc = 1.0;
      for (int k = 0; k < node->exponent; ++k) acc *= base;
      return acc;
    }
  }
  return 0.0;
}

}  // namespace

Expression Expression::parse(const std::string& text,
                             const std::vector<std::string>& variables) {
  Expression e;
  e.text_ = text;
  e.root_ = Parser(text, variables).run();
  return e;
}

double Expression::evaluate(std::span<const double> values) const {
  if (!root_) return 0.0;
  return eval_node(root_.get(), values);
}

}  // namespace fuzzycausal
