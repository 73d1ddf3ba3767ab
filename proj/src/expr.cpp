#include "cliff/expr.hpp"

#include <cctype>

#include "cliff/errors.hpp"

namespace cliff::expr {

namespace {

class Parser {
 public:
  Parser(const std::string& text, Mode mode) : text_(text), mode_(mode) {}

  ExprPtr run() {
    skip_ws();
    if (pos_ == text_.size()) throw SyntaxError("empty expression", 0);
    ExprPtr root = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) throw SyntaxError("unexpected trailing input", pos_);
    return root;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  ExprPtr parse_expr() {
    ExprPtr node = parse_term();
    for (;;) {
      if (accept('+')) {
        auto sum = std::make_unique<ExprNode>();
        sum->kind = ExprNode::Kind::Add;
        sum->lhs = std::move(node);
        sum->rhs = parse_term();
        node = std::move(sum);
      } else if (accept('-')) {
        auto diff = std::make_unique<ExprNode>();
        diff->kind = ExprNode::Kind::Sub;
        diff->lhs = std::move(node);
        diff->rhs = parse_term();
        node = std::move(diff);
      } else {
        return node;
      }
    }
  }

  ExprPtr parse_term() {
    const bool negated = accept('-');
    ExprPtr node = parse_factor();
    while (accept('*')) {
      auto prod = std::make_unique<ExprNode>();
      prod->kind = ExprNode::Kind::Mul;
      prod->lhs = std::move(node);
      prod->rhs = parse_factor();
      node = std::move(prod);
    }
    if (negated) {
      auto neg = std::make_unique<ExprNode>();
      neg->kind = ExprNode::Kind::Negate;
      neg->lhs = std::move(node);
      node = std::move(neg);
    }
    return node;
  }

  ExprPtr parse_factor() {
    ExprPtr node = parse_atom();
    if (accept('^')) {
      auto pow = std::make_unique<ExprNode>();
      pow->kind = ExprNode::Kind::Pow;
      pow->lhs = std::move(node);
      pow->exponent = parse_uint("exponent");
      node = std::move(pow);
    }
    return node;
  }

  ExprPtr parse_atom() {
    skip_ws();
    if (pos_ == text_.size()) throw SyntaxError("expected value", pos_);
    const char c = text_[pos_];
    if (c == '(') {
      const std::size_t open = pos_;
      ++pos_;
      ExprPtr inner = parse_expr();
      if (!accept(')')) throw SyntaxError("unclosed parenthesis", open);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return parse_rational();
    if (std::isalpha(static_cast<unsigned char>(c))) return parse_symbol();
    throw SyntaxError("unexpected character", pos_);
  }

  std::uint64_t parse_uint(const char* what) {
    skip_ws();
    const std::size_t start = pos_;
    std::uint64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const std::uint64_t digit = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > (UINT64_MAX - digit) / 10)
        throw SyntaxError(std::string(what) + " too large", start);
      value = value * 10 + digit;
      ++pos_;
    }
    if (pos_ == start) throw SyntaxError(std::string("expected ") + what, pos_);
    return value;
  }

  ExprPtr parse_rational() {
    const std::size_t start = pos_;
    std::string num;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      num += text_[pos_++];
    std::string den = "1";
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      const std::size_t den_start = pos_;
      den.clear();
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        den += text_[pos_++];
      if (den.empty()) throw SyntaxError("expected denominator", pos_);
      if (den.find_first_not_of('0') == std::string::npos)
        throw SyntaxError("zero denominator", den_start);
    }
    auto node = std::make_unique<ExprNode>();
    node->kind = ExprNode::Kind::RationalLit;
    if (!rat_from_string(num + "/" + den, node->value))
      throw SyntaxError("malformed rational", start);
    return node;
  }

  ExprPtr parse_symbol() {
    const std::size_t start = pos_;
    std::string name;
    while (pos_ < text_.size() &&
           std::isalnum(static_cast<unsigned char>(text_[pos_])))
      name += text_[pos_++];

    auto node = std::make_unique<ExprNode>();
    if (mode_ == Mode::Cl23) {
      if (name == "i") {
        node->kind = ExprNode::Kind::Pseudoscalar;
        return node;
      }
      if (name.size() == 2 && name[0] == 'e' && name[1] >= '0' && name[1] <= '4') {
        node->kind = ExprNode::Kind::Generator;
        node->generator_index = name[1] - '0';
        return node;
      }
    } else {
      if (name == "I") {
        node->kind = ExprNode::Kind::Pseudoscalar;
        return node;
      }
      if (name.size() == 6 && name.compare(0, 5, "gamma") == 0 && name[5] >= '0' &&
          name[5] <= '3') {
        node->kind = ExprNode::Kind::Generator;
        node->generator_index = name[5] - '0';
        return node;
      }
    }
    throw UnknownSymbol(name, start);
  }

  const std::string& text_;
  Mode mode_;
  std::size_t pos_ = 0;
};

Multivector eval_node(const ExprNode& node, const Signature& sig) {
  switch (node.kind) {
    case ExprNode::Kind::RationalLit:
      return Multivector::scalar(sig, node.value);
    case ExprNode::Kind::Generator:
      return Multivector::basis_vector(sig, node.generator_index);
    case ExprNode::Kind::Pseudoscalar:
      return Multivector::pseudoscalar(sig);
    case ExprNode::Kind::Negate:
      return -eval_node(*node.lhs, sig);
    case ExprNode::Kind::Add:
      return eval_node(*node.lhs, sig) + eval_node(*node.rhs, sig);
    case ExprNode::Kind::Sub:
      return eval_node(*node.lhs, sig) - eval_node(*node.rhs, sig);
    case ExprNode::Kind::Mul:
      return eval_node(*node.lhs, sig) * eval_node(*node.rhs, sig);
    case ExprNode::Kind::Pow: {
      Multivector base = eval_node(*node.lhs, sig);
      Multivector acc = Multivector::scalar(sig, 1);
      std::uint64_t e = node.exponent;
      while (e > 0) {  // square and multiply
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
      }
      return acc;
    }
  }
  throw Error("corrupt expression tree");
}

}  // namespace

ExprAst parse(const std::string& text, Mode mode) {
  Parser parser(text, mode);
  return ExprAst{mode, parser.run()};
}

Multivector evaluate(const ExprAst& ast) {
  // cl13c generators live in the trivially embedded copy: gamma_mu acts as
  // e_mu and the imaginary unit as the central pseudoscalar.
  return eval_node(*ast.root, Signature::cl23());
}

std::string render(const Multivector& m) { return m.to_expression_string(); }

}  // namespace cliff::expr
