#include "monideal/parse.hpp"

#include <cctype>
#include <sstream>

#include "monideal/decomposition.hpp"
#include "monideal/errors.hpp"
#include "monideal/localization.hpp"
#include "monideal/polymatroidal.hpp"

namespace monideal {

bool IdealExpr::operator==(const IdealExpr& other) const {
  if (kind != other.kind || monomials != other.monomials || exponent != other.exponent ||
      veronese_d != other.veronese_d || veronese_bounds != other.veronese_bounds ||
      prime_lists != other.prime_lists || localize_vars != other.localize_vars)
    return false;
  if (children.size() != other.children.size()) return false;
  for (size_t i = 0; i < children.size(); ++i)
    if (!(*children[i] == *other.children[i])) return false;
  return true;
}

namespace {

struct Token {
  enum class Type { Name, Number, Symbol, End };
  Type type = Type::End;
  std::string text;
  int value = 0;
  int column = 0;  // 1-based
};

class Lexer {
 public:
  explicit Lexer(const std::string& input) : input_(input) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, 1, current_.column);
  }

 private:
  void advance() {
    while (pos_ < input_.size() && std::isspace(static_cast<unsigned char>(input_[pos_]))) ++pos_;
    current_.column = static_cast<int>(pos_) + 1;
    if (pos_ >= input_.size()) {
      current_.type = Token::Type::End;
      current_.text.clear();
      return;
    }
    char c = input_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < input_.size() &&
             (std::isalnum(static_cast<unsigned char>(input_[pos_])) || input_[pos_] == '_'))
        ++pos_;
      current_.type = Token::Type::Name;
      current_.text = input_.substr(start, pos_ - start);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < input_.size() && std::isdigit(static_cast<unsigned char>(input_[pos_]))) ++pos_;
      current_.type = Token::Type::Number;
      current_.text = input_.substr(start, pos_ - start);
      if (current_.text.size() > 6)
        throw ParseError("number too large", 1, current_.column);
      current_.value = std::stoi(current_.text);
    } else {
      current_.type = Token::Type::Symbol;
      current_.text = std::string(1, c);
      ++pos_;
    }
  }

  const std::string& input_;
  size_t pos_ = 0;
  Token current_;
};

class Parser {
 public:
  Parser(const std::string& input, RingPtr ring)
      : input_(input), lexer_(input), ring_(std::move(ring)) {}

  ExprPtr parse() {
    ExprPtr expr = parse_expr();
    if (lexer_.peek().type != Token::Type::End) lexer_.fail("trailing input");
    return expr;
  }

  std::vector<std::string> parse_bare_monomial() {
    auto mono = parse_mono();
    if (lexer_.peek().type != Token::Type::End) lexer_.fail("trailing input");
    return {mono};
  }

 private:
  bool at_symbol(const std::string& s) const {
    return lexer_.peek().type == Token::Type::Symbol && lexer_.peek().text == s;
  }

  void expect_symbol(const std::string& s) {
    if (!at_symbol(s)) lexer_.fail("expected '" + s + "'");
    lexer_.take();
  }

  int expect_posint() {
    if (lexer_.peek().type != Token::Type::Number) lexer_.fail("expected a positive integer");
    Token t = lexer_.take();
    if (t.value < 1) throw ParseError("expected a positive integer", 1, t.column);
    return t.value;
  }

  std::string expect_var_name() {
    if (lexer_.peek().type != Token::Type::Name) lexer_.fail("expected a variable name");
    Token t = lexer_.take();
    if (ring_->index_of(t.text) == 0)
      throw ParseError("unknown variable '" + t.text + "'", 1, t.column);
    return t.text;
  }

  ExprPtr parse_expr() {
    ExprPtr left = parse_term();
    while (at_symbol("*")) {
      lexer_.take();
      ExprPtr right = parse_term();
      auto node = std::make_shared<IdealExpr>();
      node->kind = IdealExpr::Kind::Product;
      node->children = {std::move(left), std::move(right)};
      left = std::move(node);
    }
    return left;
  }

  ExprPtr parse_term() {
    ExprPtr base = parse_atom();
    if (at_symbol("^")) {
      Token caret = lexer_.take();
      (void)caret;
      int k = expect_posint();
      auto node = std::make_shared<IdealExpr>();
      node->kind = IdealExpr::Kind::Power;
      node->children = {std::move(base)};
      node->exponent = k;
      return node;
    }
    return base;
  }

  ExprPtr parse_atom() {
    const Token& tok = lexer_.peek();
    if (tok.type == Token::Type::Name) {
      if (tok.text == "intersect") return parse_intersect();
      if (tok.text == "radical") return parse_radical();
      if (tok.text == "veronese") return parse_veronese();
      if (tok.text == "transversal") return parse_transversal();
      lexer_.fail("unexpected name '" + tok.text + "'");
    }
    if (!at_symbol("(")) lexer_.fail("expected '('");

    // '(' starts either a monomial-list literal or a parenthesized
    // expression; scan ahead to the matching ')' to decide.
    if (literal_ahead()) return parse_literal();
    lexer_.take();
    ExprPtr inner = parse_expr();
    expect_symbol(")");
    return inner;
  }

  // True when the parenthesized group contains only monomial-list tokens
  // (names, numbers, '*', '^', ',') with no nesting.
  bool literal_ahead() const {
    size_t pos = static_cast<size_t>(lexer_.peek().column);  // past '('
    int seen_alnum = 0;
    for (; pos < input_.size(); ++pos) {
      char c = input_[pos];
      if (c == ')') return seen_alnum > 0;
      if (c == '(') return false;
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
        ++seen_alnum;
        continue;
      }
      if (c == '*' || c == '^' || c == ',' || std::isspace(static_cast<unsigned char>(c))) continue;
      return false;
    }
    return false;
  }

  ExprPtr parse_literal() {
    expect_symbol("(");
    auto node = std::make_shared<IdealExpr>();
    node->kind = IdealExpr::Kind::Literal;
    node->monomials.push_back(parse_mono());
    while (at_symbol(",")) {
      lexer_.take();
      node->monomials.push_back(parse_mono());
    }
    expect_symbol(")");
    return node;
  }

  std::string parse_mono() {
    if (lexer_.peek().type == Token::Type::Number) {
      Token t = lexer_.take();
      if (t.value != 1) throw ParseError("only the unit monomial '1' is allowed", 1, t.column);
      return "1";
    }
    std::ostringstream text;
    text << parse_factor();
    while (at_symbol("*")) {
      lexer_.take();
      text << "*" << parse_factor();
    }
    return text.str();
  }

  std::string parse_factor() {
    std::string name = expect_var_name();
    if (at_symbol("^")) {
      lexer_.take();
      int e = expect_posint();
      return name + "^" + std::to_string(e);
    }
    return name;
  }

  ExprPtr parse_intersect() {
    lexer_.take();
    expect_symbol("(");
    auto node = std::make_shared<IdealExpr>();
    node->kind = IdealExpr::Kind::Intersect;
    node->children.push_back(parse_expr());
    while (at_symbol(",")) {
      lexer_.take();
      node->children.push_back(parse_expr());
    }
    if (node->children.size() < 2) lexer_.fail("intersect needs at least two arguments");
    expect_symbol(")");
    return node;
  }

  ExprPtr parse_radical() {
    lexer_.take();
    expect_symbol("(");
    auto node = std::make_shared<IdealExpr>();
    node->kind = IdealExpr::Kind::Radical;
    node->children.push_back(parse_expr());
    expect_symbol(")");
    return node;
  }

  ExprPtr parse_veronese() {
    lexer_.take();
    expect_symbol("(");
    auto node = std::make_shared<IdealExpr>();
    node->kind = IdealExpr::Kind::Veronese;
    node->veronese_d = expect_posint();
    expect_symbol(";");
    node->veronese_bounds.push_back(expect_posint());
    while (at_symbol(",")) {
      lexer_.take();
      node->veronese_bounds.push_back(expect_posint());
    }
    expect_symbol(")");
    return node;
  }

  ExprPtr parse_transversal() {
    lexer_.take();
    expect_symbol("(");
    auto node = std::make_shared<IdealExpr>();
    node->kind = IdealExpr::Kind::Transversal;
    node->prime_lists.push_back(parse_varlist());
    while (at_symbol("|")) {
      lexer_.take();
      node->prime_lists.push_back(parse_varlist());
    }
    expect_symbol(")");
    return node;
  }

  std::vector<std::string> parse_varlist() {
    std::vector<std::string> vars;
    vars.push_back(expect_var_name());
    while (at_symbol(",")) {
      lexer_.take();
      vars.push_back(expect_var_name());
    }
    return vars;
  }

  const std::string& input_;
  Lexer lexer_;
  RingPtr ring_;
};

}  // namespace

Monomial parse_monomial(const std::string& text, const RingPtr& ring) {
  Lexer lexer(text);
  std::vector<int> exps(static_cast<size_t>(ring->n), 0);
  if (lexer.peek().type == Token::Type::Number) {
    Token t = lexer.take();
    if (t.value != 1) throw ParseError("only the unit monomial '1' is allowed", 1, t.column);
    if (lexer.peek().type != Token::Type::End) lexer.fail("trailing input");
    return Monomial(ring, std::move(exps));
  }
  while (true) {
    if (lexer.peek().type != Token::Type::Name) lexer.fail("expected a variable name");
    Token name = lexer.take();
    int index = ring->index_of(name.text);
    if (index == 0) throw ParseError("unknown variable '" + name.text + "'", 1, name.column);
    int e = 1;
    if (lexer.peek().type == Token::Type::Symbol && lexer.peek().text == "^") {
      lexer.take();
      if (lexer.peek().type != Token::Type::Number) lexer.fail("expected a positive integer");
      Token num = lexer.take();
      if (num.value < 1) throw ParseError("exponent must be positive", 1, num.column);
      e = num.value;
    }
    exps[static_cast<size_t>(index) - 1] += e;
    if (lexer.peek().type == Token::Type::Symbol && lexer.peek().text == "*") {
      lexer.take();
      continue;
    }
    break;
  }
  if (lexer.peek().type != Token::Type::End) lexer.fail("trailing input");
  return Monomial(ring, std::move(exps));
}

ExprPtr parse_expr(const std::string& text, const RingPtr& ring) {
  return Parser(text, ring).parse();
}

MonomialIdeal eval(const IdealExpr& expr, const RingPtr& ring) {
  switch (expr.kind) {
    case IdealExpr::Kind::Literal: {
      std::vector<Monomial> gens;
      gens.reserve(expr.monomials.size());
      for (const auto& text : expr.monomials) gens.push_back(parse_monomial(text, ring));
      return MonomialIdeal::minimize(ring, std::move(gens));
    }
    case IdealExpr::Kind::Product:
      return product(eval(*expr.children[0], ring), eval(*expr.children[1], ring));
    case IdealExpr::Kind::Power:
      return power(eval(*expr.children[0], ring), expr.exponent);
    case IdealExpr::Kind::Intersect: {
      MonomialIdeal result = eval(*expr.children[0], ring);
      for (size_t i = 1; i < expr.children.size(); ++i)
        result = intersect(result, eval(*expr.children[i], ring));
      return result;
    }
    case IdealExpr::Kind::Radical:
      return radical(eval(*expr.children[0], ring));
    case IdealExpr::Kind::Veronese:
      return veronese(VeroneseParams{expr.veronese_d, expr.veronese_bounds}, ring);
    case IdealExpr::Kind::Transversal: {
      TransversalSpec spec;
      for (const auto& names : expr.prime_lists) {
        std::vector<int> vars;
        vars.reserve(names.size());
        for (const auto& name : names) vars.push_back(ring->index_of(name));
        spec.primes.emplace_back(ring, std::move(vars));
      }
      return transversal_ideal(spec);
    }
    case IdealExpr::Kind::Localize: {
      MonomialIdeal inner = eval(*expr.children[0], ring);
      std::vector<int> vars;
      vars.reserve(expr.localize_vars.size());
      for (const auto& name : expr.localize_vars) {
        int index = ring->index_of(name);
        if (index == 0) throw ParseError("unknown variable '" + name + "'", 1, 1);
        vars.push_back(index);
      }
      return localize(inner, MonomialPrime(ring, std::move(vars))).ideal;
    }
  }
  throw std::logic_error("unreachable");
}

namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::ostringstream out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out << sep;
    out << parts[i];
  }
  return out.str();
}

}  // namespace

std::string render(const IdealExpr& expr) {
  switch (expr.kind) {
    case IdealExpr::Kind::Literal:
      return "(" + join(expr.monomials, ", ") + ")";
    case IdealExpr::Kind::Product:
      return "(" + render(*expr.children[0]) + " * " + render(*expr.children[1]) + ")";
    case IdealExpr::Kind::Power:
      return "(" + render(*expr.children[0]) + ")^" + std::to_string(expr.exponent);
    case IdealExpr::Kind::Intersect: {
      std::vector<std::string> parts;
      parts.reserve(expr.children.size());
      for (const auto& child : expr.children) parts.push_back(render(*child));
      return "intersect(" + join(parts, ", ") + ")";
    }
    case IdealExpr::Kind::Radical:
      return "radical(" + render(*expr.children[0]) + ")";
    case IdealExpr::Kind::Veronese: {
      std::vector<std::string> bounds;
      for (int a : expr.veronese_bounds) bounds.push_back(std::to_string(a));
      return "veronese(" + std::to_string(expr.veronese_d) + "; " + join(bounds, ", ") + ")";
    }
    case IdealExpr::Kind::Transversal: {
      std::vector<std::string> lists;
      for (const auto& names : expr.prime_lists) lists.push_back(join(names, ", "));
      return "transversal(" + join(lists, " | ") + ")";
    }
    case IdealExpr::Kind::Localize:
      return render(*expr.children[0]);  // localization has no surface syntax
  }
  return "";
}

}  // namespace monideal
