#ifndef MONIDEAL_PARSE_HPP
#define MONIDEAL_PARSE_HPP

#include <memory>
#include <string>
#include <vector>

#include "monideal/ideal.hpp"

namespace monideal {

/// Abstract syntax of an ideal expression. Literal holds monomial text;
/// everything is resolved against a declared ring at parse time.
struct IdealExpr {
  enum class Kind { Literal, Product, Power, Intersect, Veronese, Transversal, Radical, Localize };

  Kind kind = Kind::Literal;
  std::vector<std::string> monomials;                   // Literal
  std::vector<std::shared_ptr<IdealExpr>> children;     // Product/Intersect/Radical/Power/Localize
  int exponent = 0;                                     // Power
  int veronese_d = 0;                                   // Veronese
  std::vector<int> veronese_bounds;                     // Veronese
  std::vector<std::vector<std::string>> prime_lists;    // Transversal
  std::vector<std::string> localize_vars;               // Localize

  bool operator==(const IdealExpr& other) const;
};

using ExprPtr = std::shared_ptr<IdealExpr>;

/// Parses a single monomial in the shared grammar:
///   mono := "1" | factor ("*" factor)* ; factor := name ("^" posint)?
Monomial parse_monomial(const std::string& text, const RingPtr& ring);

/// Parses an ideal expression:
///   expr := term ('*' term)*
///   term := atom ('^' posint)?
///   atom := '(' mono (',' mono)* ')' | 'intersect(' expr (',' expr)+ ')'
///         | 'radical(' expr ')' | 'veronese(' posint ';' posint (',' posint)* ')'
///         | 'transversal(' varlist ('|' varlist)* ')' | '(' expr ')'
/// Whitespace is insignificant; unknown variable names are errors.
ExprPtr parse_expr(const std::string& text, const RingPtr& ring);

MonomialIdeal eval(const IdealExpr& expr, const RingPtr& ring);

/// Canonical rendering; render-then-parse yields a structurally equal AST.
std::string render(const IdealExpr& expr);

}  // namespace monideal

#endif
