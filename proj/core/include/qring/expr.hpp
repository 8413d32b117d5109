#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qring/ncpoly.hpp"

namespace qring {

// Canonical expression AST for the workbench grammar:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ['^' signed_int]
//   atom   := INT ['/' INT] | IDENT ['[' INT ',' INT ']']
//           | '[' intlist '|' intlist ']' | '(' expr ')'
// IDENT is [A-Za-z][A-Za-z0-9_]* with optional trailing primes. Canonical
// form: Sum children are non-Sum (signs caried separately, parenthesized
// sums after '-' are spliced with flipped signs), Product children are
// non-Product, rational literals are nonnegative and normalized. With those
// invariants parse(print(ast)) == ast.
enum class ExprKind { Sum, Product, Power, RationalLit, Symbol, Entry, MinorBracket };

struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
    ExprKind kind = ExprKind::RationalLit;

    std::vector<ExprPtr> children;  // Sum, Product
    std::vector<int> signs;         // Sum only, +1/-1 per child

    ExprPtr base;      // Power
    int exponent = 0;  // Power

    Rational value;  // RationalLit, nonnegative

    std::string name;      // Symbol, Entry base
    int row = 0, col = 0;  // Entry

    std::vector<int> rows, cols;  // MinorBracket
};

// Factories enforce the canonical invariants (flattening, sign splicing,
// singleton unwrapping), so ASTs built through them round-trip.
ExprPtr make_rational(Rational v);
ExprPtr make_symbol(std::string name);
ExprPtr make_entry(std::string base, int row, int col);
ExprPtr make_minor(std::vector<int> rows, std::vector<int> cols);
ExprPtr make_power(ExprPtr base, int exponent);
ExprPtr make_product(std::vector<ExprPtr> children);
ExprPtr make_sum(std::vector<int> signs, std::vector<ExprPtr> children);

// Throws ParseError with a position on malformed input.
ExprPtr parse_expression(const std::string& text);

std::string print_expr(const ExprPtr& e);

bool expr_equal(const ExprPtr& a, const ExprPtr& b);

// Evaluates against a presentation: symbols and entries resolve to
// generators by their printed names, then symbols fall back to parameters.
// Minor brackets require a quantum matrix presentation. Negative powers are
// only available on constants (scalar units).
NcPoly eval_in(const ExprPtr& e, const PresentationPtr& pres);

// Scalar-only evaluation; entries and minors are rejected.
Scalar eval_scalar(const ExprPtr& e, const ParamSpacePtr& space);

}  // namespace qring
