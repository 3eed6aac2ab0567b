#pragma once

#include <memory>
#include <vector>

#include "ladderkit/op_expr.hpp"

namespace ladderkit {

// Unevaluated operator tree.  normal_order() lowers it to the canonical
// OpExpr form; algebraically equal trees lower to identical expressions.
struct OpAst;
using OpAstPtr = std::shared_ptr<const OpAst>;

struct OpAst {
    enum class Kind { Sum, Product, Power, Commutator, Coordinate, Momentum, FnLit, ScalarLit, ExprLit };

    Kind kind;
    std::vector<OpAstPtr> children;
    Rational exponent;   // Power
    FunctionFactor fn;   // FnLit
    Scalar scalar;       // ScalarLit
    OpExpr expr;         // ExprLit (pre-lowered, e.g. system macros)

    static OpAstPtr sum(std::vector<OpAstPtr> kids);
    static OpAstPtr product(std::vector<OpAstPtr> kids);
    static OpAstPtr power(OpAstPtr base, Rational e);
    static OpAstPtr commutator(OpAstPtr a, OpAstPtr b);
    static OpAstPtr coordinate();
    static OpAstPtr momentum();
    static OpAstPtr lit(FunctionFactor f);
    static OpAstPtr lit(Scalar s);
    static OpAstPtr lit(OpExpr e);
};

// Lower to canonical normal-ordered form.  Throws AlgebraError for
// operations outside the representable class (fractional powers of
// non-monomials, oversized exponents, inverse of a sum, ...).
OpExpr normal_order(const OpAstPtr& ast);

}  // namespace ladderkit
