#include "ladderkit/op_ast.hpp"

namespace ladderkit {

namespace {

constexpr long kMaxFoldExponent = 64;

OpAstPtr make(OpAst node) { return std::make_shared<const OpAst>(std::move(node)); }

}  // namespace

OpAstPtr OpAst::sum(std::vector<OpAstPtr> kids) {
    OpAst n;
    n.kind = Kind::Sum;
    n.children = std::move(kids);
    return make(std::move(n));
}

OpAstPtr OpAst::product(std::vector<OpAstPtr> kids) {
    OpAst n;
    n.kind = Kind::Product;
    n.children = std::move(kids);
    return make(std::move(n));
}

OpAstPtr OpAst::power(OpAstPtr base, Rational e) {
    OpAst n;
    n.kind = Kind::Power;
    n.children = {std::move(base)};
    n.exponent = std::move(e);
    return make(std::move(n));
}

OpAstPtr OpAst::commutator(OpAstPtr a, OpAstPtr b) {
    OpAst n;
    n.kind = Kind::Commutator;
    n.children = {std::move(a), std::move(b)};
    return make(std::move(n));
}

OpAstPtr OpAst::coordinate() {
    OpAst n;
    n.kind = Kind::Coordinate;
    return make(std::move(n));
}

OpAstPtr OpAst::momentum() {
    OpAst n;
    n.kind = Kind::Momentum;
    return make(std::move(n));
}

OpAstPtr OpAst::lit(FunctionFactor f) {
    OpAst n;
    n.kind = Kind::FnLit;
    n.fn = std::move(f);
    return make(std::move(n));
}

OpAstPtr OpAst::lit(Scalar s) {
    OpAst n;
    n.kind = Kind::ScalarLit;
    n.scalar = std::move(s);
    return make(std::move(n));
}

OpAstPtr OpAst::lit(OpExpr e) {
    OpAst n;
    n.kind = Kind::ExprLit;
    n.expr = std::move(e);
    return make(std::move(n));
}

namespace {

// Non-integer or negative powers only make sense for a single
// momentum-free monomial c * f(x) with c a positive rational (so the
// scalar part stays inside the field).
OpExpr monomial_power(const OpExpr& base, const Rational& e) {
    if (base.size() != 1) throw AlgebraError("power of a non-monomial expression");
    const Term& t = base.terms()[0];
    if (t.mom != 0) throw AlgebraError("fractional or negative power of momentum");
    if (!e.is_half_integer()) throw AlgebraError("exponent denominator must be 1 or 2");

    Scalar c;
    if (t.coeff.is_one()) {
        c = Scalar(1);
    } else if (t.coeff.is_rational() && t.coeff.rational_value().is_positive()) {
        const Rational q = t.coeff.rational_value();
        const Rational twice = e * Rational(2);
        // q^(w/2) = sqrt(q)^w
        c = Scalar::sqrt_rational(q).pow_int(twice.to_long());
    } else {
        throw AlgebraError("fractional or negative power of a non-rational coefficient");
    }
    return OpExpr::term(c, t.fn.pow(e), 0);
}

}  // namespace

OpExpr normal_order(const OpAstPtr& ast) {
    switch (ast->kind) {
        case OpAst::Kind::Coordinate:
            return OpExpr::coordinate();
        case OpAst::Kind::Momentum:
            return OpExpr::momentum();
        case OpAst::Kind::FnLit:
            return OpExpr::fn(ast->fn);
        case OpAst::Kind::ScalarLit:
            return OpExpr::scalar(ast->scalar);
        case OpAst::Kind::ExprLit:
            return ast->expr;
        case OpAst::Kind::Sum: {
            OpExpr acc;
            for (const auto& k : ast->children) acc += normal_order(k);
            return acc;
        }
        case OpAst::Kind::Product: {
            OpExpr acc = OpExpr::one();
            for (const auto& k : ast->children) acc *= normal_order(k);
            return acc;
        }
        case OpAst::Kind::Commutator: {
            return OpExpr::commutator(normal_order(ast->children[0]), normal_order(ast->children[1]));
        }
        case OpAst::Kind::Power: {
            const Rational& e = ast->exponent;
            OpExpr base = normal_order(ast->children[0]);
            // A single momentum-free monomial with a foldable coefficient
            // closes under any half-integer exponent without expansion, so
            // no size cap applies to it.
            if (base.size() == 1 && base.terms()[0].mom == 0 &&
                (base.terms()[0].coeff.is_one() ||
                 (base.terms()[0].coeff.is_rational() &&
                  base.terms()[0].coeff.rational_value().is_positive()))) {
                return monomial_power(base, e);
            }
            if (e.is_integer() && !e.is_negative()) {
                // The general case multiplies the base out term by term;
                // cap the exponent so expression size stays bounded.
                if (e > Rational(kMaxFoldExponent)) throw AlgebraError("exponent too large");
                return base.pow_uint(static_cast<unsigned>(e.to_long()));
            }
            return monomial_power(base, e);
        }
    }
    throw AlgebraError("unknown ast node");
}

}  // namespace ladderkit
