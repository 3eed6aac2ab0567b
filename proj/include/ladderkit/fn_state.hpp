#pragma once

#include "ladderkit/op_expr.hpp"

namespace ladderkit {

// g(x) times the gauge kernel annihilated by (p + i*shift/x).  Acting
// with momentum therefore uses the derivation
//     D_c(h) = -i (h' + c h / x),
// which is exactly the position representation of the radial momentum
// (shift 1 in 3D, 1/2 in 2D, 0 on the line), so `parts` reads directly
// as the radial function.
struct FnState {
    OpExpr parts;  // momentum-free
    Rational shift;

    FnState() = default;
    FnState(OpExpr p, Rational c) : parts(std::move(p)), shift(std::move(c)) {
        if (!parts.momentum_free()) throw AlgebraError("state parts must be momentum-free");
    }

    static FnState kernel_only(const Rational& c) { return FnState(OpExpr::one(), c); }

    bool is_zero() const { return parts.is_zero(); }
    bool operator==(const FnState& o) const { return shift == o.shift && parts == o.parts; }
};

// D_c applied once to a momentum-free expression.
OpExpr derive_with_shift(const OpExpr& h, const Rational& c);

// Apply a normal-ordered operator to a state.
FnState apply_to_state(const OpExpr& a, const FnState& s);

}  // namespace ladderkit
