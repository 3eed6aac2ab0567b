#include "ladderkit/fn_state.hpp"

namespace ladderkit {

OpExpr derive_with_shift(const OpExpr& h, const Rational& c) {
    if (!h.momentum_free()) throw AlgebraError("derivation applies to momentum-free expressions");
    const Scalar minus_i = -Scalar::i();
    OpExpr out;
    for (const auto& t : h.terms()) {
        for (const auto& [dc, df] : t.fn.derivative())
            out += OpExpr::term(t.coeff * minus_i * Scalar(dc), df, 0);
        if (!c.is_zero())
            out += OpExpr::term(t.coeff * minus_i * Scalar(c),
                                t.fn * FunctionFactor::x_pow(Rational(-1)), 0);
    }
    return out;
}

FnState apply_to_state(const OpExpr& a, const FnState& s) {
    OpExpr acc;
    for (const auto& t : a.terms()) {
        OpExpr cur = s.parts;
        for (int k = 0; k < t.mom; ++k) cur = derive_with_shift(cur, s.shift);
        acc += (OpExpr::term(t.coeff, t.fn, 0) * cur);
    }
    return FnState(std::move(acc), s.shift);
}

}  // namespace ladderkit
