#pragma once

#include <utility>
#include <vector>

#include "ladderkit/rational.hpp"

namespace ladderkit {

// x^power * exp(gauss*x^2 + linear*x), closed under products and
// differentiation.  Powers may be any rational (half-integers show up in
// the 2D radial systems).
struct FunctionFactor {
    Rational power;
    Rational gauss;
    Rational linear;

    FunctionFactor() = default;
    FunctionFactor(Rational p, Rational g, Rational l)
        : power(std::move(p)), gauss(std::move(g)), linear(std::move(l)) {}

    static FunctionFactor one() { return {}; }
    static FunctionFactor x_pow(const Rational& p) { return {p, Rational(0), Rational(0)}; }

    bool is_one() const { return power.is_zero() && gauss.is_zero() && linear.is_zero(); }

    FunctionFactor operator*(const FunctionFactor& o) const {
        return {power + o.power, gauss + o.gauss, linear + o.linear};
    }

    // f^e, valid on the positive half line for any rational e.
    FunctionFactor pow(const Rational& e) const {
        return {power * e, gauss * e, linear * e};
    }

    // d/dx as a list of (coefficient, factor) pieces; at most three.
    std::vector<std::pair<Rational, FunctionFactor>> derivative() const {
        std::vector<std::pair<Rational, FunctionFactor>> out;
        if (!power.is_zero())
            out.emplace_back(power, FunctionFactor{power - Rational(1), gauss, linear});
        if (!gauss.is_zero())
            out.emplace_back(gauss * Rational(2), FunctionFactor{power + Rational(1), gauss, linear});
        if (!linear.is_zero())
            out.emplace_back(linear, FunctionFactor{power, gauss, linear});
        return out;
    }

    bool operator==(const FunctionFactor& o) const {
        return power == o.power && gauss == o.gauss && linear == o.linear;
    }
    bool operator!=(const FunctionFactor& o) const { return !(*this == o); }

    int cmp(const FunctionFactor& o) const {
        if (int c = power.cmp(o.power)) return c;
        if (int c = gauss.cmp(o.gauss)) return c;
        return linear.cmp(o.linear);
    }
};

}  // namespace ladderkit
