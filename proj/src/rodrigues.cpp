#include "ladderkit/rodrigues.hpp"

namespace ladderkit {

namespace {

// Read off a momentum-free operator as a polynomial in u = scale*x^xpow.
Polynomial collect(const OpExpr& e, const PolyArg& arg) {
    std::vector<Scalar> coeffs;
    for (const auto& t : e.terms()) {
        if (t.mom != 0 || !t.fn.gauss.is_zero() || !t.fn.linear.is_zero())
            throw NonPolynomialResidue("commutator route left a non-polynomial term");
        if (!t.fn.power.is_integer() || t.fn.power.is_negative())
            throw NonPolynomialResidue("residue power " + t.fn.power.str() +
                                       " is not a non-negative integer");
        const long px = t.fn.power.to_long();
        if (px % arg.xpow != 0)
            throw NonPolynomialResidue("residue power not a multiple of the argument power");
        const long j = px / arg.xpow;
        if (static_cast<long>(coeffs.size()) <= j) coeffs.resize(j + 1);
        coeffs[j] = t.coeff * Scalar(arg.scale.inverse().pow_int(j));
    }
    return Polynomial(std::move(coeffs), arg);
}

Polynomial hermite_route(long n) {
    const PolyArg arg{1, Rational(1), "x"};
    OpExpr b = OpExpr::fn(FunctionFactor{Rational(0), Rational(-1), Rational(0)});
    const OpExpr p = OpExpr::momentum();
    for (long j = 0; j < n; ++j) b = OpExpr::commutator(p, b);
    const OpExpr res =
        (OpExpr::fn(FunctionFactor{Rational(0), Rational(1), Rational(0)}) * b)
            .scaled(Scalar::i_pow(-n));
    return collect(res, arg);
}

// Oscillators run on d/du = (1/2x) d/dx, realized as the commutator with
// J = (i/2) x^(-1) p.
Polynomial oscillator_route(long k, const Rational& weight_pow, const Rational& unwrap_pow,
                            const PolyArg& arg) {
    const OpExpr j_op = OpExpr::term(Scalar::i() * Scalar(Rational(1, 2)),
                                     FunctionFactor::x_pow(Rational(-1)), 1);
    OpExpr b = OpExpr::fn(FunctionFactor{weight_pow, Rational(-1), Rational(0)});
    for (long s = 0; s < k; ++s) b = OpExpr::commutator(j_op, b);
    const OpExpr res = (OpExpr::fn(FunctionFactor{unwrap_pow, Rational(1), Rational(0)}) * b)
                           .scaled(Scalar(Rational(factorial(k))).inverse());
    return collect(res, arg);
}

// Coulomb chains interleave the wrap exponentials with the commutators;
// the exponentials telescope and cancel exactly against the final wrap.
Polynomial coulomb3d_route(long n, long l) {
    const long k = n - l - 1;
    const PolyArg arg{1, Rational(2, n), "2x/n"};
    if (k == 0) return Polynomial::constant(Scalar(1), arg);
    const OpExpr p = OpExpr::momentum();
    OpExpr t = OpExpr::commutator(
        p, OpExpr::fn(FunctionFactor{Rational(2 * n - 1), Rational(0),
                                     -Rational(2 * n - 1, n * (n - 1))}));
    for (long i = 2; i <= k; ++i) {
        const FunctionFactor wrap{Rational(-1), Rational(0),
                                  -Rational(1, (n - i) * (n - i + 1))};
        t = OpExpr::commutator(p, OpExpr::fn(wrap) * t);
    }
    const FunctionFactor unwrap{Rational(k - l - 1 - n), Rational(0),
                                Rational(1, l + 1) + Rational(1, n)};
    const mpz_class num = factorial(n + l) * factorial(n - 1);
    const mpz_class den = factorial(2 * n - 1) * factorial(l) * factorial(k);
    const Scalar total =
        Scalar::i_pow(k) * Scalar(Rational(2)).pow_int(k) * Scalar(Rational(num, den));
    return collect((OpExpr::fn(unwrap) * t).scaled(total), arg);
}

Polynomial coulomb2d_route(long k, long m) {
    const Rational nhalf = Rational(m + k) + Rational(1, 2);  // n - 1/2
    const PolyArg arg{1, Rational(4, 2 * (m + k) + 1), "2x/(n-1/2)"};
    if (k == 0) return Polynomial::constant(Scalar(1), arg);
    const OpExpr p = OpExpr::momentum();
    OpExpr t = OpExpr::fn(
        FunctionFactor{Rational(2 * m + 2 * k + 1), Rational(0), -(nhalf.inverse() * 2)});
    for (long i = 1; i <= k; ++i) {
        const Rational d1 = Rational(m + k - i) + Rational(1, 2);
        const FunctionFactor wrap{Rational(-1), Rational(0), -(d1 * (d1 + 1)).inverse()};
        t = OpExpr::commutator(p, OpExpr::fn(wrap) * t);
    }
    const Rational mhalf = Rational(m) + Rational(1, 2);
    const FunctionFactor unwrap{Rational(-2 * m - 1), Rational(0),
                                Rational(2 * m + k + 1) * (mhalf * nhalf).inverse()};
    const mpz_class num = factorial(2 * m + k);
    const mpz_class den = factorial(k) * double_factorial(2 * m - 1) * double_factorial(2 * m + 2 * k);
    const Scalar total = Scalar::i_pow(k) * Scalar(Rational(num, den));
    return collect((OpExpr::fn(unwrap) * t).scaled(total), arg);
}

}  // namespace

PolyArg polynomial_argument(SystemId id, const QuantumNumbers& qn) {
    switch (id) {
        case SystemId::sho1d:
            return {1, Rational(1), "x"};
        case SystemId::osc2d:
        case SystemId::osc3d:
            return {2, Rational(1), "x2"};
        case SystemId::coul3d:
            return {1, Rational(2, qn.level + qn.k + 1), "2x/n"};
        case SystemId::coul2d:
            return {1, Rational(4, 2 * (qn.level + qn.k) + 1), "2x/(n-1/2)"};
    }
    throw Error("unknown system");
}

Rational laguerre_alpha(SystemId id, long level) {
    switch (id) {
        case SystemId::sho1d:
            throw DomainError("the line carries Hermite, not Laguerre, polynomials");
        case SystemId::osc2d:
            return Rational(level);
        case SystemId::osc3d:
            return Rational(level) + Rational(1, 2);
        case SystemId::coul2d:
            return Rational(2 * level);
        case SystemId::coul3d:
            return Rational(2 * level + 1);
    }
    throw Error("unknown system");
}

Polynomial reference_polynomial(SystemId id, const QuantumNumbers& qn) {
    if (!valid_qn(id, qn)) throw DomainError("invalid quantum numbers");
    if (id == SystemId::sho1d) return hermite(static_cast<unsigned>(qn.k));
    return laguerre(static_cast<unsigned>(qn.k), laguerre_alpha(id, qn.level),
                    polynomial_argument(id, qn));
}

Polynomial rodrigues_polynomial(SystemId id, const QuantumNumbers& qn) {
    if (!valid_qn(id, qn)) throw DomainError("invalid quantum numbers");
    const long k = qn.k, lev = qn.level;
    switch (id) {
        case SystemId::sho1d:
            return hermite_route(k);
        case SystemId::osc3d:
            return oscillator_route(k, Rational(2 * k + 2 * lev + 1), Rational(-2 * lev - 1),
                                    polynomial_argument(id, qn));
        case SystemId::osc2d:
            return oscillator_route(k, Rational(2 * k + 2 * lev), Rational(-2 * lev),
                                    polynomial_argument(id, qn));
        case SystemId::coul3d:
            return coulomb3d_route(lev + k + 1, lev);
        case SystemId::coul2d:
            return coulomb2d_route(k, lev);
    }
    throw Error("unknown system");
}

Scalar rodrigues_ladder_scale(SystemId id, const QuantumNumbers& qn) {
    const long k = qn.k, lev = qn.level;
    switch (id) {
        case SystemId::sho1d:
            // 2^(-n/2)
            return Scalar::sqrt_rational(Rational(1, 2)).pow_int(k);
        case SystemId::osc2d:
        case SystemId::osc3d:
            // 2^(k/2) k!
            return Scalar::sqrt_rational(Rational(2)).pow_int(k) * Scalar(Rational(factorial(k)));
        case SystemId::coul3d: {
            // (2n-1)! l! k! / ((n+l)! (n-1)!) * (2 sqrt2)^(-k)
            const long n = lev + k + 1;
            const mpz_class num = factorial(2 * n - 1) * factorial(lev) * factorial(k);
            const mpz_class den = factorial(n + lev) * factorial(n - 1);
            return Scalar(Rational(num, den)) *
                   Scalar::sqrt_rational(Rational(1, 8)).pow_int(k);
        }
        case SystemId::coul2d: {
            // 2^(-k/2) (2m-1)!!/(2m+2k-1)!! k! (2m+2k)!/(2m+k)!
            const long m = lev;
            const mpz_class num =
                double_factorial(2 * m - 1) * factorial(k) * factorial(2 * m + 2 * k);
            const mpz_class den = double_factorial(2 * m + 2 * k - 1) * factorial(2 * m + k);
            return Scalar::sqrt_rational(Rational(1, 2)).pow_int(k) * Scalar(Rational(num, den));
        }
    }
    throw Error("unknown system");
}

}  // namespace ladderkit
