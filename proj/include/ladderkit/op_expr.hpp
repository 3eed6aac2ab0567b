#pragma once

#include <vector>

#include "ladderkit/function_factor.hpp"
#include "ladderkit/scalar.hpp"

namespace ladderkit {

// coeff * fn(x) * p^mom
struct Term {
    Scalar coeff;
    FunctionFactor fn;
    int mom = 0;
};

// Normal-ordered operator expression: a canonical sum of Terms with all
// momenta on the right.  Terms are kept sorted by (mom, fn, coefficient
// stratum) and merged; zero coefficients are dropped.  The only rewrite
// used anywhere is p*f(x) = f(x)*p - i f'(x)  (hbar = 1).
class OpExpr {
  public:
    OpExpr() = default;

    static OpExpr zero() { return {}; }
    static OpExpr one() { return scalar(Scalar(1)); }
    static OpExpr coordinate() { return fn(FunctionFactor::x_pow(Rational(1))); }
    static OpExpr momentum() { return term(Scalar(1), FunctionFactor::one(), 1); }
    static OpExpr scalar(const Scalar& c) { return term(c, FunctionFactor::one(), 0); }
    static OpExpr fn(const FunctionFactor& f) { return term(Scalar(1), f, 0); }
    static OpExpr term(const Scalar& c, const FunctionFactor& f, int mom);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    bool momentum_free() const;

    OpExpr operator+(const OpExpr& o) const;
    OpExpr operator-(const OpExpr& o) const;
    OpExpr operator-() const;
    OpExpr operator*(const OpExpr& o) const;
    OpExpr& operator+=(const OpExpr& o) { return *this = *this + o; }
    OpExpr& operator*=(const OpExpr& o) { return *this = *this * o; }
    OpExpr scaled(const Scalar& c) const;
    OpExpr pow_uint(unsigned e) const;

    // Hermitian conjugate: scalars conjugated, momenta moved back through
    // the (real) function factors.
    OpExpr dagger() const;

    bool operator==(const OpExpr& o) const;
    bool operator!=(const OpExpr& o) const { return !(*this == o); }

    static OpExpr commutator(const OpExpr& a, const OpExpr& b) { return a * b - b * a; }

    // Apply p from the left: each term c*f*p^k becomes c*f*p^(k+1) - i*c*f'*p^k.
    OpExpr apply_p_left() const;

  private:
    explicit OpExpr(std::vector<Term> raw);
    std::vector<Term> terms_;
};

}  // namespace ladderkit
