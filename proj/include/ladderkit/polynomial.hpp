#pragma once

#include <string>
#include <vector>

#include "ladderkit/scalar.hpp"

namespace ladderkit {

// The polynomial argument u as a function of the coordinate:
// u = scale * x^xpow.  `label` is the stable JSON/text tag.
struct PolyArg {
    int xpow = 1;
    Rational scale = Rational(1);
    std::string label = "x";

    bool operator==(const PolyArg& o) const {
        return xpow == o.xpow && scale == o.scale && label == o.label;
    }
};

// Dense exact polynomial in u with Scalar coefficients.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(PolyArg arg) : arg_(std::move(arg)) {}
    Polynomial(std::vector<Scalar> coeffs, PolyArg arg);

    static Polynomial constant(const Scalar& c, PolyArg arg = {});

    const PolyArg& arg() const { return arg_; }
    const std::vector<Scalar>& coeffs() const { return c_; }
    long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero
    Scalar coeff(std::size_t j) const { return j < c_.size() ? c_[j] : Scalar(); }
    bool is_zero() const { return c_.empty(); }

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial scaled(const Scalar& s) const;
    Polynomial times_u() const;  // multiply by the argument u

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // Coefficients as rationals; throws if any has a radical/pi/imag part.
    std::vector<Rational> rational_coeffs() const;

    double eval(double u) const;

  private:
    void trim();
    std::vector<Scalar> c_;
    PolyArg arg_;
};

// Physicists' Hermite polynomial, argument label "x".
Polynomial hermite(unsigned n);

// Generalized Laguerre via the explicit sum
//   L_k^(a)(u) = sum_j (-1)^j binom(k+a, k-j) u^j / j!,
// valid for rational (including half-integer) a.  The argument metadata
// is the caller's business; defaults to label "x".
Polynomial laguerre(unsigned k, const Rational& alpha, PolyArg arg = {});

// Paper recurrences, checked exactly.  L_{-1} = 0 by convention.
// r1: k L_k^(a)   = (k+a) L_{k-1}^(a) - u L_{k-1}^(a+1)
// r2: m L_m^(a)   = (2m+a-1-u) L_{m-1}^(a) - (m+a-1) L_{m-2}^(a)
// r3: L_m^(a+1) - L_{m-1}^(a+1) = L_m^(a)
bool laguerre_r1(unsigned k, const Rational& alpha);
bool laguerre_r2(unsigned m, const Rational& alpha);
bool laguerre_r3(unsigned m, const Rational& alpha);
// Chained 2D form: (k+1) L_{k+1}^(2m-2) = (2m-1-u) L_k^(2m) - (2m-1) L_{k-1}^(2m)
bool laguerre_chain_2d(unsigned k, unsigned m);

// Exact count of real roots in (0, inf) (or all of R) via Descartes
// bounds with interval bisection.  Coefficients must be rational.
long count_roots_positive(const Polynomial& p);
long count_roots_real_line(const Polynomial& p);

}  // namespace ladderkit
