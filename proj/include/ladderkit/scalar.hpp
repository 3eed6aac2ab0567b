#pragma once

#include <complex>
#include <optional>
#include <string>

#include "ladderkit/rational.hpp"

namespace ladderkit {

// Exact coefficient: (re + i*im) * sqrt(rad) * pi^(pi4/4).
//
// rad is a square-free positive integer (sqrt(a/b) is stored as
// (1/b) sqrt(a*b)), so every value has exactly one representation; pi4
// counts quarter powers of pi.  Zero is canonical: rad = 1, pi4 = 0.
// Values in different (rad, pi4) strata do not add; try_add reports
// that instead of guessing.
class Scalar {
  public:
    Scalar() : rad_(1), pi4_(0) {}
    Scalar(long n) : re_(n), rad_(1), pi4_(0) {}  // NOLINT: implicit by design
    explicit Scalar(const Rational& q) : re_(q), rad_(1), pi4_(0) {}
    Scalar(Rational re, Rational im, Rational rad, int pi4);

    static Scalar i() { return Scalar(Rational(0), Rational(1), Rational(1), 0); }
    static Scalar i_pow(long k);  // i^k, any sign of k
    // sqrt(q) for positive rational q.
    static Scalar sqrt_rational(const Rational& q);
    // pi^(k/4)
    static Scalar pi_quarter(int k) { return Scalar(Rational(1), Rational(0), Rational(1), k); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }
    const Rational& radicand() const { return rad_; }
    int pi4() const { return pi4_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_one() const;
    bool is_real() const { return im_.is_zero(); }
    // A plain rational: no imaginary part, no radical, no pi.
    bool is_rational() const;
    Rational rational_value() const;  // throws unless is_rational()
    bool is_positive_real() const;

    Scalar operator*(const Scalar& o) const;
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar operator-() const { return Scalar(-re_, -im_, rad_, pi4_); }

    // Addition within a stratum; nullopt when strata differ (and neither
    // side is zero).
    std::optional<Scalar> try_add(const Scalar& o) const;
    Scalar operator+(const Scalar& o) const;  // throws IncompatibleScalar
    Scalar operator-(const Scalar& o) const { return *this + (-o); }

    Scalar conj() const { return Scalar(re_, -im_, rad_, pi4_); }
    Scalar inverse() const;
    Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }
    // Square root of a non-negative real scalar with rad == 1 and even pi4.
    Scalar sqrt() const;
    Scalar pow_int(long e) const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    // True when both values live in the same (rad, pi4) stratum.
    bool same_stratum(const Scalar& o) const { return rad_ == o.rad_ && pi4_ == o.pi4_; }
    // Total order usable as a sort key (stratum first, then components).
    int cmp(const Scalar& o) const;

    // Floating evaluation at `precision` bits (>= 53); the result is
    // rounded to double at the end, computation runs in MPFR.
    std::complex<double> to_complex(unsigned precision = 64) const;
    // Decimal rendering of re/im at `precision` bits, for high-precision output.
    std::string real_str(unsigned precision) const;
    std::string imag_str(unsigned precision) const;

  private:
    void normalize();
    Rational re_, im_;
    Rational rad_;
    int pi4_;
};

}  // namespace ladderkit
