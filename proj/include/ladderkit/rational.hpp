#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

#include "ladderkit/errors.hpp"

namespace ladderkit {

// Arbitrary-precision rational, always reduced, denominator > 0.
// Thin wrapper over mpq_class so rendering, ordering and hashing
// stay under our control.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design
    Rational(long num, long den);
    explicit Rational(const mpz_class& n) : v_(n) {}
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    explicit Rational(const std::string& s);

    const mpq_class& raw() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    bool is_negative() const { return sgn(v_) < 0; }
    bool is_positive() const { return sgn(v_) > 0; }
    int sign() const { return sgn(v_); }

    // True when the denominator is 1 or 2.
    bool is_half_integer() const;

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const;
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }
    bool operator<=(const Rational& o) const { return v_ <= o.v_; }
    bool operator>(const Rational& o) const { return v_ > o.v_; }
    bool operator>=(const Rational& o) const { return v_ >= o.v_; }
    int cmp(const Rational& o) const { return ::cmp(v_, o.v_); }

    Rational inverse() const;
    Rational abs() const { return Rational(mpq_class(::abs(v_))); }
    Rational pow_int(long e) const;

    double to_double() const { return v_.get_d(); }
    long to_long() const;  // throws unless an integer fitting a long

    // "a" when integral, "a/b" otherwise.
    std::string str() const;

  private:
    mpq_class v_;
};

mpz_class factorial(unsigned long n);
// Double factorial with the empty-product conventions (-1)!! = 0!! = 1.
mpz_class double_factorial(long n);
mpz_class binomial(unsigned long n, unsigned long k);
// binom(top, k) for rational top, via the falling factorial.
Rational binomial(const Rational& top, unsigned long k);

// n = s^2 * r with r square-free; n must be positive.  Factors are found
// by trial division, so inputs are expected to be smooth (products of
// factorials and small system constants are).
std::pair<mpz_class, mpz_class> sqrt_free(const mpz_class& n);

}  // namespace ladderkit
