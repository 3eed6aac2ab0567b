#include "ladderkit/scalar.hpp"

#include <mpfr.h>

namespace ladderkit {

namespace {

// sqrt(p/q) = (s_p/s_q) * sqrt(r_p/r_q) with square-free r parts.
struct RadSplit {
    Rational factor;
    Rational rad;
};

RadSplit split_radicand(const Rational& q) {
    auto [sn, rn] = sqrt_free(q.num());
    auto [sd, rd] = sqrt_free(q.den());
    return {Rational(sn, sd), Rational(rn, rd)};
}

}  // namespace

Scalar::Scalar(Rational re, Rational im, Rational rad, int pi4)
    : re_(std::move(re)), im_(std::move(im)), rad_(std::move(rad)), pi4_(pi4) {
    normalize();
}

void Scalar::normalize() {
    if (re_.is_zero() && im_.is_zero()) {
        rad_ = Rational(1);
        pi4_ = 0;
        return;
    }
    if (!rad_.is_positive()) throw Error("scalar radicand must be positive");
    if (rad_.is_one()) return;
    auto split = split_radicand(rad_);
    Rational factor = split.factor;
    Rational rad = split.rad;
    if (!rad.is_integer()) {
        // sqrt(a/b) = (1/b) sqrt(a*b): keep the radicand an integer so
        // equal values always share one representation.
        const mpz_class b = rad.den();
        factor *= Rational(mpz_class(1), b);
        rad = Rational(mpz_class(rad.num() * b));
    }
    if (!factor.is_one()) {
        re_ *= factor;
        im_ *= factor;
    }
    rad_ = rad;
}

Scalar Scalar::i_pow(long k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return Scalar(1);
        case 1: return i();
        case 2: return Scalar(-1);
        default: return Scalar(Rational(0), Rational(-1), Rational(1), 0);
    }
}

Scalar Scalar::sqrt_rational(const Rational& q) {
    if (!q.is_positive()) throw Error("sqrt of non-positive rational");
    return Scalar(Rational(1), Rational(0), q, 0);
}

bool Scalar::is_one() const {
    return re_.is_one() && im_.is_zero() && rad_.is_one() && pi4_ == 0;
}

bool Scalar::is_rational() const {
    return im_.is_zero() && rad_.is_one() && pi4_ == 0;
}

Rational Scalar::rational_value() const {
    if (!is_rational()) throw Error("scalar is not rational");
    return re_;
}

bool Scalar::is_positive_real() const {
    return im_.is_zero() && re_.is_positive();
}

Scalar Scalar::operator*(const Scalar& o) const {
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    return Scalar(std::move(re), std::move(im), rad_ * o.rad_, pi4_ + o.pi4_);
}

std::optional<Scalar> Scalar::try_add(const Scalar& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (!same_stratum(o)) return std::nullopt;
    return Scalar(re_ + o.re_, im_ + o.im_, rad_, pi4_);
}

Scalar Scalar::operator+(const Scalar& o) const {
    auto r = try_add(o);
    if (!r) throw IncompatibleScalar("adding scalars from different strata");
    return *r;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error("inverse of zero scalar");
    // 1/((a+bi) sqrt(r) pi^t) = (a-bi)/((a^2+b^2) r) * sqrt(r) * pi^-t
    Rational norm2 = (re_ * re_ + im_ * im_) * rad_;
    return Scalar(re_ / norm2, -im_ / norm2, rad_, -pi4_);
}

Scalar Scalar::sqrt() const {
    if (!im_.is_zero() || re_.is_negative())
        throw Error("scalar sqrt requires a non-negative real value");
    if (!rad_.is_one()) throw Error("scalar sqrt with radical part is outside the field");
    if (pi4_ % 2 != 0) throw Error("scalar sqrt of an odd pi power is outside the field");
    if (is_zero()) return Scalar();
    auto split = split_radicand(re_);
    return Scalar(split.factor, Rational(0), split.rad, pi4_ / 2);
}

Scalar Scalar::pow_int(long e) const {
    if (e == 0) return Scalar(1);
    Scalar base = e < 0 ? inverse() : *this;
    unsigned long n = e < 0 ? -static_cast<unsigned long>(e) : static_cast<unsigned long>(e);
    Scalar acc(1);
    while (n) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

bool Scalar::operator==(const Scalar& o) const {
    return re_ == o.re_ && im_ == o.im_ && rad_ == o.rad_ && pi4_ == o.pi4_;
}

int Scalar::cmp(const Scalar& o) const {
    if (int c = rad_.cmp(o.rad_)) return c;
    if (pi4_ != o.pi4_) return pi4_ < o.pi4_ ? -1 : 1;
    if (int c = re_.cmp(o.re_)) return c;
    return im_.cmp(o.im_);
}

namespace {

// magnitude = sqrt(rad) * pi^(pi4/4) at `prec` bits
void set_magnitude(mpfr_t out, const Rational& rad, int pi4, mpfr_prec_t prec) {
    mpfr_t tmp;
    mpfr_init2(tmp, prec);
    mpfr_set_q(out, rad.raw().get_mpq_t(), MPFR_RNDN);
    mpfr_sqrt(out, out, MPFR_RNDN);
    if (pi4 != 0) {
        mpfr_const_pi(tmp, MPFR_RNDN);
        mpfr_t expo;
        mpfr_init2(expo, prec);
        mpfr_set_si(expo, pi4, MPFR_RNDN);
        mpfr_div_ui(expo, expo, 4, MPFR_RNDN);
        mpfr_pow(tmp, tmp, expo, MPFR_RNDN);
        mpfr_mul(out, out, tmp, MPFR_RNDN);
        mpfr_clear(expo);
    }
    mpfr_clear(tmp);
}

std::string part_str(const Rational& part, const Rational& rad, int pi4, unsigned precision) {
    mpfr_prec_t prec = precision + 16;
    mpfr_t mag, val;
    mpfr_init2(mag, prec);
    mpfr_init2(val, prec);
    set_magnitude(mag, rad, pi4, prec);
    mpfr_set_q(val, part.raw().get_mpq_t(), MPFR_RNDN);
    mpfr_mul(val, val, mag, MPFR_RNDN);
    // round-trip decimal digit count for `precision` bits
    unsigned digits = static_cast<unsigned>(precision * 0.30103) + 2;
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Rg", static_cast<int>(digits), val);
    std::string out(s);
    mpfr_free_str(s);
    mpfr_clear(val);
    mpfr_clear(mag);
    return out;
}

}  // namespace

std::complex<double> Scalar::to_complex(unsigned precision) const {
    if (precision < 53) precision = 53;
    mpfr_prec_t prec = precision + 16;
    mpfr_t mag, v;
    mpfr_init2(mag, prec);
    mpfr_init2(v, prec);
    set_magnitude(mag, rad_, pi4_, prec);
    mpfr_set_q(v, re_.raw().get_mpq_t(), MPFR_RNDN);
    mpfr_mul(v, v, mag, MPFR_RNDN);
    double re = mpfr_get_d(v, MPFR_RNDN);
    mpfr_set_q(v, im_.raw().get_mpq_t(), MPFR_RNDN);
    mpfr_mul(v, v, mag, MPFR_RNDN);
    double im = mpfr_get_d(v, MPFR_RNDN);
    mpfr_clear(v);
    mpfr_clear(mag);
    return {re, im};
}

std::string Scalar::real_str(unsigned precision) const {
    return part_str(re_, rad_, pi4_, precision < 53 ? 53 : precision);
}

std::string Scalar::imag_str(unsigned precision) const {
    return part_str(im_, rad_, pi4_, precision < 53 ? 53 : precision);
}

}  // namespace ladderkit
