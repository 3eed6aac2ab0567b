#include "ladderkit/rational.hpp"

namespace ladderkit {

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw Error("rational with zero denominator");
    v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
    if (den == 0) throw Error("rational with zero denominator");
    v_.canonicalize();
}

Rational::Rational(const std::string& s) : v_(s) {
    if (v_.get_den() == 0) throw Error("rational with zero denominator");
    v_.canonicalize();
}

bool Rational::is_half_integer() const {
    return v_.get_den() == 1 || v_.get_den() == 2;
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw Error("rational division by zero");
    return Rational(mpq_class(v_ / o.v_));
}

Rational Rational::inverse() const {
    if (is_zero()) throw Error("inverse of zero");
    return Rational(mpq_class(1 / v_));
}

Rational Rational::pow_int(long e) const {
    if (e == 0) return Rational(1);
    const Rational base = e < 0 ? inverse() : *this;
    unsigned long n = e < 0 ? -static_cast<unsigned long>(e) : static_cast<unsigned long>(e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.num().get_mpz_t(), n);
    mpz_pow_ui(den.get_mpz_t(), base.den().get_mpz_t(), n);
    return Rational(num, den);
}

long Rational::to_long() const {
    if (!is_integer() || !v_.get_num().fits_slong_p())
        throw Error("rational " + str() + " is not a small integer");
    return v_.get_num().get_si();
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

mpz_class factorial(unsigned long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

mpz_class double_factorial(long n) {
    if (n <= 0) return 1;
    mpz_class r;
    mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Rational binomial(const Rational& top, unsigned long k) {
    Rational acc(1);
    for (unsigned long t = 0; t < k; ++t) acc *= top - Rational(static_cast<long>(t));
    return acc / Rational(factorial(k));
}

std::pair<mpz_class, mpz_class> sqrt_free(const mpz_class& n) {
    if (n <= 0) throw Error("sqrt_free of non-positive integer");
    mpz_class s = 1, r = 1, m = n;
    const long trial_bound = 1 << 20;
    for (mpz_class p = 2; p * p <= m && p <= trial_bound; p += (p == 2 ? 1 : 2)) {
        if (m % p != 0) continue;
        unsigned long e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (e >= 2) {
            mpz_class ppow;
            mpz_pow_ui(ppow.get_mpz_t(), p.get_mpz_t(), e / 2);
            s *= ppow;
        }
        if (e % 2) r *= p;
    }
    // Leftover cofactor: 1, a prime, or (past the trial bound) a perfect
    // square we can still strip; anything else is kept as-is.
    if (mpz_perfect_square_p(m.get_mpz_t())) {
        mpz_class root;
        mpz_sqrt(root.get_mpz_t(), m.get_mpz_t());
        s *= root;
    } else {
        r *= m;
    }
    return {s, r};
}

}  // namespace ladderkit
