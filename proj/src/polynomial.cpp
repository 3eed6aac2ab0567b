#include "ladderkit/polynomial.hpp"

#include <algorithm>

namespace ladderkit {

Polynomial::Polynomial(std::vector<Scalar> coeffs, PolyArg arg)
    : c_(std::move(coeffs)), arg_(std::move(arg)) {
    trim();
}

Polynomial Polynomial::constant(const Scalar& c, PolyArg arg) {
    return Polynomial({c}, std::move(arg));
}

void Polynomial::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (!(arg_ == o.arg_) && !is_zero() && !o.is_zero())
        throw Error("polynomial arguments differ");
    std::vector<Scalar> out(std::max(c_.size(), o.c_.size()));
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = coeff(j) + o.coeff(j);
    return Polynomial(std::move(out), is_zero() ? o.arg_ : arg_);
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    return *this + o.scaled(Scalar(-1));
}

Polynomial Polynomial::scaled(const Scalar& s) const {
    std::vector<Scalar> out = c_;
    for (auto& c : out) c *= s;
    return Polynomial(std::move(out), arg_);
}

Polynomial Polynomial::times_u() const {
    if (is_zero()) return *this;
    std::vector<Scalar> out(c_.size() + 1);
    for (std::size_t j = 0; j < c_.size(); ++j) out[j + 1] = c_[j];
    return Polynomial(std::move(out), arg_);
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (std::size_t j = 0; j < c_.size(); ++j)
        if (c_[j] != o.c_[j]) return false;
    return is_zero() || o.is_zero() || arg_ == o.arg_;
}

std::vector<Rational> Polynomial::rational_coeffs() const {
    std::vector<Rational> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(c.rational_value());
    return out;
}

double Polynomial::eval(double u) const {
    double acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * u + it->to_complex().real();
    return acc;
}

Polynomial hermite(unsigned n) {
    PolyArg arg{1, Rational(1), "x"};
    Polynomial hm1;            // H_{-1} = 0
    Polynomial h = Polynomial::constant(Scalar(1), arg);
    for (unsigned j = 0; j < n; ++j) {
        // H_{j+1} = 2u H_j - 2j H_{j-1}
        Polynomial next = h.times_u().scaled(Scalar(2)) -
                          hm1.scaled(Scalar(Rational(2 * static_cast<long>(j))));
        hm1 = std::move(h);
        h = std::move(next);
    }
    return h;
}

Polynomial laguerre(unsigned k, const Rational& alpha, PolyArg arg) {
    std::vector<Scalar> coeffs(k + 1);
    for (unsigned j = 0; j <= k; ++j) {
        Rational c = binomial(Rational(static_cast<long>(k)) + alpha, k - j) /
                     Rational(factorial(j));
        if (j % 2) c = -c;
        coeffs[j] = Scalar(c);
    }
    return Polynomial(std::move(coeffs), std::move(arg));
}

bool laguerre_r1(unsigned k, const Rational& alpha) {
    if (k == 0) return true;
    Polynomial lhs = laguerre(k, alpha).scaled(Scalar(Rational(static_cast<long>(k))));
    Polynomial rhs = laguerre(k - 1, alpha).scaled(Scalar(Rational(static_cast<long>(k)) + alpha)) -
                     laguerre(k - 1, alpha + Rational(1)).times_u();
    return lhs == rhs;
}

bool laguerre_r2(unsigned m, const Rational& alpha) {
    if (m < 2) return true;
    Polynomial lm1 = laguerre(m - 1, alpha);
    Polynomial lhs = laguerre(m, alpha).scaled(Scalar(Rational(static_cast<long>(m))));
    Polynomial rhs = lm1.scaled(Scalar(Rational(2 * static_cast<long>(m)) + alpha - Rational(1))) -
                     lm1.times_u() -
                     laguerre(m - 2, alpha).scaled(Scalar(Rational(static_cast<long>(m)) + alpha - Rational(1)));
    return lhs == rhs;
}

bool laguerre_r3(unsigned m, const Rational& alpha) {
    Polynomial lhs = laguerre(m, alpha + Rational(1));
    if (m > 0) lhs = lhs - laguerre(m - 1, alpha + Rational(1));
    return lhs == laguerre(m, alpha);
}

bool laguerre_chain_2d(unsigned k, unsigned m) {
    if (m < 1) return false;
    const Rational a2m(2 * static_cast<long>(m));
    Polynomial lhs = laguerre(k + 1, a2m - Rational(2))
                         .scaled(Scalar(Rational(static_cast<long>(k) + 1)));
    Polynomial rhs = laguerre(k, a2m).scaled(Scalar(a2m - Rational(1))) -
                     laguerre(k, a2m).times_u();
    if (k > 0) rhs = rhs - laguerre(k - 1, a2m).scaled(Scalar(a2m - Rational(1)));
    return lhs == rhs;
}

namespace {

// Exact root counting in (0, 1) for an integer-coefficient polynomial,
// Vincent/Collins/Akritas style: the Descartes bound of the Mobius
// transform is exact once it drops to 0 or 1.
using ZPoly = std::vector<mpz_class>;

int sign_changes(const ZPoly& p) {
    int v = 0, last = 0;
    for (const auto& c : p) {
        int s = sgn(c);
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

// q(x) = (1+x)^n p(1/(1+x)): sign changes bound roots of p in (0,1).
ZPoly mobius_01(const ZPoly& p) {
    const std::size_t n = p.size();
    ZPoly q(p.rbegin(), p.rend());  // x^n p(1/x)
    // Taylor shift by 1: q(x+1), synthetic Horner
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = n - 1; j > i; --j) q[j - 1] += q[j];
    return q;
}

// p(c*x) for rational c = a/b scaled to integers: coefficients a^j b^(n-j) p_j
ZPoly compose_scale(const ZPoly& p, const mpz_class& a, const mpz_class& b) {
    ZPoly out(p.size());
    mpz_class pa = 1, pb = 1;
    std::vector<mpz_class> bpow(p.size());
    for (std::size_t j = 0; j < p.size(); ++j) {
        bpow[p.size() - 1 - j] = pb;
        pb *= b;
    }
    for (std::size_t j = 0; j < p.size(); ++j) {
        out[j] = p[j] * pa * bpow[j];
        pa *= a;
    }
    return out;
}

mpz_class eval_at_one(const ZPoly& p) {
    mpz_class s = 0;
    for (const auto& c : p) s += c;
    return s;
}

// roots in the open interval (lo, hi), exact; p has no root at lo or hi
long count_in_unit_interval(const ZPoly& p, int depth) {
    int v = sign_changes(mobius_01(p));
    if (v <= 1) return v;
    if (depth > 128) throw Error("root isolation failed to converge");
    // split at 1/2: q(x) = 2^n p(x/2), halves are q on (0,1) and q(x+1)
    ZPoly q = compose_scale(p, 1, 2);
    ZPoly right = q;
    const std::size_t n = right.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = n - 1; j > i; --j) right[j - 1] += right[j];
    long mid = eval_at_one(q) == 0 ? 1 : 0;
    return count_in_unit_interval(q, depth + 1) + mid + count_in_unit_interval(right, depth + 1);
}

ZPoly to_integer_poly(const Polynomial& p) {
    auto rc = p.rational_coeffs();
    mpz_class lcm = 1;
    for (const auto& r : rc) {
        mpz_class d = r.den();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
        lcm = lcm / g * d;
    }
    ZPoly out(rc.size());
    for (std::size_t j = 0; j < rc.size(); ++j) out[j] = rc[j].num() * (lcm / rc[j].den());
    return out;
}

long count_positive(ZPoly p) {
    if (p.empty()) throw Error("root count of the zero polynomial");
    // strip roots at 0
    std::size_t low = 0;
    while (low < p.size() && p[low] == 0) ++low;
    p.erase(p.begin(), p.begin() + static_cast<long>(low));
    if (p.size() <= 1) return 0;
    // Cauchy bound B = 1 + max |p_j| / |p_n|
    mpz_class maxc = 0;
    for (std::size_t j = 0; j + 1 < p.size(); ++j) {
        mpz_class a = abs(p[j]);
        if (a > maxc) maxc = a;
    }
    mpz_class lead = abs(p.back());
    mpz_class bound = maxc / lead + 2;
    // map (0, B) onto (0, 1)
    ZPoly scaled = compose_scale(p, bound, 1);
    long at_b = 0;  // B itself is beyond the Cauchy bound, no root there
    return count_in_unit_interval(scaled, 0) + at_b;
}

}  // namespace

long count_roots_positive(const Polynomial& p) { return count_positive(to_integer_poly(p)); }

long count_roots_real_line(const Polynomial& p) {
    ZPoly zp = to_integer_poly(p);
    if (zp.empty()) throw Error("root count of the zero polynomial");
    long zero_root = (!zp.empty() && zp[0] == 0) ? 1 : 0;
    ZPoly neg = zp;
    for (std::size_t j = 1; j < neg.size(); j += 2) neg[j] = -neg[j];
    return count_positive(zp) + zero_root + count_positive(neg);
}

}  // namespace ladderkit
