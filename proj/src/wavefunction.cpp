#include "ladderkit/wavefunction.hpp"

#include <cmath>

namespace ladderkit {

namespace {

// i-power of a scalar known to be a pure quarter-turn of a positive real.
int phase_of(const Scalar& s) {
    if (s.is_zero()) throw Error("phase of zero");
    if (s.im().is_zero()) return s.re().is_positive() ? 0 : 2;
    if (s.re().is_zero()) return s.im().is_positive() ? 1 : 3;
    throw Error("coefficient is not a quarter-turn of a positive real");
}

}  // namespace

FunctionFactor ground_envelope(SystemId id, long level) {
    if (level < 0) throw DomainError("negative level");
    switch (id) {
        case SystemId::sho1d:
            return {Rational(0), Rational(-1, 2), Rational(0)};
        case SystemId::osc2d:
        case SystemId::osc3d:
            return {Rational(level), Rational(-1, 2), Rational(0)};
        case SystemId::coul2d:
            return {Rational(level), Rational(0), -(Rational(level) + Rational(1, 2)).inverse()};
        case SystemId::coul3d:
            return {Rational(level), Rational(0), -Rational(1, level + 1)};
    }
    throw Error("unknown system");
}

FunctionFactor target_envelope(SystemId id, const QuantumNumbers& qn) {
    FunctionFactor e = ground_envelope(id, qn.level + qn.k);
    e.power = Rational(system(id).radial ? qn.level : 0);
    return e;
}

Scalar half_line_moment(long a_pow, const Rational& g, const Rational& lin) {
    if (a_pow < 0) throw DomainError("negative moment power");
    if (g.is_zero() && lin.is_negative()) {
        // s! / (-L)^(s+1)
        return Scalar(Rational(factorial(a_pow)) / (-lin).pow_int(a_pow + 1));
    }
    if (lin.is_zero() && g.is_negative()) {
        const Rational lam = -g;
        if (a_pow % 2 == 0) {
            // (2t-1)!! sqrt(pi) / 2^(t+1) / lam^(t+1/2)
            const long t = a_pow / 2;
            mpz_class pw;
            mpz_ui_pow_ui(pw.get_mpz_t(), 2, static_cast<unsigned long>(t + 1));
            return Scalar(Rational(double_factorial(2 * t - 1), pw) * lam.pow_int(-t)) *
                   Scalar::pi_quarter(2) * Scalar::sqrt_rational(lam).inverse();
        }
        const long t = (a_pow - 1) / 2;
        return Scalar(Rational(factorial(t), 2) * lam.pow_int(-(t + 1)));
    }
    throw DomainError("moment integral outside the closed-form family");
}

Scalar ground_norm_constant(SystemId id, long level) {
    const FunctionFactor env = ground_envelope(id, level);
    const SystemSpec& spec = system(id);
    const Rational a = env.power * 2 + Rational(spec.measure_exponent);
    Scalar i2 = half_line_moment(a.to_long(), env.gauss * 2, env.linear * 2);
    if (!spec.radial) i2 = i2 * Scalar(2);  // even integrand over the whole line
    return i2.inverse().sqrt();
}

Scalar ground_norm_constant_closed(SystemId id, long level) {
    if (level < 0) throw DomainError("negative level");
    switch (id) {
        case SystemId::sho1d:
            return Scalar::pi_quarter(-1);
        case SystemId::osc2d:
            return Scalar::sqrt_rational(Rational(mpz_class(2), factorial(level)));
        case SystemId::osc3d: {
            mpz_class two_l;
            mpz_ui_pow_ui(two_l.get_mpz_t(), 2, static_cast<unsigned long>(level));
            return Scalar(2) * Scalar::pi_quarter(-1) *
                   Scalar::sqrt_rational(Rational(two_l, double_factorial(2 * level + 1)));
        }
        case SystemId::coul2d:
            return Scalar(Rational(4, 2 * level + 1)).pow_int(level + 1) *
                   Scalar::sqrt_rational(Rational(mpz_class(1), factorial(2 * level + 1)));
        case SystemId::coul3d: {
            const long nn = level + 1;
            return Scalar(Rational(2, nn)).pow_int(nn) * Scalar::sqrt_rational(Rational(2, nn)) *
                   Scalar::sqrt_rational(Rational(mpz_class(1), factorial(2 * nn)));
        }
    }
    throw Error("unknown system");
}

int expected_phase(SystemId id, const QuantumNumbers& qn) {
    const int r = static_cast<int>(qn.k % 4);
    if (id == SystemId::sho1d) return r;
    return (4 - r) % 4;
}

Wavefunction ground_wavefunction(SystemId id, long level) {
    const QuantumNumbers qn{level, 0};
    if (!valid_qn(id, qn)) throw DomainError("invalid level");
    return {id,
            qn,
            ground_norm_constant(id, level),
            Polynomial::constant(Scalar(1), polynomial_argument(id, qn)),
            ground_envelope(id, level),
            system(id).measure_exponent,
            0,
            factorization_energy(id, level)};
}

Wavefunction build_by_rodrigues(SystemId id, const QuantumNumbers& qn) {
    if (!valid_qn(id, qn)) throw DomainError("invalid quantum numbers");
    const Scalar norm = normalization_constant(id, qn) * rodrigues_ladder_scale(id, qn) *
                        ground_norm_constant(id, qn.level + qn.k);
    return {id,
            qn,
            norm,
            rodrigues_polynomial(id, qn),
            target_envelope(id, qn),
            system(id).measure_exponent,
            expected_phase(id, qn),
            energy_law(id, qn)};
}

Wavefunction build_by_ladder(SystemId id, const QuantumNumbers& qn) {
    if (!valid_qn(id, qn)) throw DomainError("invalid quantum numbers");
    const SystemSpec& spec = system(id);
    const long top = qn.level + qn.k;
    FnState st(OpExpr::term(ground_norm_constant(id, top), ground_envelope(id, top), 0),
               spec.kernel_shift);
    for (long j = qn.k - 1; j >= 0; --j) st = apply_to_state(raising_op(id, qn.level + j), st);

    const Scalar chain_c = normalization_constant(id, qn);
    const OpExpr parts = st.parts.scaled(chain_c);
    const FunctionFactor env = target_envelope(id, qn);
    const PolyArg arg = polynomial_argument(id, qn);

    std::vector<Scalar> raw;
    for (const auto& t : parts.terms()) {
        if (t.fn.gauss != env.gauss || t.fn.linear != env.linear)
            throw Error("ladder result escaped the expected envelope");
        const Rational dp = t.fn.power - env.power;
        if (!dp.is_integer() || dp.is_negative())
            throw Error("ladder result fell below the envelope power");
        const long px = dp.to_long();
        if (px % arg.xpow != 0) throw Error("ladder power misses the argument grid");
        const long j = px / arg.xpow;
        if (static_cast<long>(raw.size()) <= j) raw.resize(j + 1);
        raw[j] = t.coeff * Scalar(arg.scale.inverse().pow_int(j));
    }
    if (raw.empty()) throw Error("ladder product vanished");

    // Common quarter-turn, read from the constant coefficient on the
    // radial systems (Laguerre values at 0 never vanish) and from the
    // leading coefficient on the line.
    const std::size_t ref = spec.radial ? 0 : raw.size() - 1;
    const int q = phase_of(raw[ref]);
    const Scalar strip = Scalar::i_pow(-q);
    const Scalar norm = chain_c * ground_norm_constant(id, top);
    std::vector<Scalar> coeffs(raw.size());
    for (std::size_t j = 0; j < raw.size(); ++j)
        if (!raw[j].is_zero()) coeffs[j] = raw[j] * strip / norm;

    return {id,
            qn,
            norm,
            Polynomial(std::move(coeffs), arg),
            env,
            spec.measure_exponent,
            q,
            energy_law(id, qn)};
}

bool routes_agree(const Wavefunction& a, const Wavefunction& b) {
    if (a.sys != b.sys || a.qn.level != b.qn.level || a.qn.k != b.qn.k) return false;
    if (a.measure_exponent != b.measure_exponent || a.phase != b.phase) return false;
    if (a.energy != b.energy || a.envelope != b.envelope) return false;
    if (a.poly.arg() != b.poly.arg() || a.poly.degree() != b.poly.degree()) return false;
    for (long j = 0; j <= a.poly.degree(); ++j)
        if (a.norm * a.poly.coeff(j) != b.norm * b.poly.coeff(j)) return false;
    return true;
}

FnState to_state(const Wavefunction& w) {
    OpExpr parts;
    const PolyArg& arg = w.poly.arg();
    for (long j = 0; j <= w.poly.degree(); ++j) {
        const Scalar c = w.poly.coeff(j);
        if (c.is_zero()) continue;
        parts += OpExpr::term(w.norm * c * Scalar(arg.scale.pow_int(j)),
                              FunctionFactor::x_pow(Rational(j * arg.xpow)) * w.envelope, 0);
    }
    return FnState(std::move(parts), system(w.sys).kernel_shift);
}

bool eigencheck(const Wavefunction& w) {
    const FnState st = to_state(w);
    const FnState hs = apply_to_state(hamiltonian(w.sys, w.qn.level), st);
    return (hs.parts - st.parts.scaled(Scalar(w.energy))).is_zero();
}

long node_count(const Wavefunction& w) {
    if (system(w.sys).radial) return count_roots_positive(w.poly);
    return count_roots_real_line(w.poly);
}

Scalar exact_inner_product(const Wavefunction& a, const Wavefunction& b) {
    if (a.sys != b.sys) throw DomainError("inner product across different systems");
    const bool line = !system(a.sys).radial;
    const FunctionFactor env = a.envelope * b.envelope;
    if (line && !env.linear.is_zero())
        throw DomainError("whole-line moments need a pure gaussian");
    const int me = a.measure_exponent;
    Scalar acc;
    for (long j = 0; j <= a.poly.degree(); ++j) {
        const Scalar ca = a.poly.coeff(j);
        if (ca.is_zero()) continue;
        for (long j2 = 0; j2 <= b.poly.degree(); ++j2) {
            const Scalar cb = b.poly.coeff(j2);
            if (cb.is_zero()) continue;
            const Rational apow = env.power + Rational(me) +
                                  Rational(j * a.poly.arg().xpow + j2 * b.poly.arg().xpow);
            if (!apow.is_integer() || apow.is_negative())
                throw DomainError("moment power is not a non-negative integer");
            const long deg = apow.to_long();
            if (line && deg % 2 != 0) continue;  // odd moments vanish by symmetry
            Scalar mom = half_line_moment(deg, env.gauss, env.linear);
            if (line) mom = mom * Scalar(2);
            acc = acc + ca * cb * Scalar(a.poly.arg().scale.pow_int(j)) *
                            Scalar(b.poly.arg().scale.pow_int(j2)) * mom;
        }
    }
    return Scalar::i_pow(b.phase - a.phase) * acc * a.norm * b.norm;
}

Scalar exact_norm_square(const Wavefunction& w) { return exact_inner_product(w, w); }

Scalar coulomb_norm_rederived(long n, long l) {
    if (n < 1 || l < 0 || l >= n) throw DomainError("invalid (n, l)");
    return Scalar(Rational(2, n)).pow_int(l + 1) * Scalar::sqrt_rational(Rational(2, n)) *
           Scalar::sqrt_rational(Rational(factorial(n - l - 1), 2 * n * factorial(n + l)));
}

Scalar coulomb_norm_printed(long n, long l) {
    if (n < 1 || l < 0 || l >= n) throw DomainError("invalid (n, l)");
    return Scalar(Rational(2, n)).pow_int(l + 1) * Scalar::sqrt_rational(Rational(2, n)) *
           Scalar::sqrt_rational(Rational(factorial(n - l - 1), 2 * n * factorial(n + 1)));
}

WavefunctionEvaluator::WavefunctionEvaluator(const Wavefunction& w, unsigned precision) {
    norm_ = w.norm.to_complex(precision).real();
    for (long j = 0; j <= w.poly.degree(); ++j)
        coeffs_.push_back(w.poly.coeff(j).to_complex(precision).real());
    xpow_ = w.poly.arg().xpow;
    scale_ = w.poly.arg().scale.to_double();
    power_ = w.envelope.power.to_double();
    gauss_ = w.envelope.gauss.to_double();
    linear_ = w.envelope.linear.to_double();
}

double WavefunctionEvaluator::operator()(double x) const {
    const double u = scale_ * (xpow_ == 2 ? x * x : x);
    double poly = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) poly = poly * u + *it;
    double env = std::exp(gauss_ * x * x + linear_ * x);
    if (power_ != 0.0) env *= std::pow(x, power_);
    return norm_ * poly * env;
}

}  // namespace ladderkit
