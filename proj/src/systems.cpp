#include "ladderkit/systems.hpp"

#include <array>

namespace ladderkit {

namespace {

const std::array<SystemSpec, 5> kSystems = {{
    {SystemId::sho1d, "sho1d", false, Rational(0), Rational(1), 0, "x"},
    {SystemId::osc2d, "osc2d", true, Rational(1, 2), Rational(1), 1, "rho"},
    {SystemId::osc3d, "osc3d", true, Rational(1), Rational(1), 2, "r"},
    {SystemId::coul2d, "coul2d", true, Rational(1, 2), Rational(0), 1, "rho"},
    {SystemId::coul3d, "coul3d", true, Rational(1), Rational(0), 2, "r"},
}};

long check_level(SystemId id, long level) {
    if (level < 0) throw DomainError("negative level for " + system(id).name);
    return level;
}

}  // namespace

const SystemSpec& system(SystemId id) { return kSystems[static_cast<std::size_t>(id)]; }

const std::vector<SystemId>& all_systems() {
    static const std::vector<SystemId> v = {SystemId::sho1d, SystemId::osc2d, SystemId::osc3d,
                                            SystemId::coul2d, SystemId::coul3d};
    return v;
}

std::optional<SystemId> system_from_name(const std::string& name) {
    for (const auto& s : kSystems)
        if (s.name == name) return s.id;
    return std::nullopt;
}

Superpotential superpotential(SystemId id, long level) {
    check_level(id, level);
    switch (id) {
        case SystemId::sho1d:
            return {Rational(0), Rational(1), Rational(0)};
        case SystemId::osc2d:
            return {-(Rational(level) + Rational(1, 2)), Rational(1), Rational(0)};
        case SystemId::osc3d:
            return {Rational(-(level + 1)), Rational(1), Rational(0)};
        case SystemId::coul2d:
            return {-(Rational(level) + Rational(1, 2)), Rational(0),
                    (Rational(level) + Rational(1, 2)).inverse()};
        case SystemId::coul3d:
            return {Rational(-(level + 1)), Rational(0), Rational(level + 1).inverse()};
    }
    throw Error("unknown system");
}

OpExpr lowering_op(SystemId id, long level) {
    const Superpotential w = superpotential(id, level);
    const Scalar s = Scalar::sqrt_rational(Rational(1, 2));
    const Scalar mis = -Scalar::i() * s;
    OpExpr a = OpExpr::term(s, FunctionFactor::one(), 1);
    if (!w.alpha.is_zero())
        a += OpExpr::term(mis * Scalar(w.alpha), FunctionFactor::x_pow(Rational(-1)), 0);
    if (!w.beta.is_zero())
        a += OpExpr::term(mis * Scalar(w.beta), FunctionFactor::x_pow(Rational(1)), 0);
    if (!w.gamma.is_zero()) a += OpExpr::term(mis * Scalar(w.gamma), FunctionFactor::one(), 0);
    return a;
}

OpExpr raising_op(SystemId id, long level) { return lowering_op(id, level).dagger(); }

OpExpr hamiltonian(SystemId id, long level) {
    check_level(id, level);
    const Scalar half(Rational(1, 2));
    OpExpr h = OpExpr::term(half, FunctionFactor::one(), 2);  // p^2/2
    Rational cf;                                              // coefficient of 1/x^2
    switch (id) {
        case SystemId::sho1d:
            break;
        case SystemId::osc2d:
        case SystemId::coul2d:
            cf = (Rational(level) * Rational(level) - Rational(1, 4)) * Rational(1, 2);
            break;
        case SystemId::osc3d:
        case SystemId::coul3d:
            cf = Rational(level * (level + 1), 2);
            break;
    }
    if (!cf.is_zero()) h += OpExpr::term(Scalar(cf), FunctionFactor::x_pow(Rational(-2)), 0);
    switch (id) {
        case SystemId::sho1d:
        case SystemId::osc2d:
        case SystemId::osc3d:
            h += OpExpr::term(half, FunctionFactor::x_pow(Rational(2)), 0);
            break;
        case SystemId::coul2d:
        case SystemId::coul3d:
            h += OpExpr::term(Scalar(-1), FunctionFactor::x_pow(Rational(-1)), 0);
            break;
    }
    return h;
}

Rational factorization_energy(SystemId id, long level) {
    check_level(id, level);
    switch (id) {
        case SystemId::sho1d:
            return Rational(1, 2);
        case SystemId::osc2d:
            return Rational(level + 1);
        case SystemId::osc3d:
            return Rational(level) + Rational(3, 2);
        case SystemId::coul2d: {
            Rational d = Rational(level) + Rational(1, 2);
            return -(d * d * Rational(2)).inverse();
        }
        case SystemId::coul3d: {
            Rational d(level + 1);
            return -(d * d * Rational(2)).inverse();
        }
    }
    throw Error("unknown system");
}

Rational energy_law(SystemId id, const QuantumNumbers& qn) {
    return factorization_energy(id, qn.level + qn.k) +
           Rational(qn.k) * system(id).chain_shift;
}

long principal_n(SystemId id, const QuantumNumbers& qn) {
    switch (id) {
        case SystemId::sho1d:
            return qn.k;
        case SystemId::osc2d:
        case SystemId::osc3d:
            return qn.level + 2 * qn.k;
        case SystemId::coul2d:
        case SystemId::coul3d:
            return qn.level + qn.k + 1;
    }
    throw Error("unknown system");
}

bool valid_qn(SystemId id, const QuantumNumbers& qn) {
    if (qn.k < 0 || qn.level < 0) return false;
    if (id == SystemId::sho1d && qn.level != 0) return false;
    return true;
}

bool factorization_check(SystemId id, long level) {
    const OpExpr a = lowering_op(id, level);
    const OpExpr ad = a.dagger();
    const OpExpr e = OpExpr::scalar(Scalar(factorization_energy(id, level)));
    if (ad * a + e != hamiltonian(id, level)) return false;
    const OpExpr shifted =
        hamiltonian(id, level + 1) + OpExpr::scalar(Scalar(system(id).chain_shift));
    return a * ad + e == shifted;
}

bool intertwine_check(SystemId id, long level) {
    const OpExpr ad = raising_op(id, level);
    const OpExpr lhs = hamiltonian(id, level) * ad;
    const OpExpr rhs =
        ad * (hamiltonian(id, level + 1) + OpExpr::scalar(Scalar(system(id).chain_shift)));
    return lhs == rhs;
}

GaugeSolution solve_gauge(const OpExpr& a, const Rational& c) {
    // Expect s*p - i*s*(alpha/x + beta*x + gamma).
    Scalar s;
    Rational alpha, beta, gamma;
    for (const auto& t : a.terms()) {
        if (t.mom == 1 && t.fn.is_one()) {
            s = t.coeff;
            continue;
        }
        if (t.mom != 0 || !t.fn.gauss.is_zero() || !t.fn.linear.is_zero())
            throw NoGauge("operator is not in superpotential form");
    }
    if (!s.is_positive_real()) throw NoGauge("no momentum term with positive coefficient");
    const Scalar unit = Scalar::i() * s.inverse();  // maps -i*s*w back to w
    for (const auto& t : a.terms()) {
        if (t.mom == 1) continue;
        const Scalar w = t.coeff * unit;
        if (!w.is_rational()) throw NoGauge("superpotential coefficient outside the rationals");
        if (t.fn.power == Rational(-1))
            alpha = w.rational_value();
        else if (t.fn.power == Rational(1))
            beta = w.rational_value();
        else if (t.fn.power.is_zero())
            gamma = w.rational_value();
        else
            throw NoGauge("superpotential power outside {-1, 0, 1}");
    }
    GaugeSolution sol{FunctionFactor{-alpha, -beta * Rational(1, 2), -gamma}, s};
    // the defining identity, verified exactly
    const OpExpr lhs = a * OpExpr::fn(sol.f);
    const OpExpr rhs = OpExpr::term(sol.s, sol.f, 1);
    if (lhs != rhs) throw NoGauge("gauge identity failed to close");
    // and the ground state f*x^(-c) must be annihilated
    const FnState ground(
        OpExpr::fn(sol.f * FunctionFactor::x_pow(-c)), c);
    if (!apply_to_state(a, ground).is_zero()) throw NoGauge("ground state not annihilated");
    return sol;
}

Scalar normalization_constant(SystemId id, const QuantumNumbers& qn) {
    const Rational target = energy_law(id, qn);
    Rational prod(1);
    for (long j = 0; j < qn.k; ++j) {
        const Rational aux = factorization_energy(id, qn.level + j) +
                             Rational(j) * system(id).chain_shift;
        prod *= target - aux;
    }
    if (!prod.is_positive()) throw Error("chain energy differences must be positive");
    return Scalar::sqrt_rational(prod).inverse();
}

Scalar normalization_constant_closed(SystemId id, const QuantumNumbers& qn) {
    const long k = qn.k;
    switch (id) {
        case SystemId::sho1d:
            return Scalar::sqrt_rational(Rational(factorial(k))).inverse();
        case SystemId::osc2d:
        case SystemId::osc3d: {
            mpz_class two_k;
            mpz_ui_pow_ui(two_k.get_mpz_t(), 2, static_cast<unsigned long>(k));
            return Scalar::sqrt_rational(Rational(mpz_class(two_k * factorial(k)))).inverse();
        }
        case SystemId::coul3d: {
            // (n sqrt2)^(n-l-1) (n-1)!/l! sqrt((n+l)!/((2n-1)!(n-l-1)!))
            const long l = qn.level, n = l + k + 1;
            Scalar out = Scalar(Rational(n)).pow_int(k) *
                         Scalar::sqrt_rational(Rational(2)).pow_int(k);
            out *= Scalar(Rational(factorial(n - 1), factorial(l)));
            out *= Scalar::sqrt_rational(
                Rational(factorial(n + l), mpz_class(factorial(2 * n - 1) * factorial(k))));
            return out;
        }
        case SystemId::coul2d: {
            // (sqrt2 (m+k+1/2))^k (2m+2k-1)!!/(2^k (2m-1)!!) sqrt((2m+k)!/(k!(2m+2k)!))
            const long m = qn.level;
            const Rational half_n = Rational(m + k) + Rational(1, 2);
            Scalar out = Scalar(half_n).pow_int(k) * Scalar::sqrt_rational(Rational(2)).pow_int(k);
            mpz_class two_k;
            mpz_ui_pow_ui(two_k.get_mpz_t(), 2, static_cast<unsigned long>(k));
            out *= Scalar(Rational(double_factorial(2 * m + 2 * k - 1),
                                   mpz_class(two_k * double_factorial(2 * m - 1))));
            out *= Scalar::sqrt_rational(Rational(
                factorial(2 * m + k), mpz_class(factorial(k) * factorial(2 * m + 2 * k))));
            return out;
        }
    }
    throw Error("unknown system");
}

std::vector<ChainEntry> chain_energies(SystemId id, long max_level, long base_level) {
    if (max_level < 0) throw DomainError("max level must be non-negative");
    std::vector<ChainEntry> out;
    for (long j = 0; j <= max_level; ++j) {
        for (long r = 0; j + r <= max_level; ++r) {
            const Rational e = factorization_energy(id, base_level + j + r) +
                               Rational(j + r) * system(id).chain_shift;
            out.push_back({j, r, e});
        }
    }
    return out;
}

}  // namespace ladderkit
