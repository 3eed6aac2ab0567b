// Acceptance gate: ten criteria, one line each, pinned tolerances.
// Exits nonzero if any line reads FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "ladderkit/dsl.hpp"
#include "ladderkit/quadrature.hpp"
#include "ladderkit/render.hpp"
#include "ladderkit/verify.hpp"
#include "ladderkit/wavefunction.hpp"

using namespace ladderkit;

namespace {

constexpr double kQuadTol = 1e-8;        // criteria 6, 8, 9
constexpr double kTimeFactorize = 10.0;  // seconds, criterion 1
constexpr double kTimeRodrigues = 60.0;  // seconds, criterion 2
constexpr double kTimeQuadrature = 120.0;  // seconds, criterion 8

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

// The shared index grid of criteria 2, 4, 5, 7.
std::vector<std::pair<SystemId, QuantumNumbers>> criterion_grid() {
    std::vector<std::pair<SystemId, QuantumNumbers>> grid;
    for (long n = 0; n <= 10; ++n) grid.push_back({SystemId::sho1d, {0, n}});
    for (long l = 0; l <= 10; ++l)
        for (long k = 0; l + 2 * k <= 10; ++k) grid.push_back({SystemId::osc3d, {l, k}});
    for (long n = 1; n <= 8; ++n)
        for (long l = 0; l < n; ++l) grid.push_back({SystemId::coul3d, {l, n - l - 1}});
    for (long m = 0; m <= 8; ++m)
        for (long k = 0; m + 2 * k <= 8; ++k) grid.push_back({SystemId::osc2d, {m, k}});
    for (long n = 1; n <= 8; ++n)
        for (long m = 0; m < n; ++m) grid.push_back({SystemId::coul2d, {m, n - m - 1}});
    return grid;
}

bool report(int index, const std::string& name, bool ok, const std::string& extra) {
    std::printf("%s %2d. %s%s%s\n", ok ? "PASS" : "FAIL", index, name.c_str(),
                extra.empty() ? "" : " -- ", extra.c_str());
    std::fflush(stdout);
    return ok;
}

std::string secs(const Timer& t, double budget) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2fs of %.0fs budget", t.seconds(), budget);
    return buf;
}

bool criterion1() {
    Timer t;
    bool ok = true;
    for (SystemId id : all_systems())
        for (long lev = 0; lev <= 8; ++lev)
            ok = ok && factorization_check(id, lev) && intertwine_check(id, lev);
    ok = ok && t.seconds() < kTimeFactorize;
    return report(1, "exact factorization + intertwining, all systems, levels 0-8", ok,
                  secs(t, kTimeFactorize));
}

bool criterion2() {
    Timer t;
    bool ok = true;
    for (const auto& [id, qn] : criterion_grid())
        ok = ok && rodrigues_polynomial(id, qn) == reference_polynomial(id, qn);
    ok = ok && t.seconds() < kTimeRodrigues;
    return report(2, "operator-built polynomials equal the classical ones on the full grid", ok,
                  secs(t, kTimeRodrigues));
}

bool criterion3() {
    bool ok = true;
    std::vector<Rational> alphas;
    for (long l = 0; l <= 10; ++l) alphas.push_back(Rational(2 * l + 1, 2));  // l + 1/2
    for (long m = 0; m <= 8; ++m) alphas.push_back(Rational(m));
    for (long l = 0; l <= 8; ++l) alphas.push_back(Rational(2 * l + 1));
    for (long m = 0; m <= 8; ++m) alphas.push_back(Rational(2 * m));
    for (const Rational& a : alphas)
        for (unsigned k = 1; k <= 10; ++k)
            ok = ok && laguerre_r1(k, a) && laguerre_r2(k, a) && laguerre_r3(k, a);
    for (unsigned m = 1; m <= 8; ++m)
        for (unsigned k = 1; k <= 8; ++k) ok = ok && laguerre_chain_2d(k, m);
    return report(3, "all quoted Laguerre recurrences hold exactly on the grid", ok, "");
}

bool criterion4() {
    bool ok = true;
    for (const auto& [id, qn] : criterion_grid()) {
        Rational expect;
        const long lev = qn.level, k = qn.k;
        switch (id) {
            case SystemId::sho1d:
                expect = Rational(2 * k + 1, 2);
                break;
            case SystemId::osc3d:
                expect = Rational(2 * (lev + 2 * k) + 3, 2);
                break;
            case SystemId::coul3d: {
                const long n = lev + k + 1;
                expect = Rational(-1, 2 * n * n);
                break;
            }
            case SystemId::osc2d:
                expect = Rational(lev + 2 * k + 1);
                break;
            case SystemId::coul2d: {
                const long twon1 = 2 * (lev + k) + 1;  // 2(n - 1/2)
                expect = Rational(-2, twon1 * twon1);
                break;
            }
        }
        ok = ok && energy_law(id, qn) == expect &&
             build_by_rodrigues(id, qn).energy == expect;
    }
    return report(4, "derived spectra match the published energy laws exactly", ok, "");
}

bool criterion5() {
    bool ok = true;
    for (const auto& [id, qn] : criterion_grid())
        ok = ok && normalization_constant(id, qn) == normalization_constant_closed(id, qn);
    return report(5, "chain-product normalization equals every closed form exactly", ok, "");
}

bool criterion6() {
    bool ok = true;
    // Printed constants, exact.
    ok = ok && ground_norm_constant(SystemId::sho1d, 0) == Scalar::pi_quarter(-1);
    for (SystemId id : all_systems()) {
        const long top = id == SystemId::sho1d ? 0 : 8;
        for (long lev = 0; lev <= top; ++lev)
            ok = ok && ground_norm_constant(id, lev) == ground_norm_constant_closed(id, lev);
    }
    // Quadrature referee on every ground state of the grid levels.
    double worst = 0;
    for (SystemId id : all_systems()) {
        const long top = id == SystemId::sho1d ? 0 : 6;
        for (long lev = 0; lev <= top; ++lev) {
            const Wavefunction g = ground_wavefunction(id, lev);
            worst = std::max(worst, std::abs(inner_product_numeric(g, g) - 1.0));
        }
    }
    ok = ok && worst < kQuadTol;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "worst |norm^2 - 1| = %.2e (tol 1e-8)", worst);
    return report(6, "ground norm constants exact; every ground state integrates to 1", ok, buf);
}

bool criterion7() {
    bool ok = true;
    for (const auto& [id, qn] : criterion_grid()) ok = ok && eigencheck(build_by_rodrigues(id, qn));
    return report(7, "H psi = E psi holds as an exact symbolic zero on the full grid", ok, "");
}

bool criterion8() {
    Timer t;
    double worst = 0;
    const std::vector<std::pair<SystemId, long>> families = {
        {SystemId::sho1d, 0}, {SystemId::osc2d, 0}, {SystemId::osc3d, 0},
        {SystemId::coul2d, 0}, {SystemId::coul3d, 0},
        {SystemId::osc3d, 2},  {SystemId::coul3d, 1}};
    for (const auto& [id, lev] : families) {
        std::vector<Wavefunction> fam;
        for (long k = 0; k < 6; ++k) fam.push_back(build_by_rodrigues(id, {lev, k}));
        const auto g = gram_matrix(fam);
        for (std::size_t r = 0; r < 6; ++r)
            for (std::size_t c = 0; c < 6; ++c)
                worst = std::max(worst, std::abs(g[r][c] - (r == c ? 1.0 : 0.0)));
    }
    const bool ok = worst < kQuadTol && t.seconds() < kTimeQuadrature;
    char buf[96];
    std::snprintf(buf, sizeof(buf), "worst |G - I| entry = %.2e (tol 1e-8), %s", worst,
                  secs(t, kTimeQuadrature).c_str());
    return report(8, "6x6 Gram matrices are the identity for every ladder family", ok, buf);
}

bool criterion9() {
    const Wavefunction w = build_by_rodrigues(SystemId::coul3d, {0, 0});
    const double rederived = inner_product_numeric(w, w);
    Wavefunction printed = w;
    printed.norm = coulomb_norm_printed(1, 0);
    const double quoted = inner_product_numeric(printed, printed);
    const bool ok = std::abs(rederived - 1.0) < kQuadTol && std::abs(quoted - 0.5) < kQuadTol;
    char buf[128];
    std::snprintf(buf, sizeof(buf),
                  "printed closed-form constant integrates to %.9f, re-derived to %.9f", quoted,
                  rederived);
    return report(9, "the published ground-constant discrepancy is reproduced", ok, buf);
}

bool criterion10() {
    bool ok = true;

    // Byte-exact golden.
    ok = ok && render_text(evaluate_operator("[p, exp(-x^2)]")) == "2*i*x*exp(-x^2)";

    // 300 exact render/parse round-trips.
    std::mt19937 rng(90210);
    auto pick = [&](long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(rng);
    };
    for (int trial = 0; trial < 300 && ok; ++trial) {
        OpExpr e;
        const long terms = pick(1, 4);
        for (long t = 0; t < terms; ++t) {
            Rational re(pick(-4, 4), pick(1, 3));
            Rational im = pick(0, 2) == 0 ? Rational(pick(-2, 2), pick(1, 2)) : Rational(0);
            if (re.is_zero() && im.is_zero()) re = Rational(1);
            const long rads[] = {1, 2, 3, 6, 10};
            const Scalar c(re, im, Rational(rads[pick(0, 4)]), static_cast<int>(pick(-3, 3)));
            const FunctionFactor f{Rational(pick(-4, 5), pick(1, 2)), Rational(pick(-1, 0)),
                                   Rational(pick(-2, 2), pick(1, 2))};
            e += OpExpr::term(c, f, static_cast<int>(pick(0, 3)));
        }
        try {
            ok = ok && evaluate_operator(render_text(e)) == e;
        } catch (const Error&) {
            ok = false;
        }
    }

    // 10^4 fuzz inputs, sizes up to 64 KiB; nothing but the typed error
    // hierarchy may come out.
    const char* fragments[] = {"x",   "p",   "i",      "pi",     "sqrt",  "exp",      "A",
                               "Adag", "H",  "(",      ")",      "[",     "]",        ",",
                               "^",   "*",   "+",      "-",      "/",     "2",        "718",
                               "0",   " ",   "osc3d",  "coul2d", "sho1d", "(1/2)",    "x^2",
                               "exp(-x^2)", "sqrt(6)", "p^2",    "9999999999"};
    std::uniform_int_distribution<std::size_t> which(0, std::size(fragments) - 1);
    std::uniform_int_distribution<int> rawchar(32, 126);
    for (int trial = 0; trial < 10000 && ok; ++trial) {
        std::string s;
        if (trial % 500 == 0) {
            // Large input: a sum chain close to the 64 KiB cap.
            const std::size_t target = 64 * 1024 - 16;
            s.reserve(target + 8);
            s = "x";
            while (s.size() + 4 < target) {
                s += " + ";
                s += fragments[which(rng)];
            }
        } else if (trial % 4 == 0) {
            const std::size_t len = static_cast<std::size_t>(pick(1, 120));
            for (std::size_t j = 0; j < len; ++j) s += static_cast<char>(rawchar(rng));
        } else {
            const std::size_t n = static_cast<std::size_t>(pick(1, 24));
            for (std::size_t j = 0; j < n; ++j) s += fragments[which(rng)];
        }
        try {
            evaluate_operator(s);
        } catch (const Error&) {
            // typed rejection
        } catch (...) {
            ok = false;
        }
    }

    return report(10, "DSL round-trips, 10^4-input fuzz, byte-exact commutator golden", ok, "");
}

}  // namespace

int main() {
    std::printf("acceptance gate: exact-engine criteria with pinned tolerances\n");
    bool all = true;
    all &= criterion1();
    all &= criterion2();
    all &= criterion3();
    all &= criterion4();
    all &= criterion5();
    all &= criterion6();
    all &= criterion7();
    all &= criterion8();
    all &= criterion9();
    all &= criterion10();
    std::printf("%s\n", all ? "acceptance: all 10 criteria passed"
                            : "acceptance: at least one criterion FAILED");
    return all ? 0 : 1;
}
