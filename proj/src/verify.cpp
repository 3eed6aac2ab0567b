#include "ladderkit/verify.hpp"

#include <map>
#include <random>

#include "ladderkit/dsl.hpp"
#include "ladderkit/quadrature.hpp"
#include "ladderkit/render.hpp"
#include "ladderkit/wavefunction.hpp"

namespace ladderkit {

namespace {

void check(std::vector<CheckResult>& out, const std::string& name, bool ok,
           const std::string& detail = "") {
    out.push_back({name, ok, ok ? "" : detail});
}

template <typename F>
void check_throws(std::vector<CheckResult>& out, const std::string& name, F&& f) {
    bool ok = false;
    std::string detail = "no failure reported";
    try {
        f();
    } catch (const Error& e) {
        ok = true;
        detail = e.what();
    }
    check(out, name, ok, detail);
}

}  // namespace

std::vector<CheckResult> verify_system(SystemId id, long max_level) {
    std::vector<CheckResult> out;
    const SystemSpec& spec = system(id);
    const std::string& sn = spec.name;

    for (long lev = 0; lev <= max_level; ++lev) {
        check(out, sn + " factorization level " + std::to_string(lev), factorization_check(id, lev));
        check(out, sn + " intertwining level " + std::to_string(lev), intertwine_check(id, lev));
    }

    const long lev_cap = spec.id == SystemId::sho1d ? 0 : std::min(max_level, 6L);
    for (long lev = 0; lev <= lev_cap; ++lev) {
        bool ok = false;
        std::string detail;
        try {
            const GaugeSolution g = solve_gauge(lowering_op(id, lev), spec.kernel_shift);
            const FunctionFactor ground = g.f * FunctionFactor::x_pow(-spec.kernel_shift);
            ok = g.s == Scalar::sqrt_rational(Rational(1, 2)) &&
                 ground == ground_envelope(id, lev);
            if (!ok) detail = "gauge factor disagrees with the ground envelope";
        } catch (const Error& e) {
            detail = e.what();
        }
        check(out, sn + " gauge solve level " + std::to_string(lev), ok, detail);
    }

    {
        bool ok = true;
        std::map<long, Rational> diag;
        for (const auto& e : chain_energies(id, max_level)) {
            const Rational expected =
                energy_law(id, {e.column, e.row}) + Rational(e.column) * spec.chain_shift;
            if (e.energy != expected) ok = false;
            auto [it, inserted] = diag.emplace(e.column + e.row, e.energy);
            if (!inserted && it->second != e.energy) ok = false;
        }
        check(out, sn + " chain degeneracies to level " + std::to_string(max_level), ok,
              "anti-diagonal energies disagree");
    }

    for (long lev = 0; lev <= lev_cap; ++lev)
        for (long k = 0; k <= 6; ++k) {
            const QuantumNumbers qn{lev, k};
            check(out,
                  sn + " chain norm closed form (level " + std::to_string(lev) + ", k " +
                      std::to_string(k) + ")",
                  normalization_constant(id, qn) == normalization_constant_closed(id, qn));
        }

    const long grid_cap = std::min(max_level, 8L);
    for (long lev = 0; lev <= (spec.id == SystemId::sho1d ? 0 : grid_cap); ++lev) {
        for (long k = 0; lev + 2 * k <= grid_cap; ++k) {
            const QuantumNumbers qn{lev, k};
            const std::string tag =
                " (level " + std::to_string(lev) + ", k " + std::to_string(k) + ")";
            bool agree = false, eig = false, nodes = false, unit = false;
            std::string detail;
            try {
                const Wavefunction a = build_by_rodrigues(id, qn);
                const Wavefunction b = build_by_ladder(id, qn);
                agree = routes_agree(a, b);
                eig = eigencheck(a);
                nodes = node_count(a) == k;
                unit = exact_norm_square(a) == Scalar(1);
            } catch (const Error& e) {
                detail = e.what();
            }
            check(out, sn + " route agreement" + tag, agree, detail);
            check(out, sn + " eigenvalue equation" + tag, eig, detail);
            check(out, sn + " node count" + tag, nodes, detail);
            check(out, sn + " exact unit norm" + tag, unit, detail);
        }
    }

    check(out, sn + " ground norm closed form to level " + std::to_string(lev_cap), [&] {
        for (long lev = 0; lev <= lev_cap; ++lev)
            if (ground_norm_constant(id, lev) != ground_norm_constant_closed(id, lev)) return false;
        return true;
    }());

    return out;
}

std::vector<CheckResult> verify_dsl(unsigned seed) {
    std::vector<CheckResult> out;

    check(out, "dsl golden commutator render",
          render_text(evaluate_operator("[p, exp(-x^2)]")) == "2*i*x*exp(-x^2)");
    check(out, "dsl canonical commutator value",
          evaluate_operator("[x, p]") == OpExpr::scalar(Scalar::i()));
    check(out, "dsl macro lowering operator",
          evaluate_operator("A(coul3d, 1)") == lowering_op(SystemId::coul3d, 1));
    check(out, "dsl macro factorization identity",
          evaluate_operator("Adag(osc3d, 0)*A(osc3d, 0) + 3/2") ==
              hamiltonian(SystemId::osc3d, 0));
    check(out, "dsl precedence: power binds before product",
          evaluate_operator("2*p^2") == evaluate_operator("2*(p^2)"));
    check(out, "dsl precedence: unary minus over powers",
          evaluate_operator("-x^2") == evaluate_operator("-(x^2)"));
    check(out, "dsl quarter powers of pi",
          evaluate_operator("pi^(1/4)*pi^(3/4)") == OpExpr::scalar(Scalar::pi_quarter(4)));
    check(out, "dsl radical literals",
          evaluate_operator("sqrt(8)") == OpExpr::scalar(Scalar(Rational(2)) *
                                                         Scalar::sqrt_rational(Rational(2))));

    check_throws(out, "dsl rejects division outside literals",
                 [] { evaluate_operator("x/2"); });
    check_throws(out, "dsl rejects constant terms inside exp",
                 [] { evaluate_operator("exp(1 + x)"); });
    check_throws(out, "dsl rejects cubic exponent denominators",
                 [] { evaluate_operator("x^(1/3)"); });
    check_throws(out, "dsl rejects oversized folds", [] { evaluate_operator("(p + x)^65"); });

    {
        bool ok = false;
        try {
            evaluate_operator("x + ");
        } catch (const ParseError& e) {
            ok = e.offset == 4 && e.found == "end of input";
        }
        check(out, "dsl error offsets", ok);
    }

    // Round-trips: random canonical expressions survive render + reparse.
    std::mt19937 rng(seed);
    auto rand_rat = [&](long lo, long hi, long den) {
        std::uniform_int_distribution<long> num(lo, hi);
        std::uniform_int_distribution<long> d(1, den);
        return Rational(num(rng), d(rng));
    };
    bool trips_ok = true;
    std::string trip_detail;
    for (int trial = 0; trial < 60 && trips_ok; ++trial) {
        OpExpr e;
        std::uniform_int_distribution<int> nterms(1, 4);
        const int n = nterms(rng);
        for (int t = 0; t < n; ++t) {
            Rational re = rand_rat(-4, 4, 3);
            Rational im = rand_rat(-2, 2, 2);
            if (re.is_zero() && im.is_zero()) re = Rational(1);
            std::uniform_int_distribution<int> radpick(0, 2);
            const long rads[3] = {1, 2, 6};
            std::uniform_int_distribution<int> pipick(-2, 2);
            const Scalar c(re, im, Rational(rads[radpick(rng)]), pipick(rng));
            std::uniform_int_distribution<long> pw(-2, 3);
            std::uniform_int_distribution<long> mom(0, 2);
            const FunctionFactor f{Rational(pw(rng), 2), rand_rat(-1, 0, 1), rand_rat(-1, 1, 2)};
            e += OpExpr::term(c, f, static_cast<int>(mom(rng)));
        }
        const std::string text = render_text(e);
        try {
            if (evaluate_operator(text) != e) {
                trips_ok = false;
                trip_detail = "mismatch for: " + text;
            }
        } catch (const Error& err) {
            trips_ok = false;
            trip_detail = std::string(err.what()) + " for: " + text;
        }
    }
    check(out, "dsl render round-trips", trips_ok, trip_detail);

    return out;
}

bool all_ok(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.ok) return false;
    return true;
}

}  // namespace ladderkit
