#include <random>
#include <string>

#include "doctest.h"
#include "ladderkit/dsl.hpp"
#include "ladderkit/render.hpp"
#include "ladderkit/systems.hpp"

using namespace ladderkit;

namespace {
OpExpr ev(const std::string& s) { return evaluate_operator(s); }
}  // namespace

TEST_CASE("golden renderings are byte-exact") {
    CHECK(render_text(ev("[p, exp(-x^2)]")) == "2*i*x*exp(-x^2)");
    CHECK(render_text(ev("p*x")) == "x*p - i");
    CHECK(render_text(ev("[x, p]")) == "i");
    CHECK(render_text(ev("x^2 + 2*x + 1")) == "1 + 2*x + x^2");
    CHECK(render_text(ev("(1/2)*p^2")) == "(1/2)*p^2");
    CHECK(render_text(ev("sqrt(8)")) == "2*sqrt(2)");
    CHECK(render_text(ev("pi^(-1/4)*x")) == "pi^(-1/4)*x");
    CHECK(render_text(ev("exp(-(1/2)*x^2 - 2*x)")) == "exp(-(1/2)*x^2 - 2*x)");
    CHECK(render_latex(lowering_op(SystemId::sho1d, 0)) ==
          "\\frac{1}{\\sqrt{2}}\\left(p - i x\\right)");
}

TEST_CASE("grammar precedence and composition") {
    CHECK(ev("p^2*x") == ev("(p^2)*x"));
    CHECK(ev("-x^2") == ev("-(x^2)"));
    CHECK(ev("2*x + p*3") == ev("3*p + x*2"));
    CHECK(ev("2(x + p)") == ev("2*x + 2*p"));          // juxtaposed group
    CHECK(ev("i[x, p]") == OpExpr::scalar(Scalar(-1)));  // i * i
    CHECK(ev("[x, [x, p]]").is_zero());
    CHECK(ev("x - x").is_zero());
    CHECK(ev("p^3") == ev("p*p*p"));
    CHECK(ev("(x + p)^2") == ev("x^2 + x*p + p*x + p^2"));
    CHECK(ev("r^2*p") == ev("x^2*p"));  // coordinate aliases normalize
    CHECK(ev("rho") == ev("x"));
    CHECK(ev("sqrt(9/2)") == OpExpr::scalar(Scalar(Rational(3, 2)) *
                                            Scalar::sqrt_rational(Rational(2))));
    CHECK(ev("pi^(1/2)*pi^(1/2)") == OpExpr::scalar(Scalar::pi_quarter(4)));
    CHECK(ev("x^(3/2)*x^(1/2)") == ev("x^2"));
    CHECK(ev("exp(-x^2)*exp(x^2)") == OpExpr::one());
    CHECK(ev("3/4*x") == ev("(3/4)*x"));  // rational literal, not division
}

TEST_CASE("system macros expand to the library operators") {
    CHECK(ev("A(osc3d, 2)") == lowering_op(SystemId::osc3d, 2));
    CHECK(ev("Adag(coul2d, 1)") == raising_op(SystemId::coul2d, 1));
    CHECK(ev("H(sho1d, 0)") == hamiltonian(SystemId::sho1d, 0));
    // The factorization identity, straight through the parser.
    CHECK(ev("H(osc3d, 1) - Adag(osc3d, 1)*A(osc3d, 1)") ==
          OpExpr::scalar(Scalar(Rational(5, 2))));
    CHECK(ev("[A(sho1d, 0), Adag(sho1d, 0)]") == OpExpr::one());
}

TEST_CASE("rejections carry positions and reasons") {
    auto offset_of = [](const std::string& src) -> std::size_t {
        try {
            ev(src);
        } catch (const ParseError& e) {
            return e.offset;
        }
        return static_cast<std::size_t>(-1);
    };

    CHECK(offset_of("x + ") == 4);
    CHECK(offset_of("2*)x") == 2);
    CHECK(offset_of("sqrt(2") == 6);
    CHECK(offset_of("A(foo, 1)") == 2);
    CHECK(offset_of("x^(1/0)") == 5);  // points at the zero denominator
    CHECK(offset_of("x ? p") == 2);

    CHECK_THROWS_AS(ev(""), ParseError);
    CHECK_THROWS_AS(ev("x/2"), ParseError);          // no division operator
    CHECK_THROWS_AS(ev("x^(1/3)"), ParseError);      // function powers: den 1 or 2
    CHECK_THROWS_AS(ev("pi^(1/3)"), ParseError);     // pi powers: quarters
    CHECK_THROWS_AS(ev("p^(-1)"), ParseError);       // no inverse momentum
    CHECK_THROWS_AS(ev("p^(1/2)"), ParseError);
    CHECK_THROWS_AS(ev("sqrt(-2)"), ParseError);
    CHECK_THROWS_AS(ev("sqrt(0)"), ParseError);
    CHECK_THROWS_AS(ev("exp(p)"), ParseError);       // momentum inside exp
    CHECK_THROWS_AS(ev("exp(1 + x)"), ParseError);   // constant term inside exp
    CHECK_THROWS_AS(ev("exp(x^3)"), ParseError);     // only degrees 1 and 2
    CHECK_THROWS_AS(ev("exp(exp(x))"), ParseError);  // no nesting
    CHECK_THROWS_AS(ev("A(osc3d, -1)"), ParseError);
    CHECK_THROWS_AS(ev("H(osc3d)"), ParseError);

    // Depth cap instead of a stack overflow.
    std::string deep;
    for (int j = 0; j < 300; ++j) deep += '(';
    deep += 'x';
    for (int j = 0; j < 300; ++j) deep += ')';
    CHECK_THROWS_AS(ev(deep), ParseError);

    // Symbolic folds are bounded; plain monomials are not.
    CHECK_THROWS_AS(ev("(p + x)^65"), AlgebraError);
    CHECK(ev("x^65") == OpExpr::fn(FunctionFactor::x_pow(Rational(65))));
}

namespace {

// Random canonical expressions whose rendering must parse back to the
// same value.
struct TripGen {
    std::mt19937 rng;
    explicit TripGen(unsigned seed) : rng(seed) {}
    long pick(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }
    Rational rat(long lo, long hi, long den) { return Rational(pick(lo, hi), pick(1, den)); }

    OpExpr make() {
        OpExpr e;
        const long terms = pick(1, 4);
        for (long t = 0; t < terms; ++t) {
            Rational re = rat(-4, 4, 3);
            Rational im = pick(0, 2) == 0 ? rat(-2, 2, 2) : Rational(0);
            if (re.is_zero() && im.is_zero()) re = Rational(1);
            const long rads[] = {1, 2, 3, 6, 10};
            const Scalar c(re, im, Rational(rads[pick(0, 4)]), static_cast<int>(pick(-3, 3)));
            const FunctionFactor f{rat(-4, 5, 2), Rational(pick(-1, 0)), rat(-2, 2, 2)};
            e += OpExpr::term(c, f, static_cast<int>(pick(0, 3)));
        }
        return e;
    }
};

}  // namespace

TEST_CASE("render and reparse round-trips") {
    TripGen gen(424242);
    for (int trial = 0; trial < 300; ++trial) {
        const OpExpr e = gen.make();
        const std::string text = render_text(e);
        CAPTURE(text);
        OpExpr back;
        REQUIRE_NOTHROW(back = ev(text));
        CHECK(back == e);
    }
}

TEST_CASE("fuzzing never escapes the typed error contract") {
    const char* fragments[] = {"x",  "p",    "i",    "pi",   "sqrt", "exp", "A",  "Adag",
                               "H",  "(",    ")",    "[",    "]",    ",",   "^",  "*",
                               "+",  "-",    "/",    "2",    "13",   "0",   " ",  "osc3d",
                               "coul2d", "sho1d", "(1/2)", "x^2", "exp(-x^2)", "9999999999"};
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::size_t> nfrag(1, 24);
    std::uniform_int_distribution<std::size_t> which(0, std::size(fragments) - 1);
    std::uniform_int_distribution<int> rawchar(32, 126);

    int parsed = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        std::string s;
        if (trial % 4 == 0) {
            const std::size_t len = nfrag(rng) * 3;
            for (std::size_t j = 0; j < len; ++j) s += static_cast<char>(rawchar(rng));
        } else {
            const std::size_t n = nfrag(rng);
            for (std::size_t j = 0; j < n; ++j) s += fragments[which(rng)];
        }
        bool foreign_exception = false;
        try {
            ev(s);
            ++parsed;
        } catch (const Error&) {
            // typed rejection is the contract
        } catch (...) {
            foreign_exception = true;
        }
        CAPTURE(s);
        CHECK(!foreign_exception);
    }
    // The fragment soup must actually exercise the success path too.
    CHECK(parsed > 100);
}
