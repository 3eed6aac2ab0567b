#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <random>

#include "doctest.h"
#include "ladderkit/fn_state.hpp"
#include "ladderkit/op_ast.hpp"
#include "ladderkit/op_expr.hpp"

using namespace ladderkit;

namespace {

const Scalar kI = Scalar::i();

OpExpr gaussian(Rational g) { return OpExpr::fn(FunctionFactor{Rational(0), g, Rational(0)}); }

// ------------------------------------------------------------------
// Random expression machinery shared by the property tests.

struct Gen {
    std::mt19937 rng;
    explicit Gen(unsigned seed) : rng(seed) {}
    long pick(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

    Scalar scalar() {
        Scalar c(Rational(pick(-3, 3), pick(1, 2)));
        if (pick(0, 2) == 0) c *= kI;
        if (pick(0, 3) == 0) c = c + Scalar(Rational(pick(0, 2)));
        if (c.is_zero()) c = Scalar(1);
        return c;
    }
    FunctionFactor fn() {
        return FunctionFactor{Rational(pick(-2, 3), pick(1, 2)), Rational(pick(-1, 1)),
                              Rational(pick(-1, 1), 2)};
    }
    OpExpr expr(int max_terms = 3) {
        OpExpr e;
        const long n = pick(1, max_terms);
        for (long t = 0; t < n; ++t)
            e += OpExpr::term(scalar(), fn(), static_cast<int>(pick(0, 2)));
        return e;
    }
};

}  // namespace

TEST_CASE("canonical commutators and normal ordering") {
    const OpExpr x = OpExpr::coordinate();
    const OpExpr p = OpExpr::momentum();

    CHECK(OpExpr::commutator(x, p) == OpExpr::scalar(kI));
    CHECK(OpExpr::commutator(p, x) == OpExpr::scalar(-kI));
    CHECK(OpExpr::commutator(x, x).is_zero());
    CHECK(OpExpr::commutator(p, p).is_zero());

    // p x = x p - i
    CHECK(p * x == x * p - OpExpr::scalar(kI));
    // [p, x^2] = -2 i x
    CHECK(OpExpr::commutator(p, x * x) == x.scaled(Scalar(-2) * kI));
    // [p, exp(-x^2)] = 2 i x exp(-x^2)
    const FunctionFactor g{Rational(0), Rational(-1), Rational(0)};
    CHECK(OpExpr::commutator(p, OpExpr::fn(g)) ==
          OpExpr::term(Scalar(2) * kI, g * FunctionFactor::x_pow(Rational(1)), 0));
    // [p, x^(-1)] = i x^(-2): the radial centrifugal commutator.
    CHECK(OpExpr::commutator(p, OpExpr::fn(FunctionFactor::x_pow(Rational(-1)))) ==
          OpExpr::term(kI, FunctionFactor::x_pow(Rational(-2)), 0));
    // Half-integer powers differentiate correctly: [p, x^(1/2)] = -(i/2) x^(-1/2).
    CHECK(OpExpr::commutator(p, OpExpr::fn(FunctionFactor::x_pow(Rational(1, 2)))) ==
          OpExpr::term(Scalar(Rational(-1, 2)) * kI, FunctionFactor::x_pow(Rational(-1, 2)), 0));
}

TEST_CASE("algebraic laws on random expressions") {
    Gen gen(37);
    for (int trial = 0; trial < 120; ++trial) {
        const OpExpr a = gen.expr();
        const OpExpr b = gen.expr();
        const OpExpr c = gen.expr();

        CHECK((a + b) - b == a);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) * c == a * c + b * c);

        // Hermitian conjugation: involution and anti-multiplicativity.
        CHECK(a.dagger().dagger() == a);
        CHECK((a * b).dagger() == b.dagger() * a.dagger());

        // Jacobi identity.
        const OpExpr jac = OpExpr::commutator(a, OpExpr::commutator(b, c)) +
                           OpExpr::commutator(b, OpExpr::commutator(c, a)) +
                           OpExpr::commutator(c, OpExpr::commutator(a, b));
        CHECK(jac.is_zero());

        // Left momentum application is multiplication by p.
        CHECK(a.apply_p_left() == OpExpr::momentum() * a);

        // Small powers agree with explicit products.
        CHECK(a.pow_uint(0) == OpExpr::one());
        CHECK(a.pow_uint(3) == a * a * a);
    }
}

TEST_CASE("momentum acts as derivation through gaussians") {
    const OpExpr p = OpExpr::momentum();
    // exp(ax^2) exp(bx^2) = exp((a+b)x^2) and p respects the product rule.
    const OpExpr f = gaussian(Rational(-1));
    const OpExpr g = gaussian(Rational(-2));
    const OpExpr fg = gaussian(Rational(-3));
    CHECK(f * g == fg);
    CHECK(OpExpr::commutator(p, fg) ==
          OpExpr::commutator(p, f) * g + f * OpExpr::commutator(p, g));
}

// ------------------------------------------------------------------
// Truncated oscillator-basis matrix oracle.  x and p have exact matrix
// elements in the harmonic basis; any polynomial operator expression
// evaluated as matrices must match its normal-ordered form on the block
// that truncation cannot reach.

namespace {

using CMat = Eigen::MatrixXcd;
constexpr int kDim = 40;
constexpr int kSafe = 22;  // compared block, safely away from truncation

CMat x_matrix() {
    CMat m = CMat::Zero(kDim, kDim);
    for (int n = 1; n < kDim; ++n) {
        const double v = std::sqrt(n / 2.0);
        m(n - 1, n) = v;
        m(n, n - 1) = v;
    }
    return m;
}

CMat p_matrix() {
    CMat m = CMat::Zero(kDim, kDim);
    for (int n = 1; n < kDim; ++n) {
        const double v = std::sqrt(n / 2.0);
        m(n - 1, n) = std::complex<double>(0, -v);
        m(n, n - 1) = std::complex<double>(0, v);
    }
    return m;
}

CMat ast_matrix(const OpAstPtr& t) {
    static const CMat X = x_matrix();
    static const CMat P = p_matrix();
    switch (t->kind) {
        case OpAst::Kind::Sum: {
            CMat m = CMat::Zero(kDim, kDim);
            for (const auto& c : t->children) m += ast_matrix(c);
            return m;
        }
        case OpAst::Kind::Product: {
            CMat m = CMat::Identity(kDim, kDim);
            for (const auto& c : t->children) m *= ast_matrix(c);
            return m;
        }
        case OpAst::Kind::Power: {
            CMat m = CMat::Identity(kDim, kDim);
            const CMat b = ast_matrix(t->children[0]);
            for (long e = 0; e < t->exponent.to_long(); ++e) m *= b;
            return m;
        }
        case OpAst::Kind::Commutator: {
            const CMat a = ast_matrix(t->children[0]);
            const CMat b = ast_matrix(t->children[1]);
            return a * b - b * a;
        }
        case OpAst::Kind::Coordinate:
            return X;
        case OpAst::Kind::Momentum:
            return P;
        case OpAst::Kind::ScalarLit:
            return t->scalar.to_complex() * CMat::Identity(kDim, kDim);
        default:
            FAIL("unexpected node in matrix oracle");
            return CMat::Zero(kDim, kDim);
    }
}

CMat expr_matrix(const OpExpr& e) {
    static const CMat X = x_matrix();
    static const CMat P = p_matrix();
    CMat m = CMat::Zero(kDim, kDim);
    for (const Term& t : e.terms()) {
        REQUIRE(t.fn.gauss.is_zero());
        REQUIRE(t.fn.linear.is_zero());
        REQUIRE(t.fn.power.is_integer());
        REQUIRE(!t.fn.power.is_negative());
        CMat part = t.coeff.to_complex() * CMat::Identity(kDim, kDim);
        for (long j = 0; j < t.fn.power.to_long(); ++j) part *= X;
        for (int j = 0; j < t.mom; ++j) part *= P;
        m += part;
    }
    return m;
}

// Random polynomial AST with a bounded total degree in (x, p).
OpAstPtr random_poly_ast(Gen& gen, int depth, int max_degree, int* degree) {
    if (depth == 0 || gen.pick(0, 4) == 0) {
        switch (gen.pick(0, max_degree > 0 ? 3 : 1)) {
            case 0:
                *degree = 0;
                return OpAst::lit(Scalar(Rational(gen.pick(-3, 3), gen.pick(1, 2))));
            case 1:
                *degree = 0;
                return OpAst::lit(kI);
            case 2:
                *degree = 1;
                return OpAst::coordinate();
            default:
                *degree = 1;
                return OpAst::momentum();
        }
    }
    switch (gen.pick(0, 3)) {
        case 0: {  // sum
            std::vector<OpAstPtr> kids;
            int d = 0;
            const long n = gen.pick(2, 3);
            for (long j = 0; j < n; ++j) {
                int dj = 0;
                kids.push_back(random_poly_ast(gen, depth - 1, max_degree, &dj));
                d = std::max(d, dj);
            }
            *degree = d;
            return OpAst::sum(std::move(kids));
        }
        case 1: {  // product
            std::vector<OpAstPtr> kids;
            int d = 0;
            const long n = gen.pick(2, 3);
            for (long j = 0; j < n; ++j) {
                int dj = 0;
                kids.push_back(random_poly_ast(gen, depth - 1, (max_degree - d) / 2, &dj));
                d += dj;
            }
            *degree = d;
            return OpAst::product(std::move(kids));
        }
        case 2: {  // power
            int db = 0;
            OpAstPtr base = random_poly_ast(gen, depth - 1, max_degree / 2, &db);
            const long e = gen.pick(0, db > 0 ? std::max(1L, long(max_degree / std::max(1, db))) : 3);
            *degree = static_cast<int>(e) * db;
            return OpAst::power(std::move(base), Rational(e));
        }
        default: {  // commutator
            int da = 0, db = 0;
            OpAstPtr a = random_poly_ast(gen, depth - 1, max_degree / 2, &da);
            OpAstPtr b = random_poly_ast(gen, depth - 1, max_degree / 2, &db);
            *degree = da + db;
            return OpAst::commutator(std::move(a), std::move(b));
        }
    }
}

}  // namespace

TEST_CASE("normal ordering matches the truncated matrix oracle") {
    Gen gen(101);
    int done = 0;
    while (done < 80) {
        int degree = 0;
        OpAstPtr t = random_poly_ast(gen, 3, 8, &degree);
        if (degree > 8) continue;
        ++done;
        const OpExpr e = normal_order(t);
        const CMat ref = ast_matrix(t);
        const CMat got = expr_matrix(e);
        for (int r = 0; r < kSafe; ++r)
            for (int c = 0; c < kSafe; ++c) {
                const std::complex<double> d = ref(r, c) - got(r, c);
                const double tol = 1e-6 + 1e-9 * std::abs(ref(r, c));
                CHECK(std::abs(d) <= tol);
            }
    }
}

// ------------------------------------------------------------------
// Confluence: rewriting a tree by valid algebraic identities must not
// change its normal-ordered form.

namespace {

OpAstPtr random_ast(Gen& gen, int depth) {
    if (depth == 0 || gen.pick(0, 4) == 0) {
        switch (gen.pick(0, 4)) {
            case 0:
                return OpAst::lit(gen.scalar());
            case 1:
                return OpAst::coordinate();
            case 2:
                return OpAst::momentum();
            case 3:
                return OpAst::lit(gen.fn());
            default:
                return OpAst::lit(gen.expr(2));
        }
    }
    switch (gen.pick(0, 3)) {
        case 0: {
            std::vector<OpAstPtr> kids;
            const long n = gen.pick(2, 3);
            for (long j = 0; j < n; ++j) kids.push_back(random_ast(gen, depth - 1));
            return OpAst::sum(std::move(kids));
        }
        case 1: {
            std::vector<OpAstPtr> kids;
            const long n = gen.pick(2, 3);
            for (long j = 0; j < n; ++j) kids.push_back(random_ast(gen, depth - 1));
            return OpAst::product(std::move(kids));
        }
        case 2:
            return OpAst::power(random_ast(gen, depth - 1), Rational(gen.pick(0, 2)));
        default:
            return OpAst::commutator(random_ast(gen, depth - 1), random_ast(gen, depth - 1));
    }
}

// Rewrite by identities: swap product neighbours (adding the
// commutator), expand commutators, unroll powers, shuffle sums.
OpAstPtr rewritten(Gen& gen, const OpAstPtr& t) {
    std::vector<OpAstPtr> kids;
    for (const auto& c : t->children) kids.push_back(rewritten(gen, c));
    switch (t->kind) {
        case OpAst::Kind::Sum:
            std::shuffle(kids.begin(), kids.end(), gen.rng);
            return OpAst::sum(std::move(kids));
        case OpAst::Kind::Product: {
            if (kids.size() >= 2 && gen.pick(0, 1) == 0) {
                const std::size_t at = static_cast<std::size_t>(gen.pick(0, long(kids.size()) - 2));
                // ...ab...  ->  ...ba... + ...[a,b]...
                std::vector<OpAstPtr> swapped = kids, comm = kids;
                std::swap(swapped[at], swapped[at + 1]);
                comm[at] = OpAst::commutator(kids[at], kids[at + 1]);
                comm.erase(comm.begin() + static_cast<long>(at) + 1);
                return OpAst::sum({OpAst::product(std::move(swapped)),
                                   comm.size() == 1 ? comm[0] : OpAst::product(std::move(comm))});
            }
            return OpAst::product(std::move(kids));
        }
        case OpAst::Kind::Power: {
            const long e = t->exponent.to_long();
            if (e >= 1 && gen.pick(0, 1) == 0)
                return OpAst::product(
                    {kids[0], OpAst::power(kids[0], Rational(e - 1))});
            return OpAst::power(kids[0], t->exponent);
        }
        case OpAst::Kind::Commutator:
            if (gen.pick(0, 1) == 0)
                return OpAst::sum({OpAst::product({kids[0], kids[1]}),
                                   OpAst::product({OpAst::lit(Scalar(-1)), kids[1], kids[0]})});
            return OpAst::commutator(kids[0], kids[1]);
        default:
            return t;
    }
}

}  // namespace

TEST_CASE("rewrites confluent under normal ordering") {
    Gen gen(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const OpAstPtr t = random_ast(gen, 4);
        const OpAstPtr u = rewritten(gen, t);
        CHECK(normal_order(t) == normal_order(u));
    }
}

TEST_CASE("oversized symbolic folds are rejected, monomials are not") {
    const OpAstPtr sum_pow =
        OpAst::power(OpAst::sum({OpAst::momentum(), OpAst::coordinate()}), Rational(65));
    CHECK_THROWS_AS(normal_order(sum_pow), AlgebraError);

    // A single momentum-free monomial folds at any exponent.
    const OpAstPtr mono = OpAst::power(OpAst::coordinate(), Rational(65));
    CHECK(normal_order(mono) == OpExpr::fn(FunctionFactor::x_pow(Rational(65))));
    const OpAstPtr half = OpAst::power(OpAst::coordinate(), Rational(1, 2));
    CHECK(normal_order(half) == OpExpr::fn(FunctionFactor::x_pow(Rational(1, 2))));
}

TEST_CASE("states and the gauge-shifted derivation") {
    // D_c on h = x^a: -i (a x^(a-1) + c x^(a-1)).
    const OpExpr h = OpExpr::fn(FunctionFactor::x_pow(Rational(3)));
    const OpExpr d1 = derive_with_shift(h, Rational(1));
    CHECK(d1 == OpExpr::term(Scalar(-4) * kI, FunctionFactor::x_pow(Rational(2)), 0));

    // (p + i c/x) annihilates the bare kernel: applying p to the kernel
    // state gives -i c/x times it.
    const FnState kernel = FnState::kernel_only(Rational(1, 2));
    const FnState pk = apply_to_state(OpExpr::momentum(), kernel);
    CHECK(pk.parts == OpExpr::term(Scalar(Rational(-1, 2)) * kI,
                                   FunctionFactor::x_pow(Rational(-1)), 0));

    // Applying x then p obeys the product rule relative to the kernel.
    const FnState s(OpExpr::fn(FunctionFactor{Rational(2), Rational(-1), Rational(0)}),
                    Rational(1));
    const OpExpr px = OpExpr::momentum() * OpExpr::coordinate();
    const FnState via_op = apply_to_state(px, s);
    const FnState via_steps = apply_to_state(
        OpExpr::momentum(), apply_to_state(OpExpr::coordinate(), s));
    CHECK(via_op == via_steps);
}
