#include "ladderkit/dsl.hpp"

#include <cctype>

#include "ladderkit/systems.hpp"

namespace ladderkit {

namespace {

constexpr int kMaxDepth = 256;

enum class Tok { Ident, Int, Star, Slash, Caret, Plus, Minus, LParen, RParen, LBracket, RBracket, Comma, End };

struct Lexeme {
    Tok kind;
    std::string text;
    std::size_t offset;
};

std::vector<Lexeme> lex(const std::string& s) {
    std::vector<Lexeme> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const unsigned char ch = static_cast<unsigned char>(s[i]);
        if (std::isspace(ch)) {
            ++i;
            continue;
        }
        const std::size_t at = i;
        if (std::isdigit(ch)) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Tok::Int, s.substr(i, j - i), at});
            i = j;
            continue;
        }
        if (std::isalpha(ch) || ch == '_') {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
                ++j;
            out.push_back({Tok::Ident, s.substr(i, j - i), at});
            i = j;
            continue;
        }
        Tok k;
        switch (ch) {
            case '*': k = Tok::Star; break;
            case '/': k = Tok::Slash; break;
            case '^': k = Tok::Caret; break;
            case '+': k = Tok::Plus; break;
            case '-': k = Tok::Minus; break;
            case '(': k = Tok::LParen; break;
            case ')': k = Tok::RParen; break;
            case '[': k = Tok::LBracket; break;
            case ']': k = Tok::RBracket; break;
            case ',': k = Tok::Comma; break;
            default:
                throw ParseError(at, "a token", "'" + std::string(1, s[i]) + "'");
        }
        out.push_back({k, std::string(1, s[i]), at});
        ++i;
    }
    out.push_back({Tok::End, "", s.size()});
    return out;
}

struct Parser {
    std::vector<Lexeme> toks;
    std::size_t pos = 0;
    int depth = 0;

    const Lexeme& peek(std::size_t ahead = 0) const {
        const std::size_t i = pos + ahead;
        return i < toks.size() ? toks[i] : toks.back();
    }
    bool at(Tok k) const { return peek().kind == k; }

    [[noreturn]] void fail(const std::string& expected) const {
        const Lexeme& l = peek();
        throw ParseError(l.offset, expected,
                         l.kind == Tok::End ? "end of input" : "'" + l.text + "'");
    }
    void expect(Tok k, const char* what) {
        if (!at(k)) fail(what);
        ++pos;
    }

    struct DepthGuard {
        Parser& p;
        explicit DepthGuard(Parser& pp) : p(pp) {
            if (++p.depth > kMaxDepth)
                throw ParseError(p.peek().offset, "a shallower expression",
                                 "nesting deeper than " + std::to_string(kMaxDepth));
        }
        ~DepthGuard() { --p.depth; }
    };

    // a [/ b], both plain integer tokens; used for literals and exponents
    Rational integer_literal() {
        if (!at(Tok::Int)) fail("an integer");
        // Base 10 explicitly: the default base-0 constructor would read a
        // leading zero as an octal prefix and reject digits 8 and 9.
        const mpz_class num(peek().text, 10);
        ++pos;
        if (at(Tok::Slash)) {
            ++pos;
            if (!at(Tok::Int)) fail("a denominator");
            const mpz_class den(peek().text, 10);
            if (den == 0) throw ParseError(peek().offset, "a non-zero denominator", "0");
            ++pos;
            return Rational(num, den);
        }
        return Rational(num, 1);
    }

    Rational signed_literal() {
        bool neg = false;
        if (at(Tok::Minus)) {
            neg = true;
            ++pos;
        }
        const Rational q = integer_literal();
        return neg ? -q : q;
    }

    // INT | -INT | (signed rational)
    Rational exponent_literal() {
        if (at(Tok::LParen)) {
            ++pos;
            const Rational q = signed_literal();
            expect(Tok::RParen, "')' after the exponent");
            return q;
        }
        return signed_literal();
    }

    OpAstPtr parse_expr() {
        DepthGuard g(*this);
        std::vector<OpAstPtr> kids{parse_term()};
        while (at(Tok::Plus) || at(Tok::Minus)) {
            const bool minus = at(Tok::Minus);
            ++pos;
            OpAstPtr t = parse_term();
            if (minus) t = OpAst::product({OpAst::lit(Scalar(-1)), std::move(t)});
            kids.push_back(std::move(t));
        }
        return kids.size() == 1 ? kids[0] : OpAst::sum(std::move(kids));
    }

    OpAstPtr parse_term() {
        DepthGuard g(*this);
        std::vector<OpAstPtr> factors{parse_unary()};
        for (;;) {
            if (at(Tok::Star)) {
                ++pos;
                factors.push_back(parse_unary());
            } else if (at(Tok::LParen) || at(Tok::LBracket)) {
                factors.push_back(parse_power());  // juxtaposed group
            } else {
                break;
            }
        }
        return factors.size() == 1 ? factors[0] : OpAst::product(std::move(factors));
    }

    OpAstPtr parse_unary() {
        DepthGuard g(*this);
        if (at(Tok::Minus)) {
            ++pos;
            return OpAst::product({OpAst::lit(Scalar(-1)), parse_unary()});
        }
        return parse_power();
    }

    OpAstPtr parse_power() {
        DepthGuard g(*this);
        OpAstPtr base = parse_primary();
        if (!at(Tok::Caret)) return base;
        const std::size_t at_caret = peek().offset;
        ++pos;
        const Rational e = exponent_literal();
        return apply_exponent(std::move(base), e, at_caret);
    }

    OpAstPtr apply_exponent(OpAstPtr base, const Rational& e, std::size_t off) {
        // Pure function factors fold here (x^(3/2), exp(...)^2, and
        // nested (x^2)^2); pi keeps quarter powers; the rest goes
        // through the generic power node.
        if (base->kind == OpAst::Kind::FnLit) {
            if (!e.is_half_integer())
                throw ParseError(off, "an exponent with denominator 1 or 2", e.str());
            return OpAst::lit(base->fn.pow(e));
        }
        if (base->kind == OpAst::Kind::ScalarLit && base->scalar == Scalar::pi_quarter(4)) {
            const Rational quarters = e * Rational(4);
            if (!quarters.is_integer())
                throw ParseError(off, "a pi exponent with denominator 1, 2 or 4", e.str());
            return OpAst::lit(Scalar::pi_quarter(static_cast<int>(quarters.to_long())));
        }
        if (base->kind == OpAst::Kind::Momentum) {
            if (!e.is_integer() || e.is_negative())
                throw ParseError(off, "a non-negative integer exponent on p", e.str());
        }
        return OpAst::power(std::move(base), e);
    }

    OpAstPtr parse_primary() {
        DepthGuard g(*this);
        const Lexeme& l = peek();
        switch (l.kind) {
            case Tok::Int:
                return OpAst::lit(Scalar(integer_literal()));
            case Tok::LParen: {
                ++pos;
                OpAstPtr inner = parse_expr();
                expect(Tok::RParen, "')'");
                return inner;
            }
            case Tok::LBracket: {
                ++pos;
                OpAstPtr a = parse_expr();
                expect(Tok::Comma, "',' between commutator slots");
                OpAstPtr b = parse_expr();
                expect(Tok::RBracket, "']'");
                return OpAst::commutator(std::move(a), std::move(b));
            }
            case Tok::Ident:
                return parse_ident();
            default:
                fail("an expression");
        }
    }

    OpAstPtr parse_ident() {
        const Lexeme l = peek();
        ++pos;
        if (l.text == "x" || l.text == "r" || l.text == "rho")
            return OpAst::lit(FunctionFactor::x_pow(Rational(1)));
        if (l.text == "p") return OpAst::momentum();
        if (l.text == "i") return OpAst::lit(Scalar::i());
        if (l.text == "pi") return OpAst::lit(Scalar::pi_quarter(4));
        if (l.text == "sqrt") {
            expect(Tok::LParen, "'(' after sqrt");
            const std::size_t at_arg = peek().offset;
            const Rational q = signed_literal();
            if (!q.is_positive()) throw ParseError(at_arg, "a positive radicand", q.str());
            expect(Tok::RParen, "')' after the radicand");
            return OpAst::lit(Scalar::sqrt_rational(q));
        }
        if (l.text == "exp") {
            expect(Tok::LParen, "'(' after exp");
            OpAstPtr inner = parse_expr();
            expect(Tok::RParen, "')' after the exponent");
            return make_exp(inner, l.offset);
        }
        if (l.text == "A" || l.text == "Adag" || l.text == "H") return parse_macro(l);
        throw ParseError(l.offset, "an operator atom", "'" + l.text + "'");
    }

    OpAstPtr parse_macro(const Lexeme& name) {
        expect(Tok::LParen, "'(' after the operator name");
        if (!at(Tok::Ident)) fail("a system name");
        const Lexeme sysname = peek();
        const auto id = system_from_name(sysname.text);
        if (!id) throw ParseError(sysname.offset, "a system name", "'" + sysname.text + "'");
        ++pos;
        expect(Tok::Comma, "',' before the level");
        const std::size_t at_level = peek().offset;
        const Rational lev = signed_literal();
        if (!lev.is_integer() || lev.is_negative())
            throw ParseError(at_level, "a non-negative integer level", lev.str());
        expect(Tok::RParen, "')' after the level");
        const long level = lev.to_long();
        if (name.text == "A") return OpAst::lit(lowering_op(*id, level));
        if (name.text == "Adag") return OpAst::lit(raising_op(*id, level));
        return OpAst::lit(hamiltonian(*id, level));
    }

    // exp-argument: a momentum-free polynomial in x of degree <= 2 with
    // rational coefficients and no constant term.
    OpAstPtr make_exp(const OpAstPtr& inner, std::size_t off) {
        OpExpr e;
        try {
            e = normal_order(inner);
        } catch (const ParseError&) {
            throw;
        } catch (const Error& err) {
            throw ParseError(off, "a polynomial exponent", err.what());
        }
        Rational g, lin;
        for (const auto& t : e.terms()) {
            if (t.mom != 0)
                throw ParseError(off, "a momentum-free exponent", "momentum inside exp");
            if (!t.fn.gauss.is_zero() || !t.fn.linear.is_zero())
                throw ParseError(off, "a polynomial exponent", "nested exp");
            if (!t.coeff.is_rational())
                throw ParseError(off, "rational coefficients inside exp", "an irrational one");
            if (t.fn.power == Rational(1))
                lin = t.coeff.rational_value();
            else if (t.fn.power == Rational(2))
                g = t.coeff.rational_value();
            else if (t.fn.power.is_zero())
                throw ParseError(off, "no constant term inside exp", t.coeff.rational_value().str());
            else
                throw ParseError(off, "powers 1 or 2 inside exp", "x^" + t.fn.power.str());
        }
        return OpAst::lit(FunctionFactor{Rational(0), g, lin});
    }
};

}  // namespace

OpAstPtr parse_operator(const std::string& src) {
    Parser p{lex(src)};
    OpAstPtr ast = p.parse_expr();
    if (!p.at(Tok::End)) p.fail("end of input");
    return ast;
}

OpExpr evaluate_operator(const std::string& src) { return normal_order(parse_operator(src)); }

}  // namespace ladderkit
