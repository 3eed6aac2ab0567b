#include "ladderkit/render.hpp"

namespace ladderkit {

namespace {

// "3" or "(3/2)"
std::string rat_text(const Rational& q) {
    if (q.is_integer()) return q.str();
    return "(" + q.str() + ")";
}

// exponent suffix: "" for 1, "^2", "^(3/2)", "^(-1)"
std::string exp_text(const Rational& e) {
    if (e.is_one()) return "";
    if (e.is_integer() && e.is_positive()) return "^" + e.str();
    return "^(" + e.str() + ")";
}

bool display_negative(const Scalar& c) {
    if (c.im().is_zero()) return c.re().is_negative();
    if (c.re().is_zero()) return c.im().is_negative();
    return false;  // mixed signs stay inside the parenthesized form
}

// Magnitude of a scalar already known to be display-positive.
std::string scalar_magnitude(const Scalar& c) {
    std::vector<std::string> parts;
    const bool mixed = !c.re().is_zero() && !c.im().is_zero();
    if (mixed) {
        std::string s = rat_text(c.re());
        s += c.im().is_negative() ? " - " : " + ";
        const Rational a = c.im().abs();
        s += a.is_one() ? "i" : rat_text(a) + "*i";
        parts.push_back("(" + s + ")");
    } else {
        const Rational& q = c.im().is_zero() ? c.re() : c.im();
        if (!q.is_one()) parts.push_back(rat_text(q));
        if (!c.im().is_zero()) parts.push_back("i");
    }
    if (!c.radicand().is_one()) parts.push_back("sqrt(" + c.radicand().str() + ")");
    if (c.pi4() != 0) parts.push_back("pi" + exp_text(Rational(c.pi4(), 4)));
    if (parts.empty()) return "1";
    std::string out = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) out += "*" + parts[i];
    return out;
}

std::string fn_exp_argument(const FunctionFactor& f, const std::string& coord) {
    std::string out;
    const std::pair<const Rational*, std::string> pieces[2] = {{&f.gauss, coord + "^2"},
                                                               {&f.linear, coord}};
    for (const auto& [coef, sym] : pieces) {
        if (coef->is_zero()) continue;
        const Rational a = coef->abs();
        std::string body = a.is_one() ? sym : rat_text(a) + "*" + sym;
        if (out.empty())
            out = (coef->is_negative() ? "-" : "") + body;
        else
            out += (coef->is_negative() ? " - " : " + ") + body;
    }
    return out;
}

std::vector<std::string> fn_pieces(const FunctionFactor& f, const std::string& coord) {
    std::vector<std::string> parts;
    if (!f.power.is_zero()) parts.push_back(coord + exp_text(f.power));
    if (!f.gauss.is_zero() || !f.linear.is_zero())
        parts.push_back("exp(" + fn_exp_argument(f, coord) + ")");
    return parts;
}

struct TermText {
    bool neg;
    std::string body;
};

TermText term_text(const Term& t, const std::string& coord) {
    const bool neg = display_negative(t.coeff);
    const Scalar mag = neg ? -t.coeff : t.coeff;
    std::vector<std::string> parts;
    std::string coeff = scalar_magnitude(mag);
    for (auto& p : fn_pieces(t.fn, coord)) parts.push_back(std::move(p));
    if (t.mom > 0) parts.push_back(t.mom == 1 ? "p" : "p^" + std::to_string(t.mom));
    if (parts.empty() || coeff != "1") parts.insert(parts.begin(), std::move(coeff));
    std::string body = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) body += "*" + parts[i];
    return {neg, std::move(body)};
}

std::string join_terms(const std::vector<TermText>& ts) {
    if (ts.empty()) return "0";
    std::string out = (ts[0].neg ? "-" : "") + ts[0].body;
    for (std::size_t i = 1; i < ts.size(); ++i)
        out += (ts[i].neg ? " - " : " + ") + ts[i].body;
    return out;
}

// ---- latex ----

std::string latex_rational(const Rational& q) {
    if (q.is_integer()) return q.str();
    const std::string sign = q.is_negative() ? "-" : "";
    return sign + "\\frac{" + q.abs().num().get_str() + "}{" + q.den().get_str() + "}";
}

std::string latex_magnitude(const Scalar& c) {
    // display-positive input
    std::vector<std::string> parts;
    const bool mixed = !c.re().is_zero() && !c.im().is_zero();
    std::string rad;
    if (!c.radicand().is_one()) rad = "\\sqrt{" + c.radicand().str() + "}";
    if (mixed) {
        std::string s = latex_rational(c.re());
        s += c.im().is_negative() ? " - " : " + ";
        const Rational a = c.im().abs();
        s += a.is_one() ? "i" : latex_rational(a) + " i";
        parts.push_back("\\left(" + s + "\\right)");
        if (!rad.empty()) parts.push_back(rad);
    } else {
        const Rational& q = c.im().is_zero() ? c.re() : c.im();
        if (!rad.empty() && q.num() == 1 && q.den() == c.radicand().num() &&
            c.radicand().is_integer()) {
            // (1/r) sqrt(r) = 1/sqrt(r)
            parts.push_back("\\frac{1}{" + rad + "}");
        } else {
            if (!q.is_one()) parts.push_back(latex_rational(q));
            if (!rad.empty()) parts.push_back(rad);
        }
        if (!c.im().is_zero()) parts.push_back("i");
    }
    if (c.pi4() != 0) {
        const Rational e(c.pi4(), 4);
        parts.push_back(e.is_one() ? "\\pi" : "\\pi^{" + e.str() + "}");
    }
    if (parts.empty()) return "1";
    std::string out = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) out += " " + parts[i];
    return out;
}

std::string latex_fn(const FunctionFactor& f, const std::string& coord) {
    std::string out;
    if (!f.power.is_zero()) {
        out = coord;
        if (!f.power.is_one()) out += "^{" + f.power.str() + "}";
    }
    if (!f.gauss.is_zero() || !f.linear.is_zero()) {
        std::string arg;
        const std::pair<const Rational*, std::string> pieces[2] = {
            {&f.gauss, coord + "^{2}"}, {&f.linear, coord}};
        for (const auto& [coef, sym] : pieces) {
            if (coef->is_zero()) continue;
            const Rational a = coef->abs();
            std::string body = a.is_one() ? sym : latex_rational(a) + " " + sym;
            if (arg.empty())
                arg = (coef->is_negative() ? "-" : "") + body;
            else
                arg += (coef->is_negative() ? " - " : " + ") + body;
        }
        if (!out.empty()) out += " ";
        out += "e^{" + arg + "}";
    }
    return out;
}

bool is_gaussian_rational(const Scalar& c) { return c.radicand().is_one() && c.pi4() == 0; }

// Storage keeps terms fully ascending; for display, higher momentum powers
// lead but function factors stay ascending within each momentum power.
std::vector<const Term*> display_order(const std::vector<Term>& ts) {
    std::vector<const Term*> out;
    out.reserve(ts.size());
    std::size_t hi = ts.size();
    while (hi > 0) {
        std::size_t lo = hi;
        while (lo > 0 && ts[lo - 1].mom == ts[hi - 1].mom) --lo;
        for (std::size_t i = lo; i < hi; ++i) out.push_back(&ts[i]);
        hi = lo;
    }
    return out;
}

std::string latex_terms(const OpExpr& e, const std::string& coord, const Scalar& divide_out) {
    std::string out;
    bool first = true;
    for (const Term* tp : display_order(e.terms())) {
        const Scalar c = tp->coeff / divide_out;
        const bool neg = display_negative(c);
        const Scalar mag = neg ? -c : c;
        std::vector<std::string> parts;
        std::string coeff = latex_magnitude(mag);
        const std::string fn = latex_fn(tp->fn, coord);
        if (!fn.empty()) parts.push_back(fn);
        if (tp->mom > 0)
            parts.push_back(tp->mom == 1 ? "p" : "p^{" + std::to_string(tp->mom) + "}");
        if (parts.empty() || coeff != "1") parts.insert(parts.begin(), std::move(coeff));
        std::string body = parts[0];
        for (std::size_t i = 1; i < parts.size(); ++i) body += " " + parts[i];
        if (first) {
            out = (neg ? "-" : "") + body;
            first = false;
        } else {
            out += (neg ? " - " : " + ") + body;
        }
    }
    return out.empty() ? "0" : out;
}

nlohmann::json json_int(const mpz_class& z) {
    if (z.fits_slong_p()) return static_cast<long>(z.get_si());
    return z.get_str();
}

}  // namespace

std::string render_text(const Scalar& c) {
    if (c.is_zero()) return "0";
    if (display_negative(c)) return "-" + scalar_magnitude(-c);
    return scalar_magnitude(c);
}

std::string render_text(const FunctionFactor& f, const std::string& coord) {
    auto parts = fn_pieces(f, coord);
    if (parts.empty()) return "1";
    std::string out = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) out += "*" + parts[i];
    return out;
}

std::string render_text(const OpExpr& e, const std::string& coord) {
    std::vector<TermText> ts;
    for (const Term* tp : display_order(e.terms())) ts.push_back(term_text(*tp, coord));
    return join_terms(ts);
}

std::string render_text(const Polynomial& p, const std::string& symbol) {
    std::vector<TermText> ts;
    for (long j = 0; j <= p.degree(); ++j) {
        const Scalar c = p.coeff(j);
        if (c.is_zero()) continue;
        const bool neg = display_negative(c);
        const Scalar mag = neg ? -c : c;
        std::string coeff = scalar_magnitude(mag);
        std::string body;
        if (j == 0)
            body = std::move(coeff);
        else {
            const std::string u = j == 1 ? symbol : symbol + "^" + std::to_string(j);
            body = coeff == "1" ? u : coeff + "*" + u;
        }
        ts.push_back({neg, std::move(body)});
    }
    return join_terms(ts);
}

std::string argument_text(const PolyArg& arg, const std::string& coord) {
    const std::string base = arg.xpow == 1 ? coord : coord + "^" + std::to_string(arg.xpow);
    if (arg.scale.is_one()) return base;
    return rat_text(arg.scale) + "*" + base;
}

std::string render_latex(const Scalar& c) {
    if (c.is_zero()) return "0";
    if (display_negative(c)) return "-" + latex_magnitude(-c);
    return latex_magnitude(c);
}

std::string render_latex(const OpExpr& e, const std::string& coord) {
    if (e.is_zero()) return "0";
    const auto& ts = e.terms();
    if (ts.size() >= 2) {
        // leading display term's coefficient as the common factor
        const Scalar f = display_order(ts).front()->coeff;
        if (!is_gaussian_rational(f)) {
            bool ok = true;
            for (const auto& t : ts)
                if (!is_gaussian_rational(t.coeff / f)) {
                    ok = false;
                    break;
                }
            if (ok)
                return latex_magnitude(f) + "\\left(" + latex_terms(e, coord, f) + "\\right)";
        }
    }
    return latex_terms(e, coord, Scalar(1));
}

std::string render_latex(const Wavefunction& w, const std::string& coord) {
    // Positive-real convention: the i^phase carried by the raw ladder
    // product is metadata, never part of the displayed profile.
    std::string out = render_latex(w.norm);
    const std::string env = latex_fn(w.envelope, coord);
    if (!env.empty()) out += " \\, " + env;
    if (w.poly.degree() > 0) {
        // spell the argument in the coordinate
        std::string u;
        const PolyArg& arg = w.poly.arg();
        const std::string base = arg.xpow == 1 ? coord : coord + "^{" + std::to_string(arg.xpow) + "}";
        if (arg.scale.is_one())
            u = base;
        else if (arg.scale.is_integer())
            u = arg.scale.str() + " " + base;
        else
            u = "\\frac{" + arg.scale.num().get_str() + " " + base + "}{" +
                arg.scale.den().get_str() + "}";
        std::string poly;
        bool first = true;
        for (long j = 0; j <= w.poly.degree(); ++j) {
            const Scalar c = w.poly.coeff(j);
            if (c.is_zero()) continue;
            const bool neg = display_negative(c);
            const Scalar mag = neg ? -c : c;
            std::string coeff = latex_magnitude(mag);
            std::string body;
            if (j == 0)
                body = std::move(coeff);
            else {
                // a bare coordinate argument needs no inner parentheses
                const bool atom = arg.scale.is_one() && arg.xpow == 1;
                std::string up = atom ? u : "\\left(" + u + "\\right)";
                if (j > 1) up += "^{" + std::to_string(j) + "}";
                body = coeff == "1" ? up : coeff + " " + up;
            }
            if (first) {
                poly = (neg ? "-" : "") + body;
                first = false;
            } else {
                poly += (neg ? " - " : " + ") + body;
            }
        }
        out += " \\left(" + poly + "\\right)";
    }
    return out;
}

nlohmann::json json_of(const Rational& q) {
    return nlohmann::json::array({json_int(q.num()), json_int(q.den())});
}

nlohmann::json json_of(const Scalar& c) {
    return {{"re", json_of(c.re())},
            {"im", json_of(c.im())},
            {"sqrt", json_of(c.radicand())},
            {"pi4", c.pi4()}};
}

nlohmann::json json_of(const FunctionFactor& f) {
    return {{"power", json_of(f.power)}, {"gauss", json_of(f.gauss)}, {"linear", json_of(f.linear)}};
}

nlohmann::json json_of(const Polynomial& p) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (long j = 0; j <= p.degree(); ++j) coeffs.push_back(json_of(p.coeff(j)));
    return {{"arg", p.arg().label}, {"coeffs", coeffs}};
}

nlohmann::json json_of(const OpExpr& e) {
    nlohmann::json terms = nlohmann::json::array();
    const auto& ts = e.terms();
    for (auto it = ts.rbegin(); it != ts.rend(); ++it)
        terms.push_back({{"coeff", json_of(it->coeff)}, {"fn", json_of(it->fn)}, {"mom", it->mom}});
    return {{"terms", terms}};
}

nlohmann::json json_of(const Wavefunction& w) {
    return {{"system", system(w.sys).name},
            {"level", w.qn.level},
            {"k", w.qn.k},
            {"n", principal_n(w.sys, w.qn)},
            {"energy", json_of(w.energy)},
            {"norm", json_of(w.norm)},
            {"poly", json_of(w.poly)},
            {"envelope", json_of(w.envelope)},
            {"measure_exponent", w.measure_exponent},
            {"phase", w.phase}};
}

}  // namespace ladderkit
