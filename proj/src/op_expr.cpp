#include "ladderkit/op_expr.hpp"

#include <algorithm>

namespace ladderkit {

namespace {

int term_key_cmp(const Term& a, const Term& b) {
    if (a.mom != b.mom) return a.mom < b.mom ? -1 : 1;
    if (int c = a.fn.cmp(b.fn)) return c;
    if (int c = a.coeff.radicand().cmp(b.coeff.radicand())) return c;
    if (a.coeff.pi4() != b.coeff.pi4()) return a.coeff.pi4() < b.coeff.pi4() ? -1 : 1;
    return 0;
}

}  // namespace

OpExpr::OpExpr(std::vector<Term> raw) {
    std::stable_sort(raw.begin(), raw.end(),
                     [](const Term& a, const Term& b) { return term_key_cmp(a, b) < 0; });
    for (auto& t : raw) {
        if (t.coeff.is_zero()) continue;
        if (!terms_.empty() && term_key_cmp(terms_.back(), t) == 0) {
            auto sum = terms_.back().coeff.try_add(t.coeff);
            // same stratum by construction of the key
            terms_.back().coeff = *sum;
            if (terms_.back().coeff.is_zero()) terms_.pop_back();
        } else {
            terms_.push_back(std::move(t));
        }
    }
}

OpExpr OpExpr::term(const Scalar& c, const FunctionFactor& f, int mom) {
    if (mom < 0) throw AlgebraError("negative momentum power");
    if (c.is_zero()) return {};
    OpExpr e;
    e.terms_.push_back(Term{c, f, mom});
    return e;
}

bool OpExpr::momentum_free() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.mom == 0; });
}

OpExpr OpExpr::operator+(const OpExpr& o) const {
    std::vector<Term> raw = terms_;
    raw.insert(raw.end(), o.terms_.begin(), o.terms_.end());
    return OpExpr(std::move(raw));
}

OpExpr OpExpr::operator-() const {
    std::vector<Term> raw = terms_;
    for (auto& t : raw) t.coeff = -t.coeff;
    return OpExpr(std::move(raw));
}

OpExpr OpExpr::operator-(const OpExpr& o) const { return *this + (-o); }

OpExpr OpExpr::scaled(const Scalar& c) const {
    if (c.is_zero()) return {};
    std::vector<Term> raw = terms_;
    for (auto& t : raw) t.coeff = t.coeff * c;
    return OpExpr(std::move(raw));
}

OpExpr OpExpr::apply_p_left() const {
    std::vector<Term> raw;
    raw.reserve(terms_.size() * 3);
    const Scalar minus_i = -Scalar::i();
    for (const auto& t : terms_) {
        raw.push_back(Term{t.coeff, t.fn, t.mom + 1});
        for (const auto& [dc, df] : t.fn.derivative())
            raw.push_back(Term{t.coeff * minus_i * Scalar(dc), df, t.mom});
    }
    return OpExpr(std::move(raw));
}

OpExpr OpExpr::operator*(const OpExpr& o) const {
    std::vector<Term> raw;
    for (const auto& a : terms_) {
        for (const auto& b : o.terms_) {
            // a.fn p^a.mom * b.fn p^b.mom: walk p^a.mom through b.fn
            OpExpr moved = OpExpr::fn(b.fn);
            for (int k = 0; k < a.mom; ++k) moved = moved.apply_p_left();
            const Scalar c = a.coeff * b.coeff;
            for (const auto& m : moved.terms_)
                raw.push_back(Term{c * m.coeff, a.fn * m.fn, m.mom + b.mom});
        }
    }
    return OpExpr(std::move(raw));
}

OpExpr OpExpr::pow_uint(unsigned e) const {
    OpExpr acc = OpExpr::one();
    for (unsigned k = 0; k < e; ++k) acc = acc * *this;
    return acc;
}

OpExpr OpExpr::dagger() const {
    OpExpr out;
    for (const auto& t : terms_) {
        // (c f p^m)^+ = conj(c) p^m f
        out += OpExpr::term(t.coeff.conj(), FunctionFactor::one(), t.mom) * OpExpr::fn(t.fn);
    }
    return out;
}

bool OpExpr::operator==(const OpExpr& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const Term& a = terms_[i];
        const Term& b = o.terms_[i];
        if (a.mom != b.mom || a.fn != b.fn || a.coeff != b.coeff) return false;
    }
    return true;
}

}  // namespace ladderkit
