#pragma once

#include <string>

#include "json.hpp"
#include "ladderkit/op_expr.hpp"
#include "ladderkit/wavefunction.hpp"

namespace ladderkit {

// Canonical plain-text forms.  Integer scalars print bare, other
// rationals as (n/d); radicals as sqrt(q); quarter powers of pi as
// pi^(1/4) etc.; momentum as p, p^2, ...; terms are listed with
// momentum descending, then powers descending.
std::string render_text(const Scalar& c);
std::string render_text(const FunctionFactor& f, const std::string& coord = "x");
std::string render_text(const OpExpr& e, const std::string& coord = "x");
// Polynomial in its abstract argument symbol (ascending powers).
std::string render_text(const Polynomial& p, const std::string& symbol = "u");

// The polynomial argument spelled in the coordinate: "x", "r^2", "(2/3)*r".
std::string argument_text(const PolyArg& arg, const std::string& coord);

std::string render_latex(const Scalar& c);
// Extracts a common irrational scalar when every cofactor is a
// Gaussian rational, e.g. \frac{1}{\sqrt{2}}\left(p - i x\right).
std::string render_latex(const OpExpr& e, const std::string& coord = "x");
std::string render_latex(const Wavefunction& w, const std::string& coord);

// Structured forms ("schema": "ladderkit/1" is added by the CLI at the
// document level).
nlohmann::json json_of(const Rational& q);
nlohmann::json json_of(const Scalar& c);
nlohmann::json json_of(const FunctionFactor& f);
nlohmann::json json_of(const Polynomial& p);
nlohmann::json json_of(const OpExpr& e);
nlohmann::json json_of(const Wavefunction& w);

}  // namespace ladderkit
