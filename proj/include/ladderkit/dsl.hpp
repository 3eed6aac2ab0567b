#pragma once

#include <string>

#include "ladderkit/op_ast.hpp"

namespace ladderkit {

// Parse the operator expression language (docs/grammar.md) into an
// unevaluated tree.  Throws ParseError with a byte offset on failure.
OpAstPtr parse_operator(const std::string& src);

// parse + normal_order in one step.
OpExpr evaluate_operator(const std::string& src);

}  // namespace ladderkit
