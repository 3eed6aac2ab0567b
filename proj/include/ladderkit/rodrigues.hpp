#pragma once

#include "ladderkit/polynomial.hpp"
#include "ladderkit/systems.hpp"

namespace ladderkit {

// Canonical polynomial argument per system: x, x^2, 2x/n, 2x/(n-1/2).
PolyArg polynomial_argument(SystemId id, const QuantumNumbers& qn);

// Laguerre superscript attached to the angular level: l+1/2, m, 2l+1, 2m.
// Throws DomainError for the line (which carries Hermite polynomials).
Rational laguerre_alpha(SystemId id, long level);

// Classical closed form (Hermite / generalized Laguerre) in the
// canonical argument.
Polynomial reference_polynomial(SystemId id, const QuantumNumbers& qn);

// The same polynomial produced purely inside the operator algebra:
// nested commutators of momentum with the weight function, unwrapped by
// the inverse weight.  No derivative is ever taken outside the algebra.
Polynomial rodrigues_polynomial(SystemId id, const QuantumNumbers& qn);

// Exact scale relating the k-step raising product on the chain-top
// ground shape to  scale * P_k(u) * (target envelope).
Scalar rodrigues_ladder_scale(SystemId id, const QuantumNumbers& qn);

}  // namespace ladderkit
