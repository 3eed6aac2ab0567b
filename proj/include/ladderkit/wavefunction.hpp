#pragma once

#include "ladderkit/rodrigues.hpp"
#include "ladderkit/systems.hpp"

namespace ladderkit {

// Radial (or line) eigenfunction in factored exact form.  The stored
// data is positive-real; the physical state is i^phase times it.
struct Wavefunction {
    SystemId sys = SystemId::sho1d;
    QuantumNumbers qn;
    Scalar norm;              // positive real
    Polynomial poly;          // in the canonical argument u
    FunctionFactor envelope;  // x^a exp(g x^2 + b x)
    int measure_exponent = 0;
    int phase = 0;
    Rational energy;
};

// x^level times the nodeless gaussian/exponential at `level`.
FunctionFactor ground_envelope(SystemId id, long level);
// Envelope of the (level, k) state: x^level with the exponential taken
// from the top of the chain at level + k.
FunctionFactor target_envelope(SystemId id, const QuantumNumbers& qn);

// Exact normalization of the k = 0 state, from closed-form moment
// integrals of the envelope...
Scalar ground_norm_constant(SystemId id, long level);
// ...and the quoted closed forms, which must agree exactly.
Scalar ground_norm_constant_closed(SystemId id, long level);

// i-power carried by the raw ladder product relative to the
// positive-real convention: k steps contribute (-i)^k on the radial
// systems and (+i)^n on the line.
int expected_phase(SystemId id, const QuantumNumbers& qn);

Wavefunction ground_wavefunction(SystemId id, long level);
// Route 1: closed polynomial from nested commutators, norm assembled
// from the chain product, the ladder scale and the ground constant.
Wavefunction build_by_rodrigues(SystemId id, const QuantumNumbers& qn);
// Route 2: raise the chain-top ground k times inside the algebra and
// factor the result.
Wavefunction build_by_ladder(SystemId id, const QuantumNumbers& qn);

// Exact agreement of the two routes: identical envelope, phase, energy
// and norm*coefficient products (the factorization into norm and
// polynomial may differ).
bool routes_agree(const Wavefunction& a, const Wavefunction& b);

// H psi == E psi, exactly, inside the operator algebra.
bool eigencheck(const Wavefunction& w);

// Exact count of interior nodes: positive-coordinate roots for radial
// systems, real-line roots on the line.
long node_count(const Wavefunction& w);

// Exact <a|b> over the system measure, including the relative i-power
// of the two states.  Works whenever the product envelope is a pure
// gaussian or a pure exponential (true for every state built here).
Scalar exact_inner_product(const Wavefunction& a, const Wavefunction& b);
Scalar exact_norm_square(const Wavefunction& w);

// integral_0^inf x^A exp(G x^2 + L x) dx in closed form; requires A a
// non-negative integer and either G < 0 = L or L < 0 = G.
Scalar half_line_moment(long a_pow, const Rational& g, const Rational& lin);

// The quoted closed-form 3D Coulomb constant, rebuilt from scratch...
Scalar coulomb_norm_rederived(long n, long l);
// ...and the shipped variant with (n+1)! in place of (n+l)!.
Scalar coulomb_norm_printed(long n, long l);

// Radial-function view for operator application.
FnState to_state(const Wavefunction& w);

// Repeated evaluation with all constants frozen to doubles.
class WavefunctionEvaluator {
  public:
    explicit WavefunctionEvaluator(const Wavefunction& w, unsigned precision = 64);
    double operator()(double x) const;

  private:
    double norm_;
    std::vector<double> coeffs_;
    int xpow_;
    double scale_;
    double power_, gauss_, linear_;
};

}  // namespace ladderkit
