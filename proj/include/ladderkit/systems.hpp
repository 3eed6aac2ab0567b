#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ladderkit/fn_state.hpp"
#include "ladderkit/op_expr.hpp"

namespace ladderkit {

enum class SystemId { sho1d, osc2d, osc3d, coul2d, coul3d };

// level = angular index (l in 3D, |m| in 2D, unused on the line),
// k = chain depth above that level.
struct QuantumNumbers {
    long level = 0;
    long k = 0;
};

// W(x) = alpha/x + beta*x + gamma; lowering op is (1/sqrt2)(p - i W).
struct Superpotential {
    Rational alpha, beta, gamma;
};

struct SystemSpec {
    SystemId id;
    std::string name;
    bool radial;
    Rational kernel_shift;   // c in D_c
    Rational chain_shift;    // energy offset per chain link
    int measure_exponent;    // weight t^me in the norm integral
    std::string coordinate;  // display name: x, rho, r
};

const SystemSpec& system(SystemId id);
const std::vector<SystemId>& all_systems();
std::optional<SystemId> system_from_name(const std::string& name);

Superpotential superpotential(SystemId id, long level);

OpExpr lowering_op(SystemId id, long level);
OpExpr raising_op(SystemId id, long level);
OpExpr hamiltonian(SystemId id, long level);

// Ground (factorization) energy of H_level.
Rational factorization_energy(SystemId id, long level);
// Spectrum law in terms of (level, k).
Rational energy_law(SystemId id, const QuantumNumbers& qn);
// Principal quantum number: k, l+2k, l+k+1, m+2k, m+k+1 by system.
long principal_n(SystemId id, const QuantumNumbers& qn);
bool valid_qn(SystemId id, const QuantumNumbers& qn);

// Adag A + E(level) == H_level  and  A Adag + E(level) == H_{level+1} + shift.
bool factorization_check(SystemId id, long level);
// H_level Adag_level == Adag_level (H_{level+1} + shift).
bool intertwine_check(SystemId id, long level);

// Gauge factorization of a lowering operator: a * f == s * f * p exactly,
// with f = x^(-alpha) exp(-beta/2 x^2 - gamma x).  The normalizable ground
// state of the corresponding Hamiltonian is f * x^(-c).
struct GaugeSolution {
    FunctionFactor f;
    Scalar s;
};
GaugeSolution solve_gauge(const OpExpr& a, const Rational& c);

// Chain normalization: 1 / sqrt(prod_j (E_target - E_aux_j)) with the
// auxiliary ground energies E_aux_j = E(level+j) + j*shift.
Scalar normalization_constant(SystemId id, const QuantumNumbers& qn);
// Closed forms quoted per system; must equal the product form exactly.
Scalar normalization_constant_closed(SystemId id, const QuantumNumbers& qn);

// Degeneracy table of the factorization chain: the r-th state of the
// j-th auxiliary Hamiltonian sits at energy E_aux(j+r); states with
// equal j+r are degenerate across columns.
struct ChainEntry {
    long column;
    long row;
    Rational energy;
};
std::vector<ChainEntry> chain_energies(SystemId id, long max_level, long base_level = 0);

}  // namespace ladderkit
