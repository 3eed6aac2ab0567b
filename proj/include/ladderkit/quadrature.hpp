#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "ladderkit/wavefunction.hpp"

namespace ladderkit {

struct QuadratureOptions {
    int order = 32;           // Gauss-Legendre points per panel
    double tol = 1e-12;       // stop when successive panel doublings agree this well
    double tail_tol = 1e-18;  // |f(T)| (1 + T^2) cutoff for the truncation point
    int max_panels = 1 << 14;
    bool parallel = true;     // OpenMP over panels; the summation order is
                              // fixed, so parallel and serial results are
                              // bit-identical
};

// Nodes and weights on [-1, 1], cached per order.
const std::vector<std::pair<double, double>>& gauss_legendre(int order);

// Composite fixed-order rule with `panels` uniform panels.
double integrate_panels(const std::function<double(double)>& f, double a, double b, int panels,
                        const QuadratureOptions& opt = {});

// Panel-doubling composite rule on [a, b].
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& opt = {});

// Integral of a decaying integrand over [0, inf) (or (-inf, inf) when
// whole_line), truncated where the weighted tail drops below tail_tol.
double integrate_decaying(const std::function<double(double)>& f, bool whole_line,
                          const QuadratureOptions& opt = {});

// <a|b> over the system measure, numerically (real stored forms).
double inner_product_numeric(const Wavefunction& a, const Wavefunction& b,
                             const QuadratureOptions& opt = {});

// Gram matrix of a family of states, row-major.
std::vector<std::vector<double>> gram_matrix(const std::vector<Wavefunction>& states,
                                             const QuadratureOptions& opt = {});

}  // namespace ladderkit
