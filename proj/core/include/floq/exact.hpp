#ifndef FLOQ_EXACT_HPP
#define FLOQ_EXACT_HPP

#include "floq/bath.hpp"
#include "floq/fock.hpp"

namespace floq {

// Resonator of bare frequency omega coupled to a dephasing bath.
struct SystemSpec {
    double omega;
    FockSpace space;
    BathSpec bath;
};

// F_nm(t) = e^{i G(t)(n^2 - m^2)} e^{-Gamma(t)(n - m)^2}.
Complex influence_functional(const SystemSpec& sys, int n, int m, double t);

// rho_nm(t) = rho_nm(0) e^{-i(n-m) omega t} F_nm(t). Populations are fixed.
DensityMatrix evolve_exact(const DensityMatrix& rho0, const SystemSpec& sys, double t);

// R(t) = tr[rho(t) rho(0)].
double return_probability(const DensityMatrix& rho_t, const DensityMatrix& rho_0);

// L = 1 - tr[rho^2].
double linear_entropy(const DensityMatrix& rho);

// <n^2> = sum_n n^2 rho_nn; conserved under the exact evolution.
double n2_expectation(const DensityMatrix& rho);

double n_expectation(const DensityMatrix& rho);

}  // namespace floq

#endif
