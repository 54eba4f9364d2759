#include "floq/exact.hpp"

#include <cmath>

namespace floq {

Complex influence_functional(const SystemSpec& sys, int n, int m, double t) {
    if (n < 0 || m < 0 || n >= sys.space.dim || m >= sys.space.dim)
        throw DimensionMismatch("influence_functional: level index out of range");
    if (n == m) return 1.0;
    double G = integral_G(sys.bath, t);
    double Gam = integral_Gamma(sys.bath, t);
    double dn = double(n), dm = double(m);
    return std::exp(Complex(-Gam * (dn - dm) * (dn - dm), G * (dn * dn - dm * dm)));
}

DensityMatrix evolve_exact(const DensityMatrix& rho0, const SystemSpec& sys, double t) {
    if (!(rho0.space == sys.space))
        throw DimensionMismatch("evolve_exact: state space does not match system");
    double G = integral_G(sys.bath, t);
    double Gam = integral_Gamma(sys.bath, t);
    Mat out = rho0.elements;
    int dim = sys.space.dim;
    for (int n = 0; n < dim; ++n) {
        for (int m = 0; m < dim; ++m) {
            if (n == m) continue;
            double dn = double(n), dm = double(m);
            double phase = -(dn - dm) * sys.omega * t + G * (dn * dn - dm * dm);
            out(n, m) *= std::exp(Complex(-Gam * (dn - dm) * (dn - dm), phase));
        }
    }
    return {sys.space, std::move(out)};
}

double return_probability(const DensityMatrix& rho_t, const DensityMatrix& rho_0) {
    if (!(rho_t.space == rho_0.space))
        throw DimensionMismatch("return_probability: spaces differ");
    return (rho_t.elements * rho_0.elements).trace().real();
}

double linear_entropy(const DensityMatrix& rho) { return 1.0 - purity(rho); }

double n2_expectation(const DensityMatrix& rho) {
    double acc = 0.0;
    for (int n = 0; n < rho.space.dim; ++n)
        acc += double(n) * double(n) * rho.elements(n, n).real();
    return acc;
}

double n_expectation(const DensityMatrix& rho) {
    double acc = 0.0;
    for (int n = 0; n < rho.space.dim; ++n) acc += double(n) * rho.elements(n, n).real();
    return acc;
}

}  // namespace floq
